import threading

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subframes import (
    Frame,
    analysis,
    classify,
    dual_frame,
    frame_bounds,
    frame_operator,
    harmonic_frame,
    random_unit_frame,
    reconstruct,
    synthesis,
)
from subframes.exceptions import DimensionError, FrameError, NotInvertibleError

E3 = np.eye(3, dtype=complex)
E2 = np.eye(2, dtype=complex)


def inner(x, y):
    return sum(a * b.conjugate() for a, b in zip(x, y))


def random_frame(rng, dim, s):
    return Frame(rng.standard_normal((dim, s)) + 1j * rng.standard_normal((dim, s)))


def test_frame_is_immutable():
    phi = Frame(E3)
    with pytest.raises(ValueError):
        phi.matrix[0, 0] = 5
    assert phi.dim == 3 and len(phi) == 3


def test_from_vectors_matches_matrix():
    phi = Frame.from_vectors([E2[:, 0], E2[:, 0], E2[:, 1]])
    np.testing.assert_array_equal(phi.matrix, [[1, 1, 0], [0, 0, 1]])


def test_from_vectors_ragged():
    with pytest.raises(DimensionError):
        Frame.from_vectors([np.ones(2), np.ones(3)])


def test_frame_operator_cache_is_shared_across_threads():
    phi = random_frame(np.random.default_rng(0), 4, 7)
    results = []
    threads = [threading.Thread(target=lambda: results.append(frame_operator(phi))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for s_op in results:
        np.testing.assert_array_equal(s_op, results[0])
    assert np.max(np.abs(frame_operator(phi) - phi.matrix @ phi.matrix.conj().T)) <= 1e-12


class TestAnalysisSynthesis:
    def test_onb_coefficients(self):
        f = np.array([1, 2j, 0])
        np.testing.assert_allclose(analysis(Frame(E3), f), f)

    def test_zero_signal(self):
        phi = random_frame(np.random.default_rng(1), 3, 5)
        np.testing.assert_array_equal(analysis(phi, np.zeros(3)), np.zeros(5))

    def test_analysis_matches_inner_product_loop(self):
        rng = np.random.default_rng(2)
        phi = random_frame(rng, 4, 6)
        f = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        expected = [inner(f, phi[j]) for j in range(6)]
        np.testing.assert_allclose(analysis(phi, f), expected, rtol=1e-13)

    def test_basis_coefficient_picks_vector(self):
        phi = random_frame(np.random.default_rng(3), 3, 5)
        for j in range(5):
            np.testing.assert_allclose(synthesis(phi, np.eye(5)[j]), phi[j])

    def test_synthesis_zero(self):
        phi = random_frame(np.random.default_rng(3), 3, 5)
        np.testing.assert_array_equal(synthesis(phi, np.zeros(5)), np.zeros(3))

    def test_synthesis_matches_summation(self):
        rng = np.random.default_rng(4)
        phi = random_frame(rng, 3, 5)
        c = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        expected = sum(c[j] * phi[j] for j in range(5))
        np.testing.assert_allclose(synthesis(phi, c), expected, rtol=1e-13)

    @given(st.integers(0, 2**32 - 1), st.integers(1, 6), st.integers(1, 10))
    @settings(max_examples=60, deadline=None)
    def test_adjointness(self, seed, dim, s):
        rng = np.random.default_rng(seed)
        phi = random_frame(rng, dim, s)
        f = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        c = rng.standard_normal(s) + 1j * rng.standard_normal(s)
        lhs = np.vdot(c, analysis(phi, f))  # <Lf, c>
        rhs = np.vdot(synthesis(phi, c), f)  # <f, L*c>
        scale = np.linalg.norm(f) * np.linalg.norm(c) * np.linalg.norm(phi.matrix)
        assert abs(lhs - rhs) <= 1e-10 * scale

    def test_dimension_errors(self):
        phi = Frame(E3)
        with pytest.raises(DimensionError):
            analysis(phi, np.ones(2))
        with pytest.raises(DimensionError):
            synthesis(phi, np.ones(4))


class TestFrameOperator:
    def test_onb_gives_identity(self):
        np.testing.assert_allclose(frame_operator(Frame(np.eye(4))), np.eye(4))

    def test_repeated_vector(self):
        np.testing.assert_allclose(frame_operator(Frame([[1, 1, 0], [0, 0, 1]])), np.diag([2, 1]))

    def test_matches_direct_application(self):
        rng = np.random.default_rng(6)
        phi = random_frame(rng, 4, 7)
        s_op = frame_operator(phi)
        for _ in range(10):
            f = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            direct = sum(inner(f, phi[j]) * phi[j] for j in range(7))
            np.testing.assert_allclose(s_op @ f, direct, rtol=1e-12, atol=1e-12)


class TestBounds:
    def test_onb(self):
        assert frame_bounds(Frame(E3)) == pytest.approx((1, 1))

    def test_harmonic_bound_is_redundancy(self):
        assert frame_bounds(harmonic_frame(4, 2)) == pytest.approx((2, 2), abs=1e-12)

    def test_repeated_vector(self):
        assert frame_bounds(Frame([[1, 1, 0], [0, 0, 1]])) == pytest.approx((1, 2))

    @pytest.mark.parametrize("seed", range(10))
    def test_rayleigh_quotients_and_extremal_eigenvectors(self, seed):
        rng = np.random.default_rng(seed)
        dim = int(rng.integers(1, 6))
        phi = random_frame(rng, dim, int(rng.integers(dim, 10)))
        a, b = frame_bounds(phi)
        for _ in range(50):
            f = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
            q = np.sum(np.abs(analysis(phi, f)) ** 2) / np.linalg.norm(f) ** 2
            assert a - 1e-9 <= q <= b + 1e-9
        _, vecs = np.linalg.eigh(frame_operator(phi))
        for v, target in ((vecs[:, 0], a), (vecs[:, -1], b)):
            assert np.sum(np.abs(analysis(phi, v)) ** 2) == pytest.approx(target, abs=1e-9)


class TestClassify:
    def test_onb(self):
        rep = classify(Frame(E2))
        assert rep.is_frame and rep.is_tight and rep.is_unit_norm and rep.is_funtf and rep.is_onb
        assert rep.lower_bound == pytest.approx(1) and rep.upper_bound == pytest.approx(1)

    def test_harmonic_5_3(self):
        rep = classify(harmonic_frame(5, 3))
        assert rep.is_funtf and not rep.is_onb
        assert rep.lower_bound == pytest.approx(5 / 3, abs=1e-12)

    def test_deficient_span(self):
        rep = classify(Frame(E3[:, :2]))
        assert not rep.is_frame and rep.lower_bound == 0.0 and not rep.is_funtf

    def test_not_tight(self):
        rep = classify(Frame([[1, 1, 0], [0, 0, 1]]))
        assert rep.is_frame and rep.is_unit_norm and not rep.is_tight

    def test_bad_tolerance(self):
        with pytest.raises(FrameError):
            classify(Frame(E2), 0.0)

    @given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.integers(0, 6), st.booleans())
    @settings(max_examples=80, deadline=None)
    def test_report_invariants(self, seed, dim, extra, tight):
        phi = harmonic_frame(dim + extra, dim) if tight else random_unit_frame(dim + extra, dim, seed)
        rep = classify(phi)
        assert rep.lower_bound <= rep.upper_bound
        assert rep.is_frame == (rep.lower_bound > rep.tolerance)
        if rep.is_funtf:
            assert rep.is_tight and rep.is_unit_norm
            assert abs(rep.lower_bound - phi.n_vectors / phi.dim) <= 1e-8
        if rep.is_onb:
            assert rep.is_funtf and abs(rep.lower_bound - 1) <= rep.tolerance
        # tightness agrees with S = A I
        s_op = frame_operator(phi)
        close = np.max(np.abs(s_op - rep.lower_bound * np.eye(dim))) <= rep.tolerance * max(1, rep.lower_bound)
        assert rep.is_tight == close
        if rep.is_frame:
            assert np.max(np.abs(s_op - s_op.conj().T)) <= 1e-8 * max(1, np.max(np.abs(s_op)))


class TestDual:
    def test_onb_is_self_dual(self):
        np.testing.assert_allclose(dual_frame(Frame(E3)).matrix, E3)

    def test_tight_frame_dual_is_scaled(self):
        phi = harmonic_frame(6, 4)
        np.testing.assert_allclose(dual_frame(phi).matrix, phi.matrix / 1.5, atol=1e-14)

    def test_repeated_vector(self):
        np.testing.assert_allclose(dual_frame(Frame([[1, 1, 0], [0, 0, 1]])).matrix, [[0.5, 0.5, 0], [0, 0, 1]])

    def test_refuses_non_frame(self):
        with pytest.raises(NotInvertibleError):
            dual_frame(Frame(E3[:, :2]))

    @pytest.mark.parametrize("seed", range(5))
    def test_dual_frame_operator_is_inverse(self, seed):
        phi = random_frame(np.random.default_rng(seed), 4, 7)
        inv = np.linalg.inv(frame_operator(phi))
        assert np.max(np.abs(frame_operator(dual_frame(phi)) - inv)) <= 1e-9


class TestReconstruct:
    def test_onb(self):
        f = np.array([0.3, -1j, 2])
        np.testing.assert_allclose(reconstruct(Frame(E3), Frame(E3), f), f)

    def test_harmonic_with_half_dual(self):
        phi = harmonic_frame(4, 2)
        f = np.array([1, 1j])
        np.testing.assert_allclose(reconstruct(phi, Frame(phi.matrix / 2), f), f, atol=1e-14)

    def test_random_round_trip(self):
        rng = np.random.default_rng(7)
        phi = random_frame(rng, 5, 9)
        dual = dual_frame(phi)
        worst = 0.0
        for _ in range(100):
            f = rng.standard_normal(5) + 1j * rng.standard_normal(5)
            for out in (reconstruct(phi, dual, f), reconstruct(dual, phi, f)):
                worst = max(worst, np.linalg.norm(out - f) / np.linalg.norm(f))
        assert worst <= 1e-9

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            reconstruct(Frame(E3), Frame(E3[:, :2]), np.ones(3))


class TestHarmonicFrame:
    def test_two_by_two_dft(self):
        phi = harmonic_frame(2, 2)
        np.testing.assert_allclose(phi.matrix, np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)
        assert classify(phi).is_onb

    def test_four_two(self):
        s_op = frame_operator(harmonic_frame(4, 2))
        np.testing.assert_allclose(s_op, 2 * np.eye(2), atol=1e-14)

    def test_square_is_unitary(self):
        m = harmonic_frame(3, 3).matrix
        np.testing.assert_allclose(m.conj().T @ m, np.eye(3), atol=1e-14)
        assert frame_bounds(harmonic_frame(3, 3)) == pytest.approx((1, 1), abs=1e-12)

    @pytest.mark.parametrize("s,n", [(1, 1), (7, 3), (12, 5), (16, 8)])
    def test_funtf_bound(self, s, n):
        rep = classify(harmonic_frame(s, n))
        assert rep.is_funtf and abs(rep.lower_bound - s / n) <= 1e-10

    def test_requires_s_at_least_n(self):
        with pytest.raises(FrameError):
            harmonic_frame(2, 3)


class TestRandomUnitFrame:
    def test_deterministic(self):
        np.testing.assert_array_equal(random_unit_frame(5, 3, 42).matrix, random_unit_frame(5, 3, 42).matrix)

    def test_unit_norms(self):
        norms = np.linalg.norm(random_unit_frame(20, 4, 1).matrix, axis=0)
        assert np.max(np.abs(norms - 1)) <= 1e-12

    def test_large_family_spans(self):
        assert classify(random_unit_frame(64, 4, 123)).is_frame
