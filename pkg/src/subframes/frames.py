"""Finite frames for C^d.

A frame is stored in matrix form: a ``dim x s`` complex matrix whose
columns are the frame vectors. Inner products are conjugate-linear in the
second slot, ``<x, y> = sum_k x_k conj(y_k)``, so the analysis operator is
multiplication by ``Phi*`` and the frame operator is ``Phi Phi*``.
"""

from dataclasses import asdict, dataclass

import numpy as np

from ._validation import check_complex_array, check_count, check_tolerance, check_vector
from .exceptions import DimensionError, FrameError, NotInvertibleError
from .linalg import hermitian_eigenvalues, solve_hpd

DEFAULT_TOL = 1e-8


class Frame:
    """Immutable ordered family of ``s`` vectors in C^dim.

    Parameters
    ----------
    matrix : array_like, shape (dim, s)
        Frame vectors as columns.

    Notes
    -----
    The frame operator is computed lazily and cached. The cache is filled
    by computing the full matrix first and then publishing it with a single
    attribute store, so concurrent readers either recompute or see the
    finished value.
    """

    __slots__ = ("_matrix", "_frame_operator")

    def __init__(self, matrix):
        m = check_complex_array(matrix, ndim=2, name="frame matrix", copy=True)
        m.setflags(write=False)
        self._matrix = m
        self._frame_operator = None

    @classmethod
    def from_vectors(cls, vectors):
        """Build a frame from an iterable of 1-D vectors."""
        vecs = [check_complex_array(v, ndim=1, name="frame vector") for v in vectors]
        if not vecs:
            raise FrameError("a frame needs at least one vector")
        if len({v.shape[0] for v in vecs}) != 1:
            raise DimensionError("frame vectors have different lengths")
        return cls(np.column_stack(vecs))

    @property
    def matrix(self):
        """Read-only ``dim x s`` matrix of frame vectors."""
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def n_vectors(self):
        return self._matrix.shape[1]

    def __len__(self):
        return self.n_vectors

    def __getitem__(self, j):
        return self._matrix[:, j]

    def __iter__(self):
        return iter(self._matrix.T)

    def __repr__(self):
        return f"Frame(dim={self.dim}, n_vectors={self.n_vectors})"

    def frame_operator(self):
        s_op = self._frame_operator
        if s_op is None:
            m = self._matrix
            s_op = m @ m.conj().T
            s_op = 0.5 * (s_op + s_op.conj().T)
            s_op.setflags(write=False)
            self._frame_operator = s_op
        return s_op


def as_frame(phi):
    return phi if isinstance(phi, Frame) else Frame(phi)


@dataclass(frozen=True)
class FrameReport:
    """Classification of a frame at a given tolerance."""

    lower_bound: float
    upper_bound: float
    is_frame: bool
    is_tight: bool
    is_unit_norm: bool
    is_funtf: bool
    is_onb: bool
    tolerance: float

    def to_dict(self):
        return asdict(self)


def analysis(phi, f):
    """Coefficients ``<f, phi_j>`` for ``j = 1..s``.

    ``f`` may be a vector of length ``dim`` or a ``dim x n`` matrix of
    column signals, in which case the result is ``s x n``.
    """
    phi = as_frame(phi)
    f = check_vector(f, phi.dim)
    return phi.matrix.conj().T @ f


def synthesis(phi, c):
    """Linear combination ``sum_j c_j phi_j``."""
    phi = as_frame(phi)
    c = check_complex_array(c, ndim=(1, 2), name="coefficients")
    if c.shape[0] != phi.n_vectors:
        raise DimensionError(f"expected {phi.n_vectors} coefficients, got {c.shape[0]}")
    return phi.matrix @ c


def frame_operator(phi):
    """The ``dim x dim`` frame operator ``S = Phi Phi*`` (cached on the frame)."""
    return as_frame(phi).frame_operator()


def frame_bounds(phi):
    """Optimal frame bounds ``(A, B) = (lambda_min(S), lambda_max(S))``.

    ``A`` is clipped at zero; ``A == 0`` means the vectors do not span.
    """
    eigs = hermitian_eigenvalues(frame_operator(phi))
    return max(float(eigs[0]), 0.0), max(float(eigs[-1]), 0.0)


def classify(phi, tol=DEFAULT_TOL):
    """Decide frame, tight, unit-norm, FUNTF and ONB properties.

    Parameters
    ----------
    phi : Frame or array_like
    tol : float
        Absolute tolerance for the frame test ``A > tol``, relative
        tolerance ``(B - A) / max(B, tol)`` for tightness, and absolute
        tolerance on ``|‖phi_j‖ - 1|`` for unit norm.

    Returns
    -------
    FrameReport
    """
    tol = check_tolerance(tol)
    phi = as_frame(phi)
    a, b = frame_bounds(phi)
    norms = np.linalg.norm(phi.matrix, axis=0)
    is_frame = a > tol
    is_tight = (b - a) / max(b, tol) <= tol
    is_unit_norm = bool(np.max(np.abs(norms - 1.0)) <= tol)
    is_funtf = is_frame and is_tight and is_unit_norm
    return FrameReport(
        lower_bound=a,
        upper_bound=b,
        is_frame=is_frame,
        is_tight=is_tight,
        is_unit_norm=is_unit_norm,
        is_funtf=is_funtf,
        is_onb=is_funtf and abs(a - 1.0) <= tol,
        tolerance=tol,
    )


def dual_frame(phi, tol=DEFAULT_TOL):
    """Canonical dual frame ``{S^-1 phi_j}``.

    Raises
    ------
    NotInvertibleError
        If the lower frame bound is ``<= tol``. Near-singular frames are
        refused, not regularized; use :func:`subframes.subspace.dual_subspace_frame`
        for frames of a proper subspace.
    """
    tol = check_tolerance(tol)
    phi = as_frame(phi)
    a, _ = frame_bounds(phi)
    if a <= tol:
        raise NotInvertibleError(f"not a frame for C^{phi.dim}: lower bound {a:.3e} <= {tol:.3e}")
    return Frame(solve_hpd(phi.frame_operator(), phi.matrix))


def reconstruct(phi, dual, f):
    """Evaluate ``sum_j <f, dual_j> phi_j``.

    Swapping the arguments gives the other representation,
    ``reconstruct(dual, phi, f) = sum_j <f, phi_j> dual_j``.
    """
    phi = as_frame(phi)
    dual = as_frame(dual)
    if phi.matrix.shape != dual.matrix.shape:
        raise DimensionError(
            f"frame is {phi.dim}x{phi.n_vectors} but dual is {dual.dim}x{dual.n_vectors}"
        )
    return synthesis(phi, analysis(dual, f))


def harmonic_frame(s, n):
    """The ``s``-vector harmonic FUNTF of C^n built from the first ``n`` DFT rows.

    ``phi_j[k] = exp(2 pi i j k / s) / sqrt(n)`` for ``k < n``, ``j < s``.
    Its frame bound is ``s / n``.
    """
    s = check_count(s, "s")
    n = check_count(n, "N")
    if s < n:
        raise FrameError(f"harmonic frame needs s >= N, got s={s} < N={n}")
    k = np.arange(n)[:, None]
    j = np.arange(s)[None, :]
    return Frame(np.exp(2j * np.pi * ((j * k) % s) / s) / np.sqrt(n))


def random_unit_frame(s, dim, seed=None):
    """Frame of ``s`` independent uniformly random unit vectors in C^dim.

    Vectors are complex Gaussian draws normalized to unit length; the
    output is a deterministic function of ``seed``.
    """
    s = check_count(s, "s")
    dim = check_count(dim, "dim")
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((dim, s)) + 1j * rng.standard_normal((dim, s))
    return Frame(m / np.linalg.norm(m, axis=0))
