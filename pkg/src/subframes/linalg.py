"""Dense complex linear algebra kernel.

Matrices are plain ``complex128`` ndarrays. Every routine validates its
input (finite entries, compatible shapes) and is a pure function.
"""

import numpy as np
import scipy.linalg

from ._validation import check_complex_array, check_tolerance
from .exceptions import DimensionError, NotHermitianError, NotInvertibleError, RankError


def as_complex_matrix(m, name="matrix"):
    """Validate ``m`` as a finite 2-D complex matrix with positive dimensions."""
    return check_complex_array(m, ndim=2, name=name)


def adjoint(m):
    """Conjugate transpose. ``adjoint(adjoint(m))`` equals ``m`` bit for bit."""
    return as_complex_matrix(m).conj().T.copy()


def hermitian_tolerance(m):
    return 1e-8 * max(1.0, float(np.max(np.abs(m))))


def _check_hermitian(m, name="matrix"):
    m = as_complex_matrix(m, name=name)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {m.shape}")
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > hermitian_tolerance(m):
        raise NotHermitianError(f"{name} is not Hermitian (max |M - M*| = {deviation:.3e})")
    return 0.5 * (m + m.conj().T)


def hermitian_eigenvalues(m):
    """Eigenvalues of a Hermitian matrix in ascending order.

    The input is symmetrized as ``(M + M*) / 2`` before factorization, so
    Hermitian-within-rounding matrices such as ``Phi @ Phi*`` are accepted.

    Raises
    ------
    DimensionError
        If ``m`` is not square.
    NotHermitianError
        If ``max|M - M*|`` exceeds ``1e-8 * max(1, max|M|)``.
    """
    return np.linalg.eigvalsh(_check_hermitian(m))


def hermitian_eigh(m):
    """Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix."""
    return np.linalg.eigh(_check_hermitian(m))


def default_rank_tolerance(shape):
    return 1e-10 * max(shape)


def orthonormalize(vectors, tol_rank=None):
    """Orthonormal basis for the column span of ``vectors``.

    Parameters
    ----------
    vectors : array_like, shape (N, k)
        Spanning set, one vector per column. A 1-D array is one vector.
    tol_rank : float, optional
        Relative singular value cut: directions with
        ``sigma_i <= tol_rank * sigma_max`` are discarded. Defaults to
        ``1e-10 * max(N, k)``.

    Returns
    -------
    q : ndarray, shape (N, r)
        Orthonormal columns spanning the same space.
    r : int
        Numerical rank.
    """
    a = check_complex_array(vectors, ndim=(1, 2), name="vectors")
    if a.ndim == 1:
        a = a[:, None]
    tol_rank = default_rank_tolerance(a.shape) if tol_rank is None else check_tolerance(tol_rank, "tol_rank")
    u, sigma, _ = np.linalg.svd(a, full_matrices=False)
    if sigma[0] == 0.0:
        raise RankError("cannot orthonormalize a set of zero vectors")
    r = int(np.sum(sigma > tol_rank * sigma[0]))
    return u[:, :r].copy(), r


def solve_hpd(m, b):
    """Solve ``M X = B`` for Hermitian positive definite ``M``.

    Raises
    ------
    NotInvertibleError
        If ``lambda_min(M) <= 1e-10 * max(1, lambda_max(M))``.
    """
    m = _check_hermitian(m)
    b = check_complex_array(b, ndim=(1, 2), name="B")
    if b.shape[0] != m.shape[0]:
        raise DimensionError(f"B has {b.shape[0]} rows, M is {m.shape[0]}x{m.shape[0]}")
    eigs = np.linalg.eigvalsh(m)
    tol_pd = 1e-10 * max(1.0, float(eigs[-1]))
    if eigs[0] <= tol_pd:
        raise NotInvertibleError(
            f"matrix is not invertible (lambda_min = {eigs[0]:.3e} <= {tol_pd:.3e})"
        )
    factor = scipy.linalg.cho_factor(m, lower=True, check_finite=False)
    return scipy.linalg.cho_solve(factor, b, check_finite=False)
