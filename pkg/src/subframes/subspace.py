"""Frames for a subspace W of C^N.

W is always carried as an explicit ``N x r`` matrix with orthonormal
columns. A family of vectors lying in W is handled through its
coordinates ``Phi_W = W_on* Phi``, an ordinary frame for C^r whenever the
family spans W. Containment in W is checked before any coordinate
operation: the coordinate map silently drops components outside W, and
that would hide input errors. Call :func:`project` first to discard them
deliberately.
"""

from dataclasses import asdict, dataclass

import numpy as np

from ._validation import check_complex_array, check_count, check_tolerance, check_vector
from .exceptions import DimensionError, FrameError, NotInSubspaceError, NotInvertibleError
from .frames import DEFAULT_TOL, Frame, FrameReport, as_frame, classify, frame_bounds, reconstruct
from .linalg import orthonormalize, solve_hpd


@dataclass(frozen=True, eq=False)
class Subspace:
    """An r-dimensional subspace of C^N given by an orthonormal basis.

    Parameters
    ----------
    basis : ndarray, shape (N, r)
        Orthonormal columns (``basis* basis = I`` within 1e-12). Prefer
        :func:`subspace_from_spanning` to build one from arbitrary vectors.
    """

    basis: np.ndarray

    def __post_init__(self):
        b = check_complex_array(self.basis, ndim=2, name="basis", copy=True)
        n, r = b.shape
        if r > n:
            raise DimensionError(f"basis has {r} columns in C^{n}")
        gram_err = float(np.max(np.abs(b.conj().T @ b - np.eye(r))))
        if gram_err > 1e-12:
            raise FrameError(f"basis columns are not orthonormal (max |Q*Q - I| = {gram_err:.3e})")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def ambient_dim(self):
        return self.basis.shape[0]

    @property
    def dim(self):
        return self.basis.shape[1]

    @property
    def is_degenerate(self):
        """True when W is all of C^N."""
        return self.dim == self.ambient_dim

    def projector(self):
        return self.basis @ self.basis.conj().T

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def subspace_from_spanning(vectors, tol_rank=None):
    """Subspace spanned by the columns of ``vectors`` (rank decided by SVD cut)."""
    q, _ = orthonormalize(vectors, tol_rank)
    return Subspace(q)


def random_subspace(n, r, seed=None):
    """Uniformly random r-dimensional subspace of C^n."""
    n = check_count(n, "N")
    r = check_count(r, "r")
    if r > n:
        raise FrameError(f"subspace dimension r={r} exceeds N={n}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
    q, _ = np.linalg.qr(g)
    return Subspace(q)


def _check_ambient(w, dim, what="frame"):
    if dim != w.ambient_dim:
        raise DimensionError(f"{what} lives in C^{dim} but W is a subspace of C^{w.ambient_dim}")


def project(w, f):
    """Orthogonal projection ``W_on W_on* f`` onto W."""
    f = check_vector(f, w.ambient_dim)
    return w.basis @ (w.basis.conj().T @ f)


def subspace_residuals(w, vectors):
    """Norms of the components of each column of ``vectors`` orthogonal to W."""
    v = check_vector(vectors, w.ambient_dim, name="vectors")
    if v.ndim == 1:
        v = v[:, None]
    return np.linalg.norm(v - project(w, v), axis=0)


def _containment(phi, w, tol):
    residual = subspace_residuals(w, phi.matrix)
    scale = np.maximum(1.0, np.linalg.norm(phi.matrix, axis=0))
    return bool(np.all(residual <= tol * scale)), float(np.max(residual))


def _require_contained(phi, w, tol):
    phi = as_frame(phi)
    _check_ambient(w, phi.dim)
    inside, worst = _containment(phi, w, tol)
    if not inside:
        raise NotInSubspaceError(
            f"frame vectors are not contained in W (largest out-of-subspace residual {worst:.3e})",
            worst,
        )
    return phi


def coordinate_frame(phi, w):
    """Coordinates ``W_on* Phi`` of the frame vectors, as a frame for C^r."""
    phi = as_frame(phi)
    _check_ambient(w, phi.dim)
    return Frame(w.basis.conj().T @ phi.matrix)


@dataclass(frozen=True)
class SubspaceFrameReport:
    """Classification of a family of vectors relative to a subspace W.

    ``coordinate`` is the :class:`FrameReport` of the coordinate frame
    ``W_on* Phi``; its bounds are the optimal bounds of the energy
    inequality restricted to ``f`` in W.
    """

    coordinate: FrameReport
    contained_in_w: bool
    spans_w: bool
    max_residual: float
    degenerate: bool
    tolerance: float

    @property
    def is_subspace_frame(self):
        return self.contained_in_w and self.spans_w

    @property
    def is_subspace_funtf(self):
        return self.contained_in_w and self.coordinate.is_funtf

    def to_dict(self):
        d = asdict(self)
        d["is_subspace_frame"] = self.is_subspace_frame
        d["is_subspace_funtf"] = self.is_subspace_funtf
        return d


def is_subspace_frame(phi, w, tol=DEFAULT_TOL):
    """Decide whether ``span(Phi) == W``.

    Span equality is split into containment (every vector within
    ``tol * max(1, ‖phi_j‖)`` of W) and full rank of the coordinate frame
    (its lower bound exceeds ``tol``). A family spanning a strictly larger
    space fails containment even though it satisfies the restricted
    energy inequality.
    """
    tol = check_tolerance(tol)
    phi = as_frame(phi)
    _check_ambient(w, phi.dim)
    contained, worst = _containment(phi, w, tol)
    report = classify(coordinate_frame(phi, w), tol)
    return SubspaceFrameReport(
        coordinate=report,
        contained_in_w=contained,
        spans_w=report.is_frame,
        max_residual=worst,
        degenerate=w.is_degenerate,
        tolerance=tol,
    )


def subspace_frame_bounds(phi, w, tol=DEFAULT_TOL):
    """Optimal bounds of ``A‖f‖² <= sum_j |<f, phi_j>|² <= B‖f‖²`` over f in W."""
    phi = _require_contained(phi, w, check_tolerance(tol))
    return frame_bounds(coordinate_frame(phi, w))


def is_subspace_funtf(phi, w, tol=DEFAULT_TOL):
    """Whether ``Phi`` is a unit norm tight frame for W, and its bound.

    Decided on the coordinate frame: ``Phi`` is a subspace FUNTF with bound
    ``A`` exactly when ``W_on* Phi`` is a FUNTF for C^r with bound ``A``.

    Returns
    -------
    flag : bool
    bound : float
        Lower frame bound of the coordinate frame.
    """
    tol = check_tolerance(tol)
    phi = _require_contained(phi, w, tol)
    report = classify(coordinate_frame(phi, w), tol)
    return report.is_funtf, report.lower_bound


def dual_subspace_frame(phi, w, tol=DEFAULT_TOL):
    """Dual subspace frame ``W_on S_W^-1 W_on* Phi`` with ``S_W = Phi_W Phi_W*``.

    Raises
    ------
    NotInSubspaceError
        If some frame vector is not in W.
    NotInvertibleError
        If the frame does not span W.
    """
    tol = check_tolerance(tol)
    phi = _require_contained(phi, w, tol)
    coords = coordinate_frame(phi, w)
    a, _ = frame_bounds(coords)
    if a <= tol:
        raise NotInvertibleError(f"frame does not span W: lower bound on W {a:.3e} <= {tol:.3e}")
    return Frame(w.basis @ solve_hpd(coords.frame_operator(), coords.matrix))


def subspace_reconstruct(phi, w, f, tol=DEFAULT_TOL):
    """Both dual-frame expansions of a vector ``f`` in W.

    Returns
    -------
    f1 : ndarray
        ``sum_j <f, dual_j> phi_j``
    f2 : ndarray
        ``sum_j <f, phi_j> dual_j``

    Raises
    ------
    NotInSubspaceError
        If ``f`` has a component outside W larger than ``tol * max(1, ‖f‖)``.
    """
    tol = check_tolerance(tol)
    phi = as_frame(phi)
    _check_ambient(w, phi.dim)
    f = check_vector(f, w.ambient_dim)
    residual = subspace_residuals(w, f)
    scale = np.maximum(1.0, np.linalg.norm(f.reshape(f.shape[0], -1), axis=0))
    if np.any(residual > tol * scale):
        worst = float(np.max(residual))
        raise NotInSubspaceError(f"f is not in W: out-of-subspace residual norm {worst:.3e}", worst)
    dual = dual_subspace_frame(phi, w, tol)
    return reconstruct(phi, dual, f), reconstruct(dual, phi, f)
