"""Frame potential and its minimization over products of unit spheres.

The minimizer is Riemannian gradient descent on ``(S^{2d-1})^s``: the
Euclidean gradient ``4 S phi_j`` is projected onto the tangent space of
each sphere, an Armijo backtracking step is taken, and every column is
renormalized (the retraction).

Line searches compare the *excess* potential ``FP - FP_min`` evaluated in
a cancellation-free form rather than FP itself. Near a minimizer the
decrease per step falls far below the rounding unit of FP, and comparing
raw FP values would stall the descent around gradient norms of 1e-7.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_count, check_tolerance
from .exceptions import FrameError
from .frames import DEFAULT_TOL, Frame, as_frame, random_unit_frame
from .subspace import _require_contained, coordinate_frame


def frame_potential(phi):
    """``sum_j sum_k |<phi_j, phi_k>|²``, the squared Frobenius norm of the Gram matrix."""
    m = as_frame(phi).matrix
    gram = m.conj().T @ m
    return float(np.sum(gram.real**2 + gram.imag**2))


def frame_potential_via_trace(phi):
    """``Tr(S²)`` for the frame operator ``S``; equal to :func:`frame_potential`."""
    s_op = as_frame(phi).frame_operator()
    return float(np.trace(s_op @ s_op).real)


def restricted_frame_potential(phi, w, tol=DEFAULT_TOL):
    """Frame potential of a family constrained to lie in the subspace ``w``.

    Raises
    ------
    NotInSubspaceError
        If some vector is not contained in ``w``.
    """
    return frame_potential(_require_contained(phi, w, check_tolerance(tol)))


def fp_minimum(s, d):
    """Minimum frame potential of ``s`` unit vectors in a d-dimensional space.

    ``s`` when ``s <= d`` (orthonormal sequences), ``s² / d`` otherwise
    (unit norm tight frames).
    """
    s = check_count(s, "s")
    d = check_count(d, "d")
    return float(s) if s <= d else s * s / d


def fp_gradient(phi):
    """Euclidean gradient ``4 S Phi`` with respect to the real and imaginary parts.

    Column ``j`` holds ``dFP/dRe(phi_j) + i dFP/dIm(phi_j)``.
    """
    phi = as_frame(phi)
    return 4.0 * (phi.frame_operator() @ phi.matrix)


def _tangent(m, g):
    return g - m * np.real(np.sum(m.conj() * g, axis=0))


def riemannian_gradient(phi):
    """Projection of :func:`fp_gradient` onto the tangent space of the sphere product."""
    phi = as_frame(phi)
    return _tangent(phi.matrix, fp_gradient(phi))


def _excess(m):
    # FP - fp_minimum for unit-norm columns, without subtracting large numbers.
    d, s = m.shape
    if s >= d:
        s_op = m @ m.conj().T
        dev = s_op - (np.trace(s_op).real / d) * np.eye(d)
        return float(np.sum(dev.real**2 + dev.imag**2))
    gram = m.conj().T @ m
    np.fill_diagonal(gram, 0.0)
    return float(np.sum(gram.real**2 + gram.imag**2))


def _retract(m):
    return m / np.linalg.norm(m, axis=0)


@dataclass(frozen=True)
class MinimizerConfig:
    """Hyperparameters for :func:`minimize_fp`.

    A run stops when the largest entry of the Riemannian gradient is at
    most ``grad_tol``, when backtracking can no longer decrease the
    potential, or after ``max_iters`` steps. It counts as converged when
    the final potential is within ``fp_tol * max(1, target)`` of the
    theoretical minimum.
    """

    seed: int = 0
    max_iters: int = 10000
    grad_tol: float = 1e-9
    fp_tol: float = 1e-10
    initial_step: float = 1.0
    backtrack_factor: float = 0.5
    armijo_c: float = 1e-4

    def __post_init__(self):
        check_count(self.max_iters, "max_iters", minimum=0)
        for name in ("grad_tol", "fp_tol", "initial_step", "armijo_c"):
            check_tolerance(getattr(self, name), name)
        if not 0.0 < self.backtrack_factor < 1.0:
            raise FrameError(f"backtrack_factor must lie in (0, 1), got {self.backtrack_factor}")


@dataclass(frozen=True)
class MinimizerResult:
    frame: Frame
    final_fp: float
    target_fp: float
    iterations: int
    converged: bool
    grad_norm: float
    fp_trajectory: list = field(default_factory=list)

    def to_dict(self):
        return {
            "final_fp": self.final_fp,
            "target_fp": self.target_fp,
            "iterations": self.iterations,
            "converged": self.converged,
            "grad_norm": self.grad_norm,
            "fp_trajectory": list(self.fp_trajectory),
        }


# Below this the trial step no longer changes the iterate in double precision.
_MIN_STEP = 1e-30


def minimize_from(phi, cfg=None):
    """Run the descent starting from the columns of ``phi`` (renormalized)."""
    cfg = MinimizerConfig() if cfg is None else cfg
    m = _retract(as_frame(phi).matrix)
    d, s = m.shape
    target = fp_minimum(s, d)
    excess = _excess(m)
    trajectory = []
    iterations = 0
    while True:
        s_op = m @ m.conj().T
        grad = _tangent(m, 4.0 * (s_op @ m))
        grad_norm = float(np.max(np.abs(grad)))
        if grad_norm <= cfg.grad_tol or iterations >= cfg.max_iters:
            break
        slope = float(np.sum(grad.real**2 + grad.imag**2))
        step = cfg.initial_step
        while step >= _MIN_STEP:
            trial = _retract(m - step * grad)
            trial_excess = _excess(trial)
            if trial_excess <= excess - cfg.armijo_c * step * slope and trial_excess < excess:
                break
            step *= cfg.backtrack_factor
        else:
            break
        m, excess = trial, trial_excess
        iterations += 1
        trajectory.append(target + excess)
    final_fp = target + excess
    return MinimizerResult(
        frame=Frame(m),
        final_fp=final_fp,
        target_fp=target,
        iterations=iterations,
        converged=excess <= cfg.fp_tol * max(1.0, target),
        grad_norm=grad_norm,
        fp_trajectory=trajectory,
    )


def minimize_fp(s, n, cfg=None):
    """Minimize the frame potential of ``s`` unit vectors in C^n.

    Starts from :func:`random_unit_frame` seeded with ``cfg.seed``. A
    converged result is a unit norm tight frame when ``s >= n`` and an
    orthonormal sequence when ``s <= n``. Non-convergence is reported
    through ``result.converged`` rather than raised.
    """
    cfg = MinimizerConfig() if cfg is None else cfg
    return minimize_from(random_unit_frame(s, n, cfg.seed), cfg)


def minimize_fp_subspace(s, w, cfg=None):
    """Minimize the frame potential of ``s`` unit vectors constrained to the subspace ``w``.

    The descent runs on coordinates in C^r and the minimizer is lifted by
    the orthonormal basis, which keeps vectors exactly in W and preserves
    norms and the potential.
    """
    cfg = MinimizerConfig() if cfg is None else cfg
    coords = minimize_fp(s, w.dim, cfg)
    lifted = Frame(w.basis @ coords.frame.matrix)
    return MinimizerResult(
        frame=lifted,
        final_fp=coords.final_fp,
        target_fp=coords.target_fp,
        iterations=coords.iterations,
        converged=coords.converged,
        grad_norm=coords.grad_norm,
        fp_trajectory=coords.fp_trajectory,
    )
