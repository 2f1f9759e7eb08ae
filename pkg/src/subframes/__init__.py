"""Finite frames for C^N and for subspaces of C^N.

Frames are held in matrix form (``dim x s``, one vector per column). The
subpackages cover the dense linear algebra kernel, frames for the full
space, frames for a subspace given by an orthonormal basis, and the frame
potential with a minimizer that produces unit norm tight frames.
"""

__version__ = "0.1.0"

from .exceptions import (
    DimensionError,
    FrameError,
    NotHermitianError,
    NotInSubspaceError,
    NotInvertibleError,
    RankError,
)
from .frames import (
    Frame,
    FrameReport,
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
from .linalg import adjoint, hermitian_eigenvalues, orthonormalize, solve_hpd
from .potential import (
    MinimizerConfig,
    MinimizerResult,
    fp_gradient,
    fp_minimum,
    frame_potential,
    frame_potential_via_trace,
    minimize_fp,
    minimize_fp_subspace,
    restricted_frame_potential,
    riemannian_gradient,
)
from .subspace import (
    Subspace,
    SubspaceFrameReport,
    coordinate_frame,
    dual_subspace_frame,
    is_subspace_frame,
    is_subspace_funtf,
    project,
    random_subspace,
    subspace_frame_bounds,
    subspace_from_spanning,
    subspace_reconstruct,
)
from .estimators import FramePotentialMinimizer, FrameTransformer
