"""scikit-learn compatible estimators.

Following the scikit-learn convention that samples are rows, the estimators
take frames as ``(n_vectors, n_features)`` arrays (one frame vector per
row) and signals as ``(n_samples, n_features)``. ``transform`` returns
frame coefficients ``<f, phi_j>`` and ``inverse_transform`` synthesizes
with the dual frame, so ``inverse_transform(transform(X))`` reproduces any
``X`` in the span of the frame.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_complex_array
from .exceptions import DimensionError
from .frames import DEFAULT_TOL, Frame, classify, dual_frame
from .linalg import orthonormalize
from .potential import MinimizerConfig, minimize_fp, minimize_fp_subspace
from .subspace import Subspace, dual_subspace_frame, is_subspace_frame


class _FrameCodecMixin(TransformerMixin):
    def _check_signals(self, X, n_cols, name="X"):
        X = check_complex_array(X, ndim=2, name=name)
        if X.shape[1] != n_cols:
            raise DimensionError(f"{name} has {X.shape[1]} columns, expected {n_cols}")
        return X

    def transform(self, X):
        """Frame coefficients of each row of ``X``, shape ``(n_samples, n_vectors)``."""
        check_is_fitted(self, "frame_")
        X = self._check_signals(X, self.n_features_in_)
        # row form of Phi* f
        return X @ self.frame_.matrix.conj()

    def inverse_transform(self, C):
        """Synthesize ``sum_j c_j dual_j`` for each row of coefficients."""
        check_is_fitted(self, "dual_")
        C = self._check_signals(C, self.dual_.n_vectors, name="C")
        return C @ self.dual_.matrix.T

    @property
    def components_(self):
        """Frame vectors as rows, ``(n_vectors, n_features)``."""
        check_is_fitted(self, "frame_")
        return self.frame_.matrix.T.copy()


class FrameTransformer(_FrameCodecMixin, BaseEstimator):
    """Analysis/synthesis with a given frame and its canonical dual.

    Parameters
    ----------
    subspace : {"auto", "full"}, default="auto"
        ``"full"`` requires the rows of the fitted frame to span
        C^n_features. ``"auto"`` accepts frames for a proper subspace,
        taking W as their span and using the dual subspace frame.
    tol : float, default=1e-8
        Classification and containment tolerance.
    tol_rank : float or None, default=None
        Relative singular value cut used to find the span in ``"auto"`` mode.

    Attributes
    ----------
    frame_ : Frame
    dual_ : Frame
    subspace_ : Subspace
        The span of the frame (all of C^n_features for a full frame).
    report_ : FrameReport or SubspaceFrameReport
    n_features_in_ : int
    """

    def __init__(self, subspace="auto", tol=DEFAULT_TOL, tol_rank=None):
        self.subspace = subspace
        self.tol = tol
        self.tol_rank = tol_rank

    def fit(self, X, y=None):
        """Take the rows of ``X`` as frame vectors."""
        if self.subspace not in ("auto", "full"):
            raise ValueError(f"subspace must be 'auto' or 'full', got {self.subspace!r}")
        X = check_complex_array(X, ndim=2, name="X")
        frame = Frame(X.T)
        n_features = X.shape[1]
        basis, rank = orthonormalize(frame.matrix, self.tol_rank)
        if self.subspace == "full" or rank == n_features:
            self.subspace_ = Subspace(np.eye(n_features, dtype=np.complex128))
            self.dual_ = dual_frame(frame, self.tol)
            self.report_ = classify(frame, self.tol)
        else:
            self.subspace_ = Subspace(basis)
            self.dual_ = dual_subspace_frame(frame, self.subspace_, self.tol)
            self.report_ = is_subspace_frame(frame, self.subspace_, self.tol)
        self.frame_ = frame
        self.n_features_in_ = n_features
        return self


class FramePotentialMinimizer(_FrameCodecMixin, BaseEstimator):
    """Build a unit norm tight frame for the span of the training rows.

    ``fit(X)`` takes W = span of the rows of ``X`` and minimizes the frame
    potential of ``n_vectors`` unit vectors in W. When ``n_vectors`` is at
    least ``dim W`` and the run converges, the result is a unit norm tight
    frame for W with bound ``n_vectors / dim W``; otherwise it is an
    orthonormal sequence in W.

    Parameters
    ----------
    n_vectors : int
    seed : int, default=0
    max_iters, grad_tol, fp_tol, initial_step, backtrack_factor, armijo_c
        Forwarded to :class:`MinimizerConfig`.
    tol_rank : float or None
        Relative singular value cut used to find the span of ``X``.

    Attributes
    ----------
    frame_ : Frame
    dual_ : Frame
    subspace_ : Subspace
    result_ : MinimizerResult
    n_features_in_ : int
    """

    def __init__(
        self,
        n_vectors=4,
        seed=0,
        max_iters=10000,
        grad_tol=1e-9,
        fp_tol=1e-10,
        initial_step=1.0,
        backtrack_factor=0.5,
        armijo_c=1e-4,
        tol_rank=None,
    ):
        self.n_vectors = n_vectors
        self.seed = seed
        self.max_iters = max_iters
        self.grad_tol = grad_tol
        self.fp_tol = fp_tol
        self.initial_step = initial_step
        self.backtrack_factor = backtrack_factor
        self.armijo_c = armijo_c
        self.tol_rank = tol_rank

    def fit(self, X, y=None):
        X = check_complex_array(X, ndim=2, name="X")
        cfg = MinimizerConfig(
            seed=self.seed,
            max_iters=self.max_iters,
            grad_tol=self.grad_tol,
            fp_tol=self.fp_tol,
            initial_step=self.initial_step,
            backtrack_factor=self.backtrack_factor,
            armijo_c=self.armijo_c,
        )
        n_features = X.shape[1]
        basis, rank = orthonormalize(X.T, self.tol_rank)
        if rank == n_features:
            self.subspace_ = Subspace(np.eye(n_features, dtype=np.complex128))
            self.result_ = minimize_fp(self.n_vectors, n_features, cfg)
        else:
            self.subspace_ = Subspace(basis)
            self.result_ = minimize_fp_subspace(self.n_vectors, self.subspace_, cfg)
        self.frame_ = self.result_.frame
        self.n_features_in_ = n_features
        if self.n_vectors >= self.subspace_.dim:
            self.dual_ = dual_subspace_frame(self.frame_, self.subspace_)
        else:
            # an orthonormal sequence does not span W; it is its own dual on its span
            self.dual_ = self.frame_
        return self
