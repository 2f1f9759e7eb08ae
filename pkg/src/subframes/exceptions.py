"""Exception hierarchy shared by every module of the package."""


class FrameError(ValueError):
    """Base class for invalid inputs to frame computations."""


class DimensionError(FrameError):
    """Operands have incompatible shapes."""


class NotHermitianError(FrameError):
    """A matrix expected to be Hermitian is not, within tolerance."""


class NotInvertibleError(FrameError):
    """A Hermitian matrix is singular or indefinite.

    Upstream this usually means the vectors do not form a frame (or do not
    span the requested subspace).
    """


class RankError(FrameError):
    """A spanning set has numerical rank zero."""


class NotInSubspaceError(FrameError):
    """A vector lies outside a subspace beyond tolerance.

    Attributes
    ----------
    residual : float
        Norm of the component orthogonal to the subspace (the largest one
        when several vectors were checked).
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = float(residual)
