"""Input validation helpers.

scikit-learn's ``check_array`` refuses complex input, so the estimators and
the functional API both route through the helpers here instead.
"""

import numbers

import numpy as np

from .exceptions import DimensionError, FrameError


def check_complex_array(x, *, ndim=None, name="array", copy=False):
    """Convert ``x`` to a finite complex128 ndarray.

    Parameters
    ----------
    x : array_like
        Input data. Real input is promoted to complex.
    ndim : int or tuple of int, optional
        Allowed numbers of dimensions.
    name : str
        Used in error messages.
    copy : bool
        Force a copy even if ``x`` already is a complex128 array.

    Returns
    -------
    ndarray of complex128
    """
    arr = np.array(x, dtype=np.complex128, copy=True) if copy else np.asarray(x, dtype=np.complex128)
    if ndim is not None:
        allowed = (ndim,) if isinstance(ndim, int) else tuple(ndim)
        if arr.ndim not in allowed:
            raise DimensionError(f"{name} must have ndim in {allowed}, got {arr.ndim}")
    if arr.size == 0:
        raise DimensionError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise FrameError(f"{name} contains NaN or Inf")
    return arr


def check_tolerance(tol, name="tol"):
    if not isinstance(tol, numbers.Real) or isinstance(tol, bool) or not np.isfinite(tol) or tol <= 0:
        raise FrameError(f"{name} must be a positive finite real, got {tol!r}")
    return float(tol)


def check_count(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise FrameError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def check_vector(f, dim, name="f"):
    """Validate a signal: 1-D of length ``dim`` or 2-D with ``dim`` rows (one signal per column)."""
    f = check_complex_array(f, ndim=(1, 2), name=name)
    if f.shape[0] != dim:
        raise DimensionError(f"{name} has leading dimension {f.shape[0]}, expected {dim}")
    return f
