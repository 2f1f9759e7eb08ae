"""JSON interchange for complex matrices and CSV output for trajectories.

A matrix file looks like::

    {"rows": 2, "cols": 3, "kind": "frame", "data": [[re, im], ...]}

with ``data`` in row-major order. Floats are written with ``repr`` so a
parse/serialize round trip is bit-exact. NaN and Inf are rejected both
ways.
"""

import json
from pathlib import Path

import numpy as np

from .exceptions import FrameError

KINDS = ("frame", "subspace_basis", "vector")


class MatrixFileError(FrameError):
    """Malformed matrix file."""


def _reject_constant(name):
    raise MatrixFileError(f"non-finite value {name} in matrix file")


def matrix_to_dict(m, kind=None):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim == 1:
        m = m[:, None]
    if m.ndim != 2:
        raise MatrixFileError(f"can only serialize 2-D matrices, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise MatrixFileError("refusing to serialize NaN or Inf")
    if kind is not None and kind not in KINDS:
        raise MatrixFileError(f"unknown kind {kind!r}")
    out = {"rows": int(m.shape[0]), "cols": int(m.shape[1])}
    if kind is not None:
        out["kind"] = kind
    out["data"] = [[float(z.real), float(z.imag)] for z in m.ravel(order="C")]
    return out


def matrix_from_dict(obj):
    if not isinstance(obj, dict):
        raise MatrixFileError("matrix file must hold a JSON object")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise MatrixFileError(f"matrix file is missing key {exc.args[0]!r}") from None
    for name, val in (("rows", rows), ("cols", cols)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise MatrixFileError(f"{name} must be a positive integer, got {val!r}")
    kind = obj.get("kind")
    if kind is not None and kind not in KINDS:
        raise MatrixFileError(f"unknown kind {kind!r}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixFileError(f"data must be a list of rows*cols = {rows * cols} entries")
    flat = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(data):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise MatrixFileError(f"entry {i} is not a [re, im] pair of numbers")
        flat[i] = complex(float(pair[0]), float(pair[1]))
    if not np.all(np.isfinite(flat)):
        raise MatrixFileError("matrix file contains non-finite values")
    return flat.reshape(rows, cols), kind


def dumps_matrix(m, kind=None):
    return json.dumps(matrix_to_dict(m, kind), allow_nan=False) + "\n"


def loads_matrix(text):
    """Parse a matrix file. Returns ``(matrix, kind)``."""
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON: {exc}") from None
    return matrix_from_dict(obj)


def write_matrix(path, m, kind=None):
    Path(path).write_text(dumps_matrix(m, kind), encoding="utf-8")


def read_matrix(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads_matrix(text)


def write_trajectory(path, trajectory):
    lines = ["iteration,fp"]
    lines += [f"{i},{fp:.17g}" for i, fp in enumerate(trajectory, start=1)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_report(path, report):
    Path(path).write_text(json.dumps(report, indent=2, allow_nan=False) + "\n", encoding="utf-8")
