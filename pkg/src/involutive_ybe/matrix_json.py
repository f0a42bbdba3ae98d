"""JSON matrix format.

A matrix is ``{"rows": int, "cols": int, "data": [[re, im], ...]}`` with the
entries in row-major order. Real entries may be given as bare numbers. Floats
are written with 17 significant digits so a write/read cycle is bit-exact.
"""

import json

import numpy as np

from .errors import YBEError


class MatrixFormatError(YBEError):
    pass


def _scalar(value, where):
    if isinstance(value, bool):
        raise MatrixFormatError(f"{where}: expected a number or [re, im] pair, got a boolean")
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if isinstance(value, list) and len(value) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        return complex(float(value[0]), float(value[1]))
    raise MatrixFormatError(f"{where}: expected a number or [re, im] pair, got {value!r}")


def matrix_from_obj(obj, name="matrix"):
    """Decode a parsed JSON value into a complex array.

    Besides the schema object, a bare list of rows (``[[1, 0], [0, 1]]``) is
    accepted for hand-written inputs.
    """
    if isinstance(obj, list):
        if not obj or not all(isinstance(row, list) and row for row in obj):
            raise MatrixFormatError(f"{name}: a bare matrix must be a non-empty list of rows")
        width = len(obj[0])
        if any(len(row) != width for row in obj):
            raise MatrixFormatError(f"{name}: rows have different lengths")
        return np.array(
            [[_scalar(v, f"{name}[{i}][{j}]") for j, v in enumerate(row)] for i, row in enumerate(obj)],
            dtype=np.complex128,
        )
    if not isinstance(obj, dict):
        raise MatrixFormatError(f"{name}: expected an object with rows, cols and data")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise MatrixFormatError(f"{name}: missing field {key!r}")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    for key, value in (("rows", rows), ("cols", cols)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise MatrixFormatError(f"{name}: field {key!r} must be a positive integer")
    if not isinstance(data, list):
        raise MatrixFormatError(f"{name}: field 'data' must be a list")
    if len(data) != rows * cols:
        raise MatrixFormatError(
            f"{name}: field 'data' has {len(data)} entries, expected rows*cols = {rows * cols}"
        )
    values = [_scalar(v, f"{name}.data[{i}]") for i, v in enumerate(data)]
    m = np.array(values, dtype=np.complex128).reshape(rows, cols)
    if not np.all(np.isfinite(m)):
        raise MatrixFormatError(f"{name}: entries must be finite")
    return m


def _fmt(x):
    return format(float(x), ".17g")


def dumps_matrix(m):
    m = np.asarray(m, dtype=np.complex128)
    rows, cols = m.shape
    data = ", ".join(f"[{_fmt(v.real)}, {_fmt(v.imag)}]" for v in m.ravel())
    return f'{{"rows": {rows}, "cols": {cols}, "data": [{data}]}}'


def matrix_to_obj(m):
    return json.loads(dumps_matrix(m))


def loads_json(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return matrix_from_obj(loads_json(text, str(path)), str(path))


def write_matrix(path, m):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(m) + "\n")
