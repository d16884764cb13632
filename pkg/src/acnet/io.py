"""JSON file formats for matrices, vectors and networks.

Matrix file::

    {"size": 3, "entries": [[re, im], ...]}      # size*size entries, row-major

Vector file (boundary voltages)::

    {"size": 3, "entries": [[re, im], ...]}      # size entries

Network file::

    {"boundary_count": 3, "interior_count": 1,
     "edges": [{"u": 0, "v": 1, "conductance": [re, im]}, ...]}

Floats are written with Python's shortest round-trip repr, so reading a
written file gives back the same doubles bit for bit.
"""

import json
import math

import numpy as np

from .errors import FileFormatError
from .network import Network, merge_parallel


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(str(path), "-", f"cannot read file: {exc.strerror or exc}") from exc
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FileFormatError(str(path), f"{exc.lineno}:{exc.colno}", exc.msg) from exc
    except ValueError as exc:
        raise FileFormatError(str(path), "-", str(exc)) from exc


def _dump(doc, path):
    text = json.dumps(doc, indent=1, allow_nan=False) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def _field(doc, key, path, where=""):
    if not isinstance(doc, dict):
        raise FileFormatError(str(path), where or "$", "expected a JSON object")
    if key not in doc:
        raise FileFormatError(str(path), where or "$", f"missing field {key!r}")
    return doc[key]


def _count(value, path, where, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FileFormatError(str(path), where, "expected an integer")
    if value < minimum:
        raise FileFormatError(str(path), where, f"must be at least {minimum}")
    return value


def _real(value, path, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FileFormatError(str(path), where, "expected a number")
    x = float(value)
    if not math.isfinite(x):
        raise FileFormatError(str(path), where, "non-finite number")
    return x


def _complex(value, path, where):
    if not isinstance(value, list) or len(value) != 2:
        raise FileFormatError(str(path), where, "expected a [re, im] pair")
    return complex(_real(value[0], path, where + "[0]"), _real(value[1], path, where + "[1]"))


def _pair(z):
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _entries(doc, path, expected):
    entries = _field(doc, "entries", path)
    if not isinstance(entries, list):
        raise FileFormatError(str(path), "$.entries", "expected a list")
    if len(entries) != expected:
        raise FileFormatError(str(path), "$.entries",
                              f"size mismatch: expected {expected} entries, found {len(entries)}")
    return [_complex(x, path, f"$.entries[{k}]") for k, x in enumerate(entries)]


def read_matrix(path):
    doc = _load(path)
    size = _count(_field(doc, "size", path), path, "$.size", 1)
    vals = _entries(doc, path, size * size)
    return np.array(vals, dtype=complex).reshape(size, size)


def write_matrix(m, path=None):
    """Write ``m`` to ``path``; returns the text (and only returns it when path is None)."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"matrix files hold non-empty square matrices, got shape {m.shape}")
    doc = {"size": int(m.shape[0]), "entries": [_pair(z) for z in m.ravel()]}
    return _dump(doc, path)


def read_vector(path):
    doc = _load(path)
    size = _count(_field(doc, "size", path), path, "$.size", 1)
    return np.array(_entries(doc, path, size), dtype=complex)


def write_vector(v, path=None):
    v = np.asarray(v, dtype=complex).ravel()
    return _dump({"size": int(v.size), "entries": [_pair(z) for z in v]}, path)


def read_network(path):
    """Parse a network file.  Parallel edges are summed; validity is not checked here."""
    doc = _load(path)
    b = _count(_field(doc, "boundary_count", path), path, "$.boundary_count", 0)
    n = _count(_field(doc, "interior_count", path), path, "$.interior_count", 0)
    raw = _field(doc, "edges", path)
    if not isinstance(raw, list):
        raise FileFormatError(str(path), "$.edges", "expected a list")
    triples = []
    for k, e in enumerate(raw):
        where = f"$.edges[{k}]"
        u = _count(_field(e, "u", path, where), path, where + ".u", 0)
        v = _count(_field(e, "v", path, where), path, where + ".v", 0)
        c = _complex(_field(e, "conductance", path, where), path, where + ".conductance")
        triples.append((u, v, c))
    return Network(b, n, merge_parallel(triples))


def write_network(net, path=None):
    net = net.canonical()
    doc = {
        "boundary_count": int(net.boundary_count),
        "interior_count": int(net.interior_count),
        "edges": [{"u": e.u, "v": e.v, "conductance": _pair(e.conductance)} for e in net.edges],
    }
    return _dump(doc, path)
