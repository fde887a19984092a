"""JSON codecs for carrier values, matrices, graphs, and factor triples.

Wire format, shared with the command line front end:

* scalar: JSON number or boolean; the infinities are the strings
  "-inf" and "inf"; under a lifted interval descriptor a scalar is a
  two-element array [lo, hi].
* matrix: {"rows": m, "cols": n, "data": [[...], ...]} row-major.
* graph:  {"n": nodes, "arcs": [[from, to, weight], ...]} with
  1-based node indices; absent arcs carry no entry.
* factor triple: {"l": matrix, "d": [diagonal...], "m": matrix}.

``dumps`` emits one canonical byte form (sorted keys, no whitespace)
so equal values always serialize identically.  All decoding errors
are raised as ParseError naming the offending field.
"""

import json

from .errors import ParseError, SemiringError
from .graphs import WeightedDigraph
from .ldm import LdmTriple
from .matrices import Matrix
from .scalars import NEG_INF, POS_INF
from .semirings import SemiringDescriptor

__all__ = ["scalar_to_json", "scalar_from_json", "matrix_to_json",
           "matrix_from_json", "graph_to_json", "graph_from_json",
           "triple_to_json", "triple_from_json", "dumps", "loads"]


def scalar_to_json(descriptor: SemiringDescriptor, v):
    base = descriptor.base
    if base is not None:
        return [scalar_to_json(base, v[0]), scalar_to_json(base, v[1])]
    if v is NEG_INF:
        return "-inf"
    if v is POS_INF:
        return "inf"
    return v


def _decode_tokens(descriptor, value, where):
    # resolve tokens to carrier-shaped values; validation happens in coerce
    base = descriptor.base
    if base is not None:
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ParseError(f"interval scalars are [lo, hi] pairs, got {value!r}",
                             context=where)
        return (_decode_tokens(base, value[0], where + "[lo]"),
                _decode_tokens(base, value[1], where + "[hi]"))
    if isinstance(value, str):
        s = value.strip()
        if s == "-inf":
            return NEG_INF
        if s in ("inf", "+inf"):
            return POS_INF
        if s == "true":
            return True
        if s == "false":
            return False
        raise ParseError(f"unknown scalar token {value!r}", context=where)
    if isinstance(value, (bool, int, float)):
        return value
    raise ParseError(f"not a scalar: {value!r}", context=where)


def scalar_from_json(descriptor: SemiringDescriptor, value, where="value"):
    decoded = _decode_tokens(descriptor, value, where)
    try:
        return descriptor.coerce(decoded)
    except ParseError:
        raise
    except SemiringError as exc:
        raise ParseError(str(exc), context=where) from exc


def matrix_to_json(A: Matrix) -> dict:
    d = A.descriptor
    return {"rows": A.rows, "cols": A.cols,
            "data": [[scalar_to_json(d, v) for v in row] for row in A.to_lists()]}


def matrix_from_json(descriptor: SemiringDescriptor, obj,
                     where="matrix") -> Matrix:
    if not isinstance(obj, dict) or "data" not in obj:
        raise ParseError('expected an object with a "data" field', context=where)
    data = obj["data"]
    if not isinstance(data, list) or not data \
            or not all(isinstance(row, list) and row for row in data):
        raise ParseError('"data" must be a non-empty array of non-empty rows',
                         context=where)
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise ParseError("rows have unequal lengths", context=where)
    for key, expect in (("rows", len(data)), ("cols", width)):
        if key in obj and obj[key] != expect:
            raise ParseError(f'"{key}" says {obj[key]} but data has {expect}',
                             context=where)
    rows = [[scalar_from_json(descriptor, v, f"{where}.data[{i}][{j}]")
             for j, v in enumerate(row)] for i, row in enumerate(data)]
    return Matrix._wrap(descriptor, rows)


def graph_to_json(g: WeightedDigraph) -> dict:
    d = g.descriptor
    return {"n": g.n,
            "arcs": [[u, v, scalar_to_json(d, w)] for u, v, w in g.arcs]}


def graph_from_json(descriptor: SemiringDescriptor, obj,
                    where="graph") -> WeightedDigraph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError('expected an object with an "n" field', context=where)
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}',
                         context=where)
    raw = obj.get("arcs", [])
    if not isinstance(raw, list):
        raise ParseError('"arcs" must be an array', context=where)
    arcs = []
    for k, arc in enumerate(raw):
        ctx = f"{where}.arcs[{k}]"
        if not isinstance(arc, (list, tuple)) or len(arc) != 3:
            raise ParseError(f"expected [from, to, weight], got {arc!r}",
                             context=ctx)
        u, v, w = arc
        if not isinstance(u, int) or not isinstance(v, int) \
                or isinstance(u, bool) or isinstance(v, bool):
            raise ParseError("node indices must be integers", context=ctx)
        arcs.append((u, v, scalar_from_json(descriptor, w, ctx)))
    try:
        return WeightedDigraph(n, tuple(arcs), descriptor)
    except SemiringError as exc:
        raise ParseError(str(exc), context=where) from exc


def triple_to_json(t: LdmTriple) -> dict:
    d = t.descriptor
    return {"l": matrix_to_json(t.L),
            "d": [scalar_to_json(d, v) for v in t.D],
            "m": matrix_to_json(t.M)}


def triple_from_json(descriptor: SemiringDescriptor, obj,
                     where="triple") -> LdmTriple:
    if not isinstance(obj, dict) or not {"l", "d", "m"} <= set(obj):
        raise ParseError('expected an object with "l", "d", "m" fields',
                         context=where)
    if not isinstance(obj["d"], list):
        raise ParseError('"d" must be an array', context=where)
    L = matrix_from_json(descriptor, obj["l"], where + ".l")
    M = matrix_from_json(descriptor, obj["m"], where + ".m")
    diag = tuple(scalar_from_json(descriptor, v, f"{where}.d[{i}]")
                 for i, v in enumerate(obj["d"]))
    return LdmTriple(L, diag, M)


def dumps(payload) -> str:
    """Canonical one-line JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"),
                      allow_nan=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         context=f"line {exc.lineno} column {exc.colno}") from exc
