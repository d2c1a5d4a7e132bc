"""Canonical JSON file formats.

Every writer emits sorted keys and lowest-terms rationals, so the same object
always serializes to the same bytes. Rationals travel as integer pairs
``[num, den]`` with ``den > 0``; an interval is ``[l_num, l_den, r_num, r_den]``.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from math import lcm
from typing import Any

import numpy as np

from .boxes import BoxRepresentation
from .cubes import CubeRepresentation
from .errors import FormatError, InvalidArgument
from .graph import Graph
from .intervals import IntervalRepresentation, UnitIntervalRepresentation, VertexOrdering
from .oracle import OracleResult


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    path = os.fspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None


# -- field helpers ---------------------------------------------------------


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"expected an integer, got {value!r}", where)
    return value


def _count(doc: dict, where: str) -> int:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object", where)
    if "n" not in doc:
        raise FormatError("missing field 'n'", where)
    n = _int(doc["n"], f"{where}.n")
    if n < 0:
        raise FormatError(f"vertex count must be non-negative, got {n}", f"{where}.n")
    return n


def _per_vertex(doc: dict, key: str, n: int, where: str) -> list:
    table = doc.get(key)
    if not isinstance(table, dict):
        raise FormatError("expected an object keyed by vertex", f"{where}.{key}")
    out = [None] * n
    for k, value in table.items():
        try:
            v = int(k)
        except ValueError:
            raise FormatError(f"vertex key {k!r} is not an integer", f"{where}.{key}") from None
        if not 0 <= v < n or str(v) != k:
            raise FormatError(f"vertex key {k!r} out of range 0..{n - 1}", f"{where}.{key}")
        out[v] = value
    absent = [v for v, x in enumerate(out) if x is None]
    if absent:
        raise FormatError(f"no entry for vertices {absent[:10]}", f"{where}.{key}")
    return out


def _rational(num, den, where: str) -> Fraction:
    num, den = _int(num, where), _int(den, where)
    if den <= 0:
        raise FormatError(f"denominator must be positive, got {den}", where)
    return Fraction(num, den)


def _interval(value, where: str) -> tuple[Fraction, Fraction]:
    if not isinstance(value, list) or len(value) != 4:
        raise FormatError("expected [l_num, l_den, r_num, r_den]", where)
    lo = _rational(value[0], value[1], where)
    hi = _rational(value[2], value[3], where)
    if lo > hi:
        raise FormatError(f"malformed interval: l = {lo} > r = {hi}", where)
    return lo, hi


def _encode_interval(lo: Fraction, hi: Fraction) -> list[int]:
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo.numerator, lo.denominator, hi.numerator, hi.denominator]


# -- graphs ----------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(doc, where: str = "graph") -> Graph:
    n = _count(doc, where)
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise FormatError("expected a list of [u, v] pairs", f"{where}.edges")
    pairs = []
    for idx, e in enumerate(edges):
        at = f"{where}.edges[{idx}]"
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError("expected a pair [u, v]", at)
        u, v = _int(e[0], at), _int(e[1], at)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"invalid edge ({u}, {v}) for n={n}", at)
        pairs.append((u, v))
    return Graph(n, pairs)


def read_edge_list(text: str, n: int | None = None) -> Graph:
    """Plain edge list: one ``u v`` pair per line; ``#`` starts a comment.

    A line ``n <count>`` fixes the vertex count; otherwise it is the largest
    vertex id plus one (or the ``n`` argument).
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            try:
                n = int(parts[1])
            except ValueError:
                raise FormatError(f"bad vertex count {parts[1]!r}", f"line {lineno}") from None
            continue
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", f"line {lineno}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", f"line {lineno}") from None
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    try:
        return Graph(n, pairs)
    except InvalidArgument as exc:
        raise FormatError(str(exc), "edge list") from None


# -- interval-like representations ----------------------------------------


def intervals_to_json(rep: IntervalRepresentation) -> dict:
    return {
        "n": rep.n,
        "intervals": {str(v): _encode_interval(lo, hi) for v, (lo, hi) in enumerate(rep.intervals)},
    }


def intervals_from_json(doc, where: str = "intervals") -> IntervalRepresentation:
    n = _count(doc, where)
    table = _per_vertex(doc, "intervals", n, where)
    return IntervalRepresentation(
        tuple(_interval(x, f"{where}.intervals['{v}']") for v, x in enumerate(table))
    )


def ordering_to_json(f: VertexOrdering) -> dict:
    return {"n": f.n, "order": f.order, "positions": {str(v): p for v, p in enumerate(f.positions)}}


def boxes_to_json(rep: BoxRepresentation) -> dict:
    return {
        "n": rep.n,
        "dims": rep.dims,
        "boxes": {str(v): [_encode_interval(lo, hi) for lo, hi in box] for v, box in enumerate(rep.boxes)},
    }


def boxes_from_json(doc, where: str = "boxes") -> BoxRepresentation:
    n = _count(doc, where)
    dims = _int(doc.get("dims"), f"{where}.dims")
    if dims < 0:
        raise FormatError(f"dims must be non-negative, got {dims}", f"{where}.dims")
    table = _per_vertex(doc, "boxes", n, where)
    boxes = []
    for v, row in enumerate(table):
        at = f"{where}.boxes['{v}']"
        if not isinstance(row, list) or len(row) != dims:
            raise FormatError(f"expected {dims} intervals", at)
        boxes.append(tuple(_interval(x, f"{at}[{p}]") for p, x in enumerate(row)))
    return BoxRepresentation(dims, tuple(boxes))


# -- cubes -------------------------------------------------------------------


def cubes_to_json(rep: CubeRepresentation, normalize: bool = False) -> dict:
    if normalize:
        anchors = {
            str(v): [[a.numerator, a.denominator] for a in row]
            for v, row in enumerate(rep.normalized_anchors())
        }
        side = 1
    else:
        anchors = {str(v): [int(a) for a in row] for v, row in enumerate(rep.anchors)}
        side = rep.side
    return {"n": rep.n, "dims": rep.dims, "side": side, "anchors": anchors}


def cubes_from_json(doc, where: str = "cubes") -> CubeRepresentation:
    """Read either form; a normalized file is rescaled to integer anchors."""
    n = _count(doc, where)
    dims = _int(doc.get("dims"), f"{where}.dims")
    side = _int(doc.get("side"), f"{where}.side")
    if dims < 0:
        raise FormatError(f"dims must be non-negative, got {dims}", f"{where}.dims")
    if side < 1:
        raise FormatError(f"side must be a positive integer, got {side}", f"{where}.side")
    table = _per_vertex(doc, "anchors", n, where)
    rows = []
    for v, row in enumerate(table):
        at = f"{where}.anchors['{v}']"
        if not isinstance(row, list) or len(row) != dims:
            raise FormatError(f"expected {dims} anchors", at)
        vals = []
        for p, a in enumerate(row):
            if isinstance(a, list):
                if len(a) != 2:
                    raise FormatError("expected a rational [num, den]", f"{at}[{p}]")
                vals.append(_rational(a[0], a[1], f"{at}[{p}]"))
            else:
                vals.append(Fraction(_int(a, f"{at}[{p}]")))
        rows.append(vals)
    scale = lcm(1, *(x.denominator for row in rows for x in row))
    ints = [[int(x * scale) for x in row] for row in rows]
    limit = 2**62
    if any(abs(x) >= limit for row in ints for x in row) or side * scale >= limit:
        raise FormatError("anchors too large for exact integer comparison", f"{where}.anchors")
    return CubeRepresentation(n, dims, side * scale, np.array(ints, dtype=np.int64).reshape(n, dims))


# -- oracle results ----------------------------------------------------------


def _witness_to_json(w) -> dict:
    if isinstance(w, UnitIntervalRepresentation):
        w = w.to_interval_rep()
    return intervals_to_json(w)


def oracle_to_json(result: OracleResult) -> dict:
    return {
        "parameter": result.parameter,
        "value": result.value,
        "exceeded": result.exceeded,
        "witness": [_witness_to_json(w) for w in result.witness],
    }


def oracle_from_json(doc, where: str = "oracle") -> OracleResult:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object", where)
    parameter = doc.get("parameter")
    if parameter not in ("cubicity", "boxicity"):
        raise FormatError(f"unknown parameter {parameter!r}", f"{where}.parameter")
    value = doc.get("value")
    if value is not None:
        value = _int(value, f"{where}.value")
    witness = []
    for idx, item in enumerate(doc.get("witness", [])):
        rep = intervals_from_json(item, f"{where}.witness[{idx}]")
        if parameter == "cubicity":
            lengths = {hi - lo for lo, hi in rep.intervals}
            if len(lengths) > 1 or 0 in lengths:
                raise FormatError("unit-interval witness has unequal lengths", f"{where}.witness[{idx}]")
            length = lengths.pop() if lengths else Fraction(1)
            rep = UnitIntervalRepresentation(tuple(lo for lo, _ in rep.intervals), length)
        witness.append(rep)
    return OracleResult(parameter, value, bool(doc.get("exceeded", False)), tuple(witness))
