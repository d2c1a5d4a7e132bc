"""Command-line front end.

Exit codes: 0 success or exact match, 1 verification mismatch, 2 input error,
3 brute-force size limit or oracle search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import formats
from .boxes import intersection_graph_of_boxes, box_to_cube, project_to_intervals
from .cubes import interval_to_cube, separating_dimensions
from .errors import FormatError, InvalidArgument, SizeLimitExceeded
from .graph import Graph, complete, cycle, diameter, path, star
from .intervals import (
    UnitIntervalRepresentation,
    intersection_graph_of_intervals,
    left_endpoint_ordering,
    random_interval_rep,
)
from .oracle import DEFAULT_MAX_B, boxicity_oracle, cubicity_oracle, verify_witness

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

FAMILIES = {"star": star, "path": path, "cycle": cycle, "complete": complete}
SHOWN_NON_EDGES = 20


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(exc.strerror or str(exc), path) from None


def _load_graph(path: str) -> Graph:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return formats.graph_from_json(formats.loads(text, path), path)
    return formats.read_edge_list(text)


def _emit(doc, out: str | None) -> None:
    text = formats.dumps(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        formats.write_atomic(out, text)


def cmd_gen(args) -> int:
    if args.n < 1:
        raise InvalidArgument(f"--n must be at least 1, got {args.n}")
    if args.family == "random-interval":
        if args.seed is None:
            raise InvalidArgument("--seed is required for random-interval")
        rep = random_interval_rep(args.n, np.random.default_rng(args.seed))
        g = intersection_graph_of_intervals(rep)
        rep_out = args.rep_out
        if rep_out is None and args.out is not None:
            out = Path(args.out)
            rep_out = str(out.with_name(out.stem + ".intervals" + (out.suffix or ".json")))
        _emit(formats.graph_to_json(g), args.out)
        if rep_out is not None:
            _emit(formats.intervals_to_json(rep), rep_out)
        return EXIT_OK
    _emit(formats.graph_to_json(FAMILIES[args.family](args.n)), args.out)
    return EXIT_OK


def cmd_order(args) -> int:
    rep = formats.intervals_from_json(formats.loads(_read(args.intervals), args.intervals), args.intervals)
    _emit(formats.ordering_to_json(left_endpoint_ordering(rep)), args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    doc = formats.loads(_read(args.input), args.input)
    if args.kind == "interval-to-cube":
        rep = formats.intervals_from_json(doc, args.input)
        expected = intersection_graph_of_intervals(rep)
        cubes = interval_to_cube(rep)
    else:
        rep = formats.boxes_from_json(doc, args.input)
        expected = intersection_graph_of_boxes(rep)
        cubes = box_to_cube(rep)
    if not args.no_selfcheck and cubes.graph() != expected:
        print("self-check failed: cube intersection graph differs from the input graph", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(formats.cubes_to_json(cubes, normalize=args.normalize), args.out)
    return EXIT_OK


def _format_pairs(pairs) -> str:
    if not pairs:
        return "none"
    shown = ", ".join(f"({u},{v})" for u, v in pairs[:SHOWN_NON_EDGES])
    more = f" ... (+{len(pairs) - SHOWN_NON_EDGES} more)" if len(pairs) > SHOWN_NON_EDGES else ""
    return f"{len(pairs)}: {shown}{more}"


def _layer_lines(label: str, layer_graphs: list[Graph]) -> list[str]:
    lines = ["layer diameters (per component):"]
    for p, h in enumerate(layer_graphs, start=1):
        d = diameter(h)
        status = "connected" if d.connected else "disconnected"
        lines.append(f"  {label} {p}: {list(d.component_diameters)} max={d.diameter} {status}")
    return lines


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    lines = [f"graph: n={g.n} edges={g.num_edges}"]
    if args.cubes:
        rep = formats.cubes_from_json(formats.loads(_read(args.cubes), args.cubes), args.cubes)
        lines.append(f"representation: cubes dims={rep.dims} side={rep.side}")
        layer_graphs = [
            UnitIntervalRepresentation(tuple(rep.anchors[:, p].tolist()), rep.side).graph()
            for p in range(rep.dims)
        ]
        label = "dim"
    elif args.boxes:
        rep = formats.boxes_from_json(formats.loads(_read(args.boxes), args.boxes), args.boxes)
        lines.append(f"representation: boxes dims={rep.dims}")
        layer_graphs = [intersection_graph_of_intervals(project_to_intervals(rep, p)) for p in range(rep.dims)]
        label = "dim"
    else:
        rep = formats.intervals_from_json(formats.loads(_read(args.intervals), args.intervals), args.intervals)
        lines.append("representation: intervals")
        layer_graphs = [intersection_graph_of_intervals(rep)]
        label = "layer"
    if rep.n != g.n:
        raise InvalidArgument(f"vertex count mismatch: graph has {g.n}, representation has {rep.n}")

    adj = np.ones((g.n, g.n), dtype=bool)
    for h in layer_graphs:
        adj &= h.adjacency
    got = Graph.from_adjacency(adj)
    missing = [e for e in g.edges if not got.has_edge(*e)]
    extra = [e for e in got.edges if not g.has_edge(*e)]
    lines.append(f"missing edges (in graph, not represented): {_format_pairs(missing)}")
    lines.append(f"extra edges (represented, not in graph): {_format_pairs(extra)}")

    if layer_graphs:
        lines.append("non-edges separated first by:")
        killed: dict[int, list] = {}
        for u, v in g.non_edges():
            if args.cubes:
                dims = separating_dimensions(rep, u, v)
            else:
                dims = [p for p, h in enumerate(layer_graphs) if not h.has_edge(u, v)]
            if dims:
                killed.setdefault(dims[0] + 1, []).append((u, v))
        for p in range(1, len(layer_graphs) + 1):
            lines.append(f"  {label} {p}: {_format_pairs(killed.get(p, []))}")
        lines.extend(_layer_lines(label, layer_graphs))

    ok = not missing and not extra
    lines.append("result: MATCH" if ok else "result: MISMATCH")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    run = cubicity_oracle if args.parameter == "cubicity" else boxicity_oracle
    result = run(g, max_b=args.max_b, limit=args.limit)
    if not verify_witness(g, result, limit=args.limit):
        print("oracle witness failed re-verification", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(formats.oracle_to_json(result), args.out)
    if result.exceeded:
        print(f"{args.parameter} exceeds --max-b {args.max_b}", file=sys.stderr)
        return EXIT_LIMIT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxcube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("--family", required=True, choices=[*FAMILIES, "random-interval"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", "-o")
    p.add_argument("--rep-out", help="interval file for random-interval (default: <out>.intervals.json)")
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("order", help="left-endpoint ordering of an interval file")
    p.add_argument("--intervals", required=True)
    p.add_argument("--out", "-o")
    p.set_defaults(run=cmd_order)

    p = sub.add_parser("convert", help="convert an interval or box file to cubes")
    p.add_argument("kind", choices=["interval-to-cube", "box-to-cube"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", "-o")
    p.add_argument("--normalize", action="store_true", help="side 1 with rational anchors")
    p.add_argument("--no-selfcheck", action="store_true")
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("verify", help="compare a graph against a representation")
    p.add_argument("--graph", required=True, help="graph JSON or plain edge list")
    rep = p.add_mutually_exclusive_group(required=True)
    rep.add_argument("--cubes")
    rep.add_argument("--boxes")
    rep.add_argument("--intervals")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle", help="exact boxicity or cubicity of a tiny graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--parameter", required=True, choices=["cubicity", "boxicity"])
    p.add_argument("--max-b", type=int, default=DEFAULT_MAX_B)
    p.add_argument("--limit", type=int, help="size limit (default: $BOXCUBE_BRUTE_LIMIT or 6)")
    p.add_argument("--out", "-o")
    p.set_defaults(run=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (FormatError, InvalidArgument, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
