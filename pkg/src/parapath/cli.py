"""Command-line interface.

Exit codes are a stable contract: 0 success, 2 bad input (parse errors,
invalid weights, infeasible generator parameters), 3 unreachable target,
4 query parameter out of range, 5 envelope-vs-oracle mismatch, 6 graph
too large for the exhaustive oracle.
"""

from __future__ import annotations

import argparse
import decimal
import sys
import time
from fractions import Fraction
from pathlib import Path as FilePath

from . import envelope, generators, graphio, oracle
from .dijkstra import MAX_SLOPE, MIN_SLOPE, dijkstra_extreme_slope
from .errors import (
    EnvelopeFormatError,
    GeneratorParameterError,
    GraphFormatError,
    GraphStructureError,
    LambdaRangeError,
    MalformedPathError,
    OracleScaleError,
    ParapathError,
    UnreachableError,
    WeightDomainError,
)
from .model import ONE, ZERO, cost_line, path_vertices, validate_graph
from .query import locate_segment

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNREACHABLE = 3
EXIT_LAMBDA = 4
EXIT_MISMATCH = 5
EXIT_ORACLE_SCALE = 6

_INPUT_ERRORS = (
    GraphFormatError,
    EnvelopeFormatError,
    WeightDomainError,
    GraphStructureError,
    GeneratorParameterError,
    MalformedPathError,
)

_PLOT_CONTEXT = decimal.Context(prec=12)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_lambda(text: str) -> Fraction:
    try:
        lam = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LambdaRangeError(f"cannot parse lambda {text!r}") from None
    if not (ZERO <= lam <= ONE):
        raise LambdaRangeError(f"lambda {lam} outside [0, 1]")
    return lam


def _twelve_digits(value: Fraction) -> str:
    result = _PLOT_CONTEXT.divide(
        decimal.Decimal(value.numerator), decimal.Decimal(value.denominator)
    )
    return str(result)


def _load_graph(path: str) -> "graphio.DualWeightGraph":
    graph = graphio.read_graph(path)
    validate_graph(graph)
    return graph


def cmd_build(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    result = envelope.build_index_detailed(
        graph, args.source, args.target, parallel=args.parallel
    )
    doc = graphio.document_from_index(result.index, graph)
    graphio.write_envelope(doc, args.out)
    k = result.index.k
    print(f"k={k} breakpoints={k - 1} dijkstra_calls={result.dijkstra_calls}")
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    doc = graphio.read_envelope(args.envelope)
    lam = _parse_lambda(args.lam)
    pos, _comparisons = locate_segment(doc.upper_bounds, lam)
    seg = doc.segments[pos]
    cost = seg.cost_at(lam)
    verts = ",".join(str(v) for v in seg.vertices)
    print(
        f"cost={graphio.format_fraction(cost)} path={verts} "
        f"segment=[{graphio.format_fraction(seg.lo)},{graphio.format_fraction(seg.hi)}]"
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    if graph.vertex_count > args.max_oracle_vertices:
        return _fail(
            EXIT_ORACLE_SCALE,
            f"{graph.vertex_count} vertices exceeds oracle bound "
            f"{args.max_oracle_vertices}",
        )
    index = envelope.build_index(graph, args.source, args.target)
    lines = oracle.enumerate_paths(
        graph, args.source, args.target, max_vertices=args.max_oracle_vertices
    )
    expected = oracle.envelope_of_lines(lines)
    report = oracle.compare_envelopes(index.segments, expected)
    if report is not None:
        return _fail(EXIT_MISMATCH, f"envelope mismatch: {report}")
    print(f"VERIFIED k={index.k}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "random":
        graph = generators.random_graph(
            args.vertices, args.edges, weight_max=args.weight_max, seed=args.seed
        )
        note = f"random n={args.vertices} m={args.edges} seed={args.seed}"
    else:
        graph = generators.chain_graph(args.blocks)
        src, dst = generators.chain_endpoints(args.blocks)
        note = f"gadget-chain blocks={args.blocks} source={src} target={dst}"
    graphio.write_graph(graph, args.out, comments=[note])
    print(f"wrote {args.out} vertices={graph.vertex_count} edges={len(graph.edges)}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if (args.graph is None) == (args.gen is None):
        return _fail(EXIT_INPUT, "pass a graph file or --gen, not both or neither")
    if args.graph is not None:
        graph = _load_graph(args.graph)
        if args.source is None or args.target is None:
            return _fail(EXIT_INPUT, "--source and --target required with a graph file")
        source, target = args.source, args.target
    else:
        if args.gen == "random":
            graph = generators.random_graph(
                args.vertices, args.edges, weight_max=args.weight_max, seed=args.seed
            )
        else:
            graph = generators.chain_graph(args.blocks)
        source = args.source if args.source is not None else 0
        target = args.target if args.target is not None else graph.vertex_count - 1
    print("k,edges,vertices,dijkstra_calls,wall_ns")
    for _ in range(args.repeats):
        start = time.perf_counter_ns()
        result = envelope.build_index_detailed(
            graph, source, target, parallel=args.parallel
        )
        wall = time.perf_counter_ns() - start
        print(
            f"{result.index.k},{len(graph.edges)},{graph.vertex_count},"
            f"{result.dijkstra_calls},{wall}"
        )
    return EXIT_OK


def cmd_export_plot(args: argparse.Namespace) -> int:
    if args.samples < 2:
        return _fail(EXIT_INPUT, "need at least 2 samples")
    doc = graphio.read_envelope(args.envelope)
    grid = {Fraction(j, args.samples - 1) for j in range(args.samples)}
    interior = {seg.hi for seg in doc.segments[:-1]}
    rows: list[str] = ["lambda,cost,segment_index"]
    for lam in sorted(grid | interior):
        pos, _ = locate_segment(doc.upper_bounds, lam)
        positions = [pos]
        if lam in interior:
            positions.append(pos + 1)  # breakpoint belongs to both neighbors
        for p in positions:
            cost = doc.segments[p].cost_at(lam)
            rows.append(f"{_twelve_digits(lam)},{_twelve_digits(cost)},{p}")
    FilePath(args.out).write_text("\n".join(rows) + "\n")
    print(f"wrote {args.out} rows={len(rows) - 1}")
    return EXIT_OK


def cmd_sssp(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    lam = _parse_lambda(args.lam)
    path, label = dijkstra_extreme_slope(graph, lam, args.source, args.target, args.mode)
    line = cost_line(graph, path)
    verts = ",".join(str(v) for v in path_vertices(graph, path, source=args.source))
    print(
        f"length={graphio.format_fraction(label.length)} "
        f"slope={graphio.format_fraction(label.slope)} "
        f"c0={graphio.format_fraction(line.c0)} "
        f"c1={graphio.format_fraction(line.c1)} path={verts}"
    )
    return EXIT_OK


def _add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--source", type=int, required=True, help="source vertex id")
    parser.add_argument("--target", type=int, required=True, help="target vertex id")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parapath",
        description=(
            "Exact shortest-path maps for digraphs whose edge weights blend "
            "linearly between two endpoint weightings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the envelope index for a graph file")
    p.add_argument("graph")
    _add_pair_arguments(p)
    p.add_argument("--out", required=True, help="envelope file to write")
    p.add_argument("--parallel", action="store_true", help="use the threaded builder")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("query", help="evaluate an envelope file at one parameter")
    p.add_argument("envelope")
    p.add_argument("--lambda", dest="lam", required=True, help="parameter in [0, 1]")
    p.set_defaults(handler=cmd_query)

    p = sub.add_parser("verify", help="cross-check the builder against enumeration")
    p.add_argument("graph")
    _add_pair_arguments(p)
    p.add_argument(
        "--max-oracle-vertices",
        type=int,
        default=oracle.DEFAULT_VERTEX_BOUND,
        help="refuse graphs larger than this (default %(default)s)",
    )
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance to a graph file")
    p.add_argument("kind", choices=["random", "gadget-chain"])
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, default=6, help="random: vertex count")
    p.add_argument("--edges", type=int, default=10, help="random: edge count")
    p.add_argument("--weight-max", default="10", help="random: weight upper bound")
    p.add_argument("--blocks", type=int, default=1, help="gadget-chain: block count")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("bench", help="time index builds, one CSV row per repeat")
    p.add_argument("graph", nargs="?", help="graph file (or use --gen instead)")
    p.add_argument("--source", type=int, help="source vertex (default 0 with --gen)")
    p.add_argument(
        "--target", type=int, help="target vertex (default last with --gen)"
    )
    p.add_argument("--gen", choices=["random", "gadget-chain"], help="bench a generated instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, default=6)
    p.add_argument("--edges", type=int, default=10)
    p.add_argument("--weight-max", default="10")
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser(
        "export-plot", help="sample an envelope file to CSV for plotting"
    )
    p.add_argument("envelope")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_export_plot)

    p = sub.add_parser("sssp", help="debug: one slope-extremal shortest-path run")
    p.add_argument("graph")
    _add_pair_arguments(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mode", choices=[MIN_SLOPE, MAX_SLOPE], default=MIN_SLOPE)
    p.set_defaults(handler=cmd_sssp)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _INPUT_ERRORS as exc:
        return _fail(EXIT_INPUT, str(exc))
    except UnreachableError as exc:
        return _fail(EXIT_UNREACHABLE, str(exc))
    except LambdaRangeError as exc:
        return _fail(EXIT_LAMBDA, str(exc))
    except OracleScaleError as exc:
        return _fail(EXIT_ORACLE_SCALE, str(exc))
    except OSError as exc:
        return _fail(EXIT_INPUT, str(exc))
    except ParapathError as exc:  # anything else from the library is bad input
        return _fail(EXIT_INPUT, str(exc))


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
