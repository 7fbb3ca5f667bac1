#!/usr/bin/env python3
"""Scaling experiment: build time versus k * |E| * log|V| on chain instances.

Sweeps the chain generator, times the index build, and reports how far
the per-unit cost drifts across the family (a flat column means the
build scales as expected).  Emits CSV to stdout; use --out to save it.

    python3 scripts/scaling_study.py --blocks 3 7 15 31 --repeats 5
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from parapath import build_index_detailed, chain_endpoints, chain_graph


def measure(blocks: int, repeats: int) -> dict:
    graph = chain_graph(blocks)
    source, target = chain_endpoints(blocks)
    walls = []
    calls = k = 0
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = build_index_detailed(graph, source, target)
        walls.append(time.perf_counter_ns() - start)
        calls = result.dijkstra_calls
        k = result.index.k
    unit = k * len(graph.edges) * math.log2(graph.vertex_count)
    return {
        "blocks": blocks,
        "k": k,
        "vertices": graph.vertex_count,
        "edges": len(graph.edges),
        "dijkstra_calls": calls,
        "wall_ns": min(walls),
        "ns_per_unit": min(walls) / unit,
    }


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--blocks", type=int, nargs="+", default=[3, 7, 15, 31])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--out", help="also write the CSV here")
    args = parser.parse_args(argv)

    rows = [measure(b, args.repeats) for b in args.blocks]
    header = "blocks,k,vertices,edges,dijkstra_calls,wall_ns,ns_per_unit"
    lines = [header] + [
        f"{r['blocks']},{r['k']},{r['vertices']},{r['edges']},"
        f"{r['dijkstra_calls']},{r['wall_ns']},{r['ns_per_unit']:.2f}"
        for r in rows
    ]
    print("\n".join(lines))
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")

    units = [r["ns_per_unit"] for r in rows]
    spread = max(units) / min(units)
    print(f"# per-unit spread across family: {spread:.2f}x", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
