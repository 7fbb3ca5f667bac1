"""Seed-deterministic instance generators.

Two families: uniform random simple digraphs for fuzzing, and serial
two-route "chain" instances whose envelope size is known by
construction, used to exercise scaling.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GeneratorParameterError
from .model import DualWeightGraph, Edge, as_rational


def random_graph(
    vertices: int,
    edges: int,
    weight_max: int | str | Fraction = 10,
    seed: int = 0,
) -> DualWeightGraph:
    """Random simple digraph (no self-loops, no parallel edges).

    Weights are drawn uniformly from the hundredths in (0, weight_max],
    so files render as two-decimal strings.  The same seed always yields
    the same graph.
    """
    wmax = as_rational(weight_max)
    if vertices < 2:
        raise GeneratorParameterError("need at least 2 vertices")
    max_edges = vertices * (vertices - 1)
    if not (1 <= edges <= max_edges):
        raise GeneratorParameterError(
            f"edge count {edges} outside 1..{max_edges} for {vertices} vertices"
        )
    if wmax <= 0:
        raise GeneratorParameterError("weight bound must be positive")
    cents = int(wmax * 100)
    if cents < 1:
        raise GeneratorParameterError("weight bound below 0.01")

    rng = random.Random(seed)
    pairs = [(i, j) for i in range(vertices) for j in range(vertices) if i != j]
    chosen = rng.sample(pairs, edges)
    rows = tuple(
        Edge(
            tail,
            head,
            Fraction(rng.randint(1, cents), 100),
            Fraction(rng.randint(1, cents), 100),
        )
        for tail, head in chosen
    )
    return DualWeightGraph(vertices, rows)


def chain_graph(blocks: int) -> DualWeightGraph:
    """Serial chain of two-route blocks with blocks+1 envelope segments.

    Block i offers an upper and a lower two-edge route between junction
    3i and junction 3(i+1).  The upper route costs (1, 1 + 2**(b+1-i))
    across the parameter range and the lower (1 + 2**i, 1), so the
    routes swap optimality at a distinct parameter per block and every
    combination of route choices has a distinct cost line (the level
    offsets 2**i are super-increasing, so subset sums are unique).
    """
    if blocks < 1:
        raise GeneratorParameterError("need at least 1 block")
    edges: list[Edge] = []
    for i in range(blocks):
        start = 3 * i
        upper, lower, end = start + 1, start + 2, start + 3
        u0 = Fraction(1)
        u1 = Fraction(1 + 2 ** (blocks + 1 - i))
        l0 = Fraction(1 + 2**i)
        l1 = Fraction(1)
        edges.append(Edge(start, upper, u0 / 2, u1 / 2))
        edges.append(Edge(upper, end, u0 / 2, u1 / 2))
        edges.append(Edge(start, lower, l0 / 2, l1 / 2))
        edges.append(Edge(lower, end, l0 / 2, l1 / 2))
    return DualWeightGraph(3 * blocks + 1, tuple(edges))


def chain_endpoints(blocks: int) -> tuple[int, int]:
    """Natural source/target pair for :func:`chain_graph`."""
    return 0, 3 * blocks
