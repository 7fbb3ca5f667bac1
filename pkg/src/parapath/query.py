"""Point queries against a built shortest-path index.

Lookup is a binary search over segment right endpoints, instrumented so
tests can pin the comparison count to the logarithmic bound.  At a
breakpoint the two adjacent lines agree exactly; the leftmost containing
segment is returned to keep outputs deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LambdaRangeError
from .model import CostLine, ONE, Path, ZERO
from .envelope import ShortestPathIndex


@dataclass(frozen=True)
class QueryResult:
    segment_index: int
    path: Path
    line: CostLine
    cost: Fraction
    comparisons: int


def locate_segment(
    upper_bounds: Sequence[Fraction], lam: Fraction
) -> tuple[int, int]:
    """Index of the leftmost segment whose interval contains ``lam``.

    ``upper_bounds`` are the strictly increasing segment right
    endpoints, the last being 1.  Returns (index, comparison count).
    """
    lo, hi = 0, len(upper_bounds) - 1
    comparisons = 0
    while lo < hi:
        mid = (lo + hi) // 2
        comparisons += 1
        if lam <= upper_bounds[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo, comparisons


def query(index: ShortestPathIndex, lam: Fraction) -> QueryResult:
    """Optimal path, its line, and its exact cost at ``lam``.

    Raises LambdaRangeError outside [0, 1]; values are never clamped.
    """
    if not (ZERO <= lam <= ONE):
        raise LambdaRangeError(f"lambda {lam} outside [0, 1]")
    pos, comparisons = locate_segment(index.upper_bounds, lam)
    seg = index.segments[pos]
    return QueryResult(pos, seg.path, seg.line, seg.line.value(lam), comparisons)


def breakpoints(index: ShortestPathIndex) -> tuple[Fraction, ...]:
    """The interior segment boundaries, strictly increasing, each in (0, 1)."""
    return index.upper_bounds[:-1]
