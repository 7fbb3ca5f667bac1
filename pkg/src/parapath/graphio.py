"""On-disk formats: graph edge lists and envelope documents.

Graph files are line-oriented text:

    # comment
    psp <vertex_count> <edge_count>
    e <tail> <head> <w0> <w1>

Weights are written as exact decimals when the denominator divides a
power of ten and as ``p/q`` otherwise; both spellings parse back to the
identical rational, so write/read round-trips are field-exact.

Envelope documents are JSON with every rational rendered as the string
``numerator/denominator`` in lowest terms, plus a format version field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path as FilePath
from typing import Iterable

from .envelope import ShortestPathIndex
from .errors import EnvelopeFormatError, GraphFormatError
from .model import DualWeightGraph, Edge, path_vertices

ENVELOPE_FORMAT_VERSION = 1


def format_fraction(value: Fraction) -> str:
    """Canonical ``p/q`` spelling, denominator always present."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def format_weight(value: Fraction) -> str:
    """Exact decimal when one exists, otherwise ``p/q``."""
    rest = value.denominator
    twos = fives = 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return format_fraction(value)
    places = max(twos, fives)
    if places == 0:
        return str(value.numerator)
    scaled = value.numerator * 10**places // value.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _parse_weight(token: str, line_no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphFormatError(f"bad weight {token!r}", line_no) from None


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"bad {what} {token!r}", line_no) from None


def parse_graph(text: str) -> DualWeightGraph:
    """Parse graph-file text; errors carry the 1-based offending line."""
    vertex_count: int | None = None
    edge_count: int | None = None
    edges: list[Edge] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if vertex_count is None:
            if fields[0] != "psp" or len(fields) != 3:
                raise GraphFormatError(
                    "expected header 'psp <vertices> <edges>'", line_no
                )
            vertex_count = _parse_int(fields[1], line_no, "vertex count")
            edge_count = _parse_int(fields[2], line_no, "edge count")
            if vertex_count < 1 or edge_count < 0:
                raise GraphFormatError("header counts out of range", line_no)
            continue
        if fields[0] != "e" or len(fields) != 5:
            raise GraphFormatError("expected 'e <tail> <head> <w0> <w1>'", line_no)
        if len(edges) >= (edge_count or 0):
            raise GraphFormatError("more edge lines than the header declares", line_no)
        tail = _parse_int(fields[1], line_no, "tail")
        head = _parse_int(fields[2], line_no, "head")
        w0 = _parse_weight(fields[3], line_no)
        w1 = _parse_weight(fields[4], line_no)
        if not (0 <= tail < vertex_count and 0 <= head < vertex_count):
            raise GraphFormatError(
                f"vertex id outside 0..{vertex_count - 1}", line_no
            )
        if w0 <= 0 or w1 <= 0:
            raise GraphFormatError("weights must be strictly positive", line_no)
        edges.append(Edge(tail, head, w0, w1))
    if vertex_count is None:
        raise GraphFormatError("missing 'psp' header line")
    if len(edges) != edge_count:
        raise GraphFormatError(
            f"header declares {edge_count} edges, file has {len(edges)}"
        )
    return DualWeightGraph(vertex_count, tuple(edges))


def format_graph(graph: DualWeightGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"psp {graph.vertex_count} {len(graph.edges)}")
    for edge in graph.edges:
        lines.append(
            f"e {edge.tail} {edge.head} "
            f"{format_weight(edge.w0)} {format_weight(edge.w1)}"
        )
    return "\n".join(lines) + "\n"


def read_graph(path: str | FilePath) -> DualWeightGraph:
    return parse_graph(FilePath(path).read_text())


def write_graph(
    graph: DualWeightGraph, path: str | FilePath, comments: Iterable[str] = ()
) -> None:
    FilePath(path).write_text(format_graph(graph, comments))


@dataclass(frozen=True)
class SegmentRecord:
    """One envelope segment as stored on disk: interval, line, vertex walk."""

    lo: Fraction
    hi: Fraction
    c0: Fraction
    c1: Fraction
    vertices: tuple[int, ...]

    def cost_at(self, lam: Fraction) -> Fraction:
        return (1 - lam) * self.c0 + lam * self.c1


@dataclass(frozen=True)
class EnvelopeDocument:
    """In-memory mirror of an envelope file; queryable without the graph."""

    source: int
    target: int
    segments: tuple[SegmentRecord, ...]

    @property
    def k(self) -> int:
        return len(self.segments)

    @cached_property
    def upper_bounds(self) -> tuple[Fraction, ...]:
        return tuple(seg.hi for seg in self.segments)


def document_from_index(
    index: ShortestPathIndex, graph: DualWeightGraph
) -> EnvelopeDocument:
    records = tuple(
        SegmentRecord(
            seg.lo,
            seg.hi,
            seg.line.c0,
            seg.line.c1,
            path_vertices(graph, seg.path, source=index.source),
        )
        for seg in index.segments
    )
    return EnvelopeDocument(index.source, index.target, records)


def format_envelope(doc: EnvelopeDocument) -> str:
    payload = {
        "format": ENVELOPE_FORMAT_VERSION,
        "source": doc.source,
        "target": doc.target,
        "k": doc.k,
        "segments": [
            {
                "lo": format_fraction(seg.lo),
                "hi": format_fraction(seg.hi),
                "c0": format_fraction(seg.c0),
                "c1": format_fraction(seg.c1),
                "vertices": list(seg.vertices),
            }
            for seg in doc.segments
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_envelope(text: str) -> EnvelopeDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EnvelopeFormatError(f"not valid JSON: {exc}") from None
    try:
        if payload["format"] != ENVELOPE_FORMAT_VERSION:
            raise EnvelopeFormatError(
                f"unsupported format version {payload['format']!r}"
            )
        segments = tuple(
            SegmentRecord(
                parse_fraction(seg["lo"]),
                parse_fraction(seg["hi"]),
                parse_fraction(seg["c0"]),
                parse_fraction(seg["c1"]),
                tuple(int(v) for v in seg["vertices"]),
            )
            for seg in payload["segments"]
        )
        doc = EnvelopeDocument(int(payload["source"]), int(payload["target"]), segments)
        declared_k = int(payload["k"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise EnvelopeFormatError(f"malformed envelope document: {exc}") from None
    if declared_k != doc.k:
        raise EnvelopeFormatError(
            f"document declares k={declared_k} but holds {doc.k} segments"
        )
    if not doc.segments:
        raise EnvelopeFormatError("document holds no segments")
    _check_tiling(doc)
    return doc


def _check_tiling(doc: EnvelopeDocument) -> None:
    """Queries binary-search the intervals, so they must tile [0, 1]."""
    segments = doc.segments
    if segments[0].lo != 0 or segments[-1].hi != 1:
        raise EnvelopeFormatError("segments do not span [0, 1]")
    for i, seg in enumerate(segments):
        if not seg.lo < seg.hi:
            raise EnvelopeFormatError(f"segment {i} has an empty interval")
        if i and segments[i - 1].hi != seg.lo:
            raise EnvelopeFormatError(f"segments {i - 1} and {i} do not meet")


def read_envelope(path: str | FilePath) -> EnvelopeDocument:
    return parse_envelope(FilePath(path).read_text())


def write_envelope(doc: EnvelopeDocument, path: str | FilePath) -> None:
    FilePath(path).write_text(format_envelope(doc))
