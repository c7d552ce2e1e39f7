# Copyright (c) 2025-2026.
#
# This file is part of Chipfire Gonality.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Metric graphs with rational edge lengths.

A point is a vertex or an (edge, offset) pair, the offset measured from
the tail and strictly inside the edge. Piecewise linear functions are
stored per edge as breakpoint lists [(offset, value), ...] that start at
offset 0 and end at the edge length. All arithmetic uses Fraction.
"""

import logging

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from utils.chipfire import covers, equivalent, separator_rank_certificate
from utils.divisor import Divisor
from utils.errors import (
    CertificateInconsistent,
    DimensionMismatch,
    Discontinuous,
    DuplicatePoint,
    FormatError,
    InvalidParameters,
    IrrationalLength,
    NonIntegerLength,
    NotCovering,
    OffsetOutOfRange,
    SlopeNotIntegral,
    VertexOutOfRange,
    WitnessInvalid,
)
from utils.graph import MultiGraph, Subdivision, fundamental_cycles, subdivide

log = logging.getLogger(__name__)


def as_fraction(value: object) -> Fraction:
    """
    Exact rational from an int, a Fraction or a "p/q" string.
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormatError("booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise IrrationalLength(
            "floating point values are not accepted; write them as p/q",
            {"value": value},
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational number: {value!r}") from exc

    raise FormatError(f"not a rational number: {value!r}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class MetricGraph:
    underlying: MultiGraph
    lengths: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        lengths = tuple(as_fraction(length) for length in self.lengths)

        if len(lengths) != self.underlying.num_edges:
            raise DimensionMismatch(
                "one length per edge is required",
                {"edges": self.underlying.num_edges, "lengths": len(lengths)},
            )

        for index, length in enumerate(lengths):
            if length <= 0:
                raise InvalidParameters(
                    f"edge {index} has nonpositive length {length}",
                    {"edge": index},
                )

        object.__setattr__(self, "lengths", lengths)

    @property
    def is_integral(self) -> bool:
        return all(length.denominator == 1 for length in self.lengths)


@dataclass(frozen=True)
class Point:
    vertex: Optional[int] = None
    edge: Optional[int] = None
    offset: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.vertex is not None:
            if self.edge is not None or self.offset is not None:
                raise FormatError("a point is a vertex or an edge offset, not both")
        elif self.edge is None or self.offset is None:
            raise FormatError("an edge point needs an edge and an offset")
        else:
            object.__setattr__(self, "offset", as_fraction(self.offset))

    @classmethod
    def at(cls, vertex: int) -> "Point":
        return cls(vertex=vertex)

    @classmethod
    def on(cls, edge: int, offset: Fraction | int | str) -> "Point":
        return cls(edge=edge, offset=as_fraction(offset))

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    @property
    def key(self) -> tuple:
        if self.is_vertex:
            return (0, self.vertex, Fraction(0))

        return (1, self.edge, self.offset)


def validate_point(gamma: MetricGraph, point: Point) -> None:
    G = gamma.underlying

    if point.is_vertex:
        if not 0 <= point.vertex < G.n:
            raise VertexOutOfRange(f"vertex {point.vertex} not in the graph", {"vertex": point.vertex})
        return

    if not 0 <= point.edge < G.num_edges:
        raise OffsetOutOfRange(f"edge {point.edge} not in the graph", {"edge": point.edge})

    if not 0 < point.offset < gamma.lengths[point.edge]:
        raise OffsetOutOfRange(
            f"offset {point.offset} is not strictly inside edge {point.edge}",
            {"edge": point.edge, "offset": format_fraction(point.offset)},
        )


@dataclass(frozen=True)
class PointDivisor:
    """
    Finite integer combination of points, kept merged and sorted.
    """

    terms: tuple[tuple[Point, int], ...]

    @classmethod
    def of(cls, terms: Iterable[tuple[Point, int]]) -> "PointDivisor":
        merged: dict[Point, int] = defaultdict(int)

        for point, coefficient in terms:
            merged[point] += int(coefficient)

        kept = sorted(
            ((point, c) for point, c in merged.items() if c),
            key=lambda term: term[0].key,
        )

        return cls(tuple(kept))

    @classmethod
    def from_divisor(cls, D: Divisor) -> "PointDivisor":
        return cls.of((Point.at(v), c) for v, c in enumerate(D))

    @property
    def degree(self) -> int:
        return sum(c for _, c in self.terms)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for _, c in self.terms)

    @property
    def support(self) -> tuple[Point, ...]:
        return tuple(point for point, _ in self.terms)

    @property
    def is_vertex_supported(self) -> bool:
        return all(point.is_vertex for point in self.support)

    def coefficient(self, point: Point) -> int:
        return dict(self.terms).get(point, 0)

    def __add__(self, other: "PointDivisor") -> "PointDivisor":
        return PointDivisor.of(self.terms + other.terms)

    def __sub__(self, other: "PointDivisor") -> "PointDivisor":
        return PointDivisor.of(self.terms + tuple((p, -c) for p, c in other.terms))

    def to_divisor(self, n: int) -> Divisor:
        if not self.is_vertex_supported:
            raise InvalidParameters("divisor has support inside edges")

        values = [0] * n

        for point, c in self.terms:
            values[point.vertex] += c

        return Divisor(tuple(values))


Breakpoints = tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class PLFunction:
    pieces: tuple[Breakpoints, ...]

    @classmethod
    def of(cls, pieces: Iterable[Iterable[Sequence]]) -> "PLFunction":
        return cls(
            tuple(
                tuple((as_fraction(offset), as_fraction(value)) for offset, value in edge)
                for edge in pieces
            )
        )

    def slopes(self, edge: int) -> list[Fraction]:
        breaks = self.pieces[edge]

        return [
            (b_value - a_value) / (b_offset - a_offset)
            for (a_offset, a_value), (b_offset, b_value) in zip(breaks, breaks[1:])
        ]

    def value_at(self, edge: int, offset: Fraction) -> Fraction:
        breaks = self.pieces[edge]

        for (a_offset, a_value), (b_offset, b_value) in zip(breaks, breaks[1:]):
            if a_offset <= offset <= b_offset:
                return a_value + (b_value - a_value) * (offset - a_offset) / (b_offset - a_offset)

        raise OffsetOutOfRange(
            f"offset {offset} outside edge {edge}", {"edge": edge, "offset": format_fraction(offset)}
        )

    def scaled(self, factor: Fraction) -> "PLFunction":
        """
        The function p -> factor f(p / factor) on the metric graph with all
        lengths multiplied by factor; slopes are unchanged.
        """

        return PLFunction(
            tuple(
                tuple((offset * factor, value * factor) for offset, value in edge)
                for edge in self.pieces
            )
        )

    def simplified(self) -> "PLFunction":
        """
        Drop interior breakpoints where the slope does not change.
        """

        pieces = []

        for index, breaks in enumerate(self.pieces):
            slopes = self.slopes(index)
            kept = [breaks[0]]

            for i in range(1, len(breaks) - 1):
                if slopes[i] != slopes[i - 1]:
                    kept.append(breaks[i])

            kept.append(breaks[-1])
            pieces.append(tuple(kept))

        return PLFunction(tuple(pieces))


def validate_function(gamma: MetricGraph, f: PLFunction) -> list[Fraction]:
    """
    Check breakpoints, integral slopes and continuity. Returns the values
    at the vertices.
    """

    G = gamma.underlying

    if len(f.pieces) != G.num_edges:
        raise DimensionMismatch(
            "one breakpoint list per edge is required",
            {"edges": G.num_edges, "pieces": len(f.pieces)},
        )

    for index, breaks in enumerate(f.pieces):
        offsets = [offset for offset, _ in breaks]

        if len(offsets) < 2 or offsets[0] != 0 or offsets[-1] != gamma.lengths[index]:
            raise OffsetOutOfRange(
                f"breakpoints of edge {index} must run from 0 to its length",
                {"edge": index},
            )
        if any(a >= b for a, b in zip(offsets, offsets[1:])):
            raise OffsetOutOfRange(
                f"breakpoints of edge {index} are not increasing", {"edge": index}
            )

        for segment, slope in enumerate(f.slopes(index)):
            if slope.denominator != 1:
                raise SlopeNotIntegral(
                    f"edge {index} has slope {slope} on segment {segment}",
                    {"edge": index, "segment": segment, "slope": format_fraction(slope)},
                )

    values: list[Optional[Fraction]] = [None] * G.n

    for index, (tail, head) in enumerate(G.edges):
        for vertex, value in ((tail, f.pieces[index][0][1]), (head, f.pieces[index][-1][1])):
            if values[vertex] is None:
                values[vertex] = value
            elif values[vertex] != value:
                raise Discontinuous(
                    f"function takes two values at vertex {vertex}",
                    {"vertex": vertex, "edge": index},
                )

    return [Fraction(0) if value is None else value for value in values]


def linear_function(gamma: MetricGraph, values: Sequence) -> PLFunction:
    """
    The function with the given vertex values, linear on every edge.
    """

    G = gamma.underlying

    if len(values) != G.n:
        raise DimensionMismatch("one value per vertex is required")

    exact = [as_fraction(value) for value in values]
    f = PLFunction(
        tuple(
            ((Fraction(0), exact[tail]), (length, exact[head]))
            for (tail, head), length in zip(G.edges, gamma.lengths)
        )
    )
    validate_function(gamma, f)

    return f


def to_div(gamma: MetricGraph, f: PLFunction) -> PointDivisor:
    """
    div(f): at each point the sum of the outgoing slopes.
    """

    validate_function(gamma, f)
    terms: list[tuple[Point, int]] = []

    for index, (tail, head) in enumerate(gamma.underlying.edges):
        slopes = [int(slope) for slope in f.slopes(index)]
        breaks = f.pieces[index]

        terms.append((Point.at(tail), slopes[0]))
        terms.append((Point.at(head), -slopes[-1]))

        for i in range(1, len(breaks) - 1):
            terms.append((Point.on(index, breaks[i][0]), slopes[i] - slopes[i - 1]))

    return PointDivisor.of(terms)


@dataclass(frozen=True)
class SubdivisionMap:
    """
    Carries points, divisors and functions from a metric graph to its
    subdivision at finitely many interior points.
    """

    refined: MetricGraph
    segments: tuple[tuple[tuple[Fraction, Fraction, int], ...], ...]
    cut_vertices: tuple[dict[Fraction, int], ...]

    def point(self, point: Point) -> Point:
        if point.is_vertex:
            return point

        if point.offset in self.cut_vertices[point.edge]:
            return Point.at(self.cut_vertices[point.edge][point.offset])

        for start, end, edge in self.segments[point.edge]:
            if start < point.offset < end:
                return Point.on(edge, point.offset - start)

        raise OffsetOutOfRange("point lies outside its edge", {"edge": point.edge})

    def divisor(self, D: PointDivisor) -> PointDivisor:
        return PointDivisor.of((self.point(p), c) for p, c in D.terms)

    def function(self, f: PLFunction) -> PLFunction:
        pieces: list[Breakpoints] = [()] * self.refined.underlying.num_edges

        for index, segments in enumerate(self.segments):
            breaks = f.pieces[index]

            for start, end, edge in segments:
                inner = [(o - start, v) for o, v in breaks if start < o < end]
                pieces[edge] = (
                    (Fraction(0), f.value_at(index, start)),
                    *inner,
                    (end - start, f.value_at(index, end)),
                )

        return PLFunction(tuple(pieces))


def subdivide_at(gamma: MetricGraph, points: Iterable[Point]) -> tuple[MetricGraph, SubdivisionMap]:
    """
    Insert a vertex at every given interior point. New vertices are
    numbered after the old ones, edge by edge and by increasing offset.
    """

    G = gamma.underlying
    cuts: dict[int, list[Fraction]] = defaultdict(list)
    seen: set[Point] = set()

    for point in points:
        if point.is_vertex:
            raise OffsetOutOfRange("subdivision points must lie inside edges", {"vertex": point.vertex})

        validate_point(gamma, point)

        if point in seen:
            raise DuplicatePoint(
                "point listed twice",
                {"edge": point.edge, "offset": format_fraction(point.offset)},
            )

        seen.add(point)
        cuts[point.edge].append(point.offset)

    next_vertex = G.n
    edges: list[tuple[int, int]] = []
    lengths: list[Fraction] = []
    segments = []
    cut_vertices = []

    for index, ((tail, head), length) in enumerate(zip(G.edges, gamma.lengths)):
        offsets = sorted(cuts[index])
        inner = list(range(next_vertex, next_vertex + len(offsets)))
        next_vertex += len(offsets)

        walk = [tail, *inner, head]
        marks = [Fraction(0), *offsets, length]
        pieces = []

        for i in range(len(walk) - 1):
            pieces.append((marks[i], marks[i + 1], len(edges)))
            edges.append((walk[i], walk[i + 1]))
            lengths.append(marks[i + 1] - marks[i])

        segments.append(tuple(pieces))
        cut_vertices.append(dict(zip(offsets, inner)))

    refined = MetricGraph(MultiGraph(next_vertex, edges), tuple(lengths))

    return refined, SubdivisionMap(refined, tuple(segments), tuple(cut_vertices))


def integerize(gamma: MetricGraph) -> tuple[MetricGraph, Fraction]:
    """
    Scale all lengths by the lcm N of their denominators.
    """

    scale = Fraction(lcm(*(length.denominator for length in gamma.lengths)))

    return MetricGraph(gamma.underlying, tuple(length * scale for length in gamma.lengths)), scale


def scale_divisor(D: PointDivisor, factor: Fraction) -> PointDivisor:
    return PointDivisor.of(
        (p if p.is_vertex else Point.on(p.edge, p.offset * factor), c) for p, c in D.terms
    )


def slope_vector(gamma: MetricGraph, f: PLFunction) -> tuple[int, ...]:
    """
    Per-edge slope of a function that is linear on every edge.
    """

    validate_function(gamma, f)
    slopes = []

    for index in range(gamma.underlying.num_edges):
        distinct = set(f.slopes(index))

        if len(distinct) != 1:
            raise InvalidParameters(f"function bends inside edge {index}", {"edge": index})

        slopes.append(int(distinct.pop()))

    return tuple(slopes)


def check_cycle_system(gamma: MetricGraph, slope_vectors: Iterable[Sequence[int]]) -> bool:
    """
    Every slope vector s must satisfy sum l(e) s(e) chi_C(e) = 0 on each
    fundamental cycle C.
    """

    cycles = fundamental_cycles(gamma.underlying)

    for slopes in slope_vectors:
        weighted = [length * s for length, s in zip(gamma.lengths, slopes)]

        if any(cycle.dot(weighted) != 0 for cycle in cycles):
            return False

    return True


@dataclass(frozen=True)
class UnitSubdivision:
    metric: MetricGraph
    subdivision: Subdivision

    @property
    def graph(self) -> MultiGraph:
        return self.subdivision.graph

    def vertex(self, point: Point) -> int:
        if point.is_vertex:
            return self.subdivision.vertex_map[point.vertex]

        if point.offset.denominator != 1:
            raise NonIntegerLength(
                "point is not at an integer offset", {"edge": point.edge}
            )

        return self.subdivision.edge_vertices[point.edge][int(point.offset)]

    def divisor(self, D: PointDivisor) -> Divisor:
        values = [0] * self.graph.n

        for point, c in D.terms:
            values[self.vertex(point)] += c

        return Divisor(tuple(values))


def unit_subdivision(gamma: MetricGraph) -> UnitSubdivision:
    for index, length in enumerate(gamma.lengths):
        if length.denominator != 1:
            raise NonIntegerLength(f"edge {index} has length {length}", {"edge": index})

    counts = [int(length) for length in gamma.lengths]

    return UnitSubdivision(gamma, subdivide(gamma.underlying, counts))


class Witness(NamedTuple):
    divisor: PointDivisor
    function: PLFunction


@dataclass(frozen=True)
class TransferResult:
    graph: MultiGraph
    divisor: Divisor
    positive_rank: bool
    bound: int
    scale: Fraction
    vertex_map: tuple[int, ...]


def transfer_witness(
    gamma: MetricGraph,
    D: PointDivisor,
    witnesses: Mapping[int, Witness],
) -> TransferResult:
    """
    Turn a positive-rank divisor on a metric graph, given with covering
    witnesses D - div(f_v) = D_v for every vertex v, into a positive-rank
    divisor of the same degree on a subdivision H of the underlying graph.
    """

    G = gamma.underlying
    G.require_connected()

    for point in D.support:
        validate_point(gamma, point)

    for v in G.vertices:
        if v not in witnesses:
            raise WitnessInvalid(f"no witness for vertex {v}", {"vertex": v})

        D_v, f_v = witnesses[v]

        for point in D_v.support:
            validate_point(gamma, point)

        if not D_v.is_effective or D_v.coefficient(Point.at(v)) < 1:
            raise WitnessInvalid(
                f"witness divisor for vertex {v} must be effective with a chip on {v}",
                {"vertex": v},
            )
        if D - to_div(gamma, f_v) != D_v:
            raise WitnessInvalid(f"D - div(f) differs from the witness at vertex {v}", {"vertex": v})

    points = {p for p in D.support if not p.is_vertex}

    for v in G.vertices:
        points.update(p for p in witnesses[v].divisor.support if not p.is_vertex)

    refined, moved = subdivide_at(gamma, sorted(points, key=lambda p: p.key))
    integral, scale = integerize(refined)

    slopes = [slope_vector(refined, moved.function(witnesses[v].function)) for v in G.vertices]

    if not check_cycle_system(integral, slopes):
        raise CertificateInconsistent("scaled lengths violate the cycle equations")

    unit = unit_subdivision(integral)
    H = unit.graph
    D_H = unit.divisor(scale_divisor(moved.divisor(D), scale))
    images = tuple(unit.vertex(Point.at(v)) for v in G.vertices)

    for v in G.vertices:
        D_vH = unit.divisor(scale_divisor(moved.divisor(witnesses[v].divisor), scale))

        if equivalent(H, D_H, D_vH) is None:
            raise CertificateInconsistent(
                f"witness for vertex {v} is not equivalent on the subdivision", {"vertex": v}
            )

    if not separator_rank_certificate(H, D_H, images):
        uncovered = next(v for v in G.vertices if not covers(H, D_H, images[v]))
        raise NotCovering("divisor does not cover every original vertex", {"vertex": uncovered})

    log.debug("transferred degree %d divisor to %r (scale %s)", D.degree, H, scale)

    return TransferResult(
        graph=H,
        divisor=D_H,
        positive_rank=True,
        bound=D.degree,
        scale=scale,
        vertex_map=images,
    )


def find_equivalence_function(
    gamma: MetricGraph,
    D: PointDivisor | Divisor,
    E: PointDivisor | Divisor,
) -> Optional[PLFunction]:
    """
    A function f with D - div(f) = E for vertex-supported D and E, or None
    when the two are not equivalent.
    """

    D = PointDivisor.from_divisor(D) if isinstance(D, Divisor) else D
    E = PointDivisor.from_divisor(E) if isinstance(E, Divisor) else E

    if not D.is_vertex_supported or not E.is_vertex_supported:
        raise InvalidParameters("only vertex-supported divisors are supported")

    integral, scale = integerize(gamma)
    unit = unit_subdivision(integral)
    script = equivalent(unit.graph, unit.divisor(D), unit.divisor(E))

    if script is None:
        return None

    pieces = []

    for index, walk in enumerate(unit.subdivision.edge_vertices):
        pieces.append(
            tuple(
                (Fraction(step) / scale, Fraction(-script[w]) / scale)
                for step, w in enumerate(walk)
            )
        )

    f = PLFunction(tuple(pieces)).simplified()

    if D - to_div(gamma, f) != E:
        raise CertificateInconsistent("equivalence function does not reproduce the divisor")

    return f
