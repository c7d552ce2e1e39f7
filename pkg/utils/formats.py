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
File formats.

Graphs, divisors and metric graphs are flat text; certificates are JSON
validated by pydantic and written by orjson with sorted keys so identical
inputs give identical bytes.
"""

from typing import Any, Optional

import orjson

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from utils.bramble import Bramble
from utils.divisor import Divisor, FiringScript, LevelChain
from utils.errors import ChipfireError, DimensionMismatch, FormatError
from utils.graph import MultiGraph, build_graph
from utils.harmonic import EdgeImage, IndexedMorphism, Morphism
from utils.metric import (
    MetricGraph,
    PLFunction,
    Point,
    PointDivisor,
    Witness,
    as_fraction,
    format_fraction,
)


def dump_json(data: BaseModel | dict | list) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json", exclude_none=True)

    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode()


def load_json(text: str | bytes) -> Any:
    try:
        return orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def parse_model[M: BaseModel](model: type[M], text: str | bytes) -> M:
    try:
        return model.model_validate(load_json(text))
    except ValidationError as exc:
        raise FormatError(
            f"invalid {model.__name__}",
            {"errors": exc.errors(include_url=False, include_context=False)},
        ) from exc


def _lines(text: str) -> list[str]:
    stripped = (line.strip() for line in text.splitlines())

    return [line for line in stripped if line and not line.startswith("#")]


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: expected integers", {"line": lineno}) from exc


def _header(lines: list[str]) -> tuple[int, int]:
    if not lines:
        raise FormatError("empty graph file")

    header = _ints(lines[0], 1)

    if len(header) != 2:
        raise FormatError("first line must be 'n m'")

    n, m = header

    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}", {"m": m})

    return n, m


def read_graph(text: str) -> MultiGraph:
    lines = _lines(text)
    n, _ = _header(lines)
    edges = []

    for lineno, line in enumerate(lines[1:], start=2):
        pair = _ints(line, lineno)

        if len(pair) != 2:
            raise FormatError(f"line {lineno}: expected 'tail head'", {"line": lineno})

        edges.append(pair)

    return build_graph(n, edges)


def write_graph(G: MultiGraph) -> str:
    lines = [f"{G.n} {G.num_edges}"]
    lines.extend(f"{tail} {head}" for tail, head in G.edges)

    return "\n".join(lines) + "\n"


def read_divisors(text: str, n: Optional[int] = None) -> list[Divisor]:
    divisors = []

    for lineno, line in enumerate(_lines(text), start=1):
        D = Divisor(tuple(_ints(line, lineno)))

        if n is not None and len(D) != n:
            raise DimensionMismatch(
                f"line {lineno}: divisor has {len(D)} entries, graph has {n} vertices",
                {"line": lineno},
            )

        divisors.append(D)

    if not divisors:
        raise FormatError("no divisor found")

    return divisors


def write_divisor(D: Divisor) -> str:
    return str(D) + "\n"


def read_metric_graph(text: str) -> MetricGraph:
    lines = _lines(text)
    n, _ = _header(lines)
    edges = []
    lengths = []

    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()

        if len(tokens) != 3:
            raise FormatError(f"line {lineno}: expected 'tail head p/q'", {"line": lineno})

        edges.append(_ints(" ".join(tokens[:2]), lineno))
        lengths.append(as_fraction(tokens[2]))

    return MetricGraph(build_graph(n, edges), tuple(lengths))


def write_metric_graph(gamma: MetricGraph) -> str:
    G = gamma.underlying
    lines = [f"{G.n} {G.num_edges}"]
    lines.extend(
        f"{tail} {head} {format_fraction(length)}"
        for (tail, head), length in zip(G.edges, gamma.lengths)
    )

    return "\n".join(lines) + "\n"


class ScriptFile(BaseModel):
    script: list[int]

    @classmethod
    def of(cls, x: FiringScript) -> "ScriptFile":
        return cls(script=list(x))


class ChainFile(BaseModel):
    chain: list[list[int]]

    @classmethod
    def of(cls, chain: LevelChain) -> "ChainFile":
        return cls(chain=chain.as_lists())


class BrambleFile(BaseModel):
    members: list[list[int]]

    def to_bramble(self) -> Bramble:
        return Bramble.of(self.members)


class GonalityFile(BaseModel):
    gonality: int
    witness: list[int]
    candidates: int


class EdgeMapEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    edge: int
    to_edge: Optional[int] = None
    to_vertex: Optional[int] = None

    @model_validator(mode="after")
    def one_target(self) -> "EdgeMapEntry":
        if (self.to_edge is None) == (self.to_vertex is None):
            raise ValueError("give exactly one of to_edge and to_vertex")

        return self


class MorphismFile(BaseModel):
    vertex_map: list[int]
    edge_map: list[EdgeMapEntry]
    indices: dict[int, int] = {}

    def to_morphism(self, source: MultiGraph, target: MultiGraph) -> Morphism:
        images: list[Optional[EdgeImage]] = [None] * source.num_edges

        for entry in self.edge_map:
            if not 0 <= entry.edge < source.num_edges or images[entry.edge] is not None:
                raise FormatError(
                    f"edge map entry for edge {entry.edge} is out of range or repeated",
                    {"edge": entry.edge},
                )

            images[entry.edge] = EdgeImage(edge=entry.to_edge, vertex=entry.to_vertex)

        missing = [e for e, image in enumerate(images) if image is None]

        if missing:
            raise FormatError("edge map does not cover every source edge", {"missing": missing})

        return Morphism.build(source, target, self.vertex_map, images)

    def to_indexed(self, source: MultiGraph, target: MultiGraph) -> IndexedMorphism:
        return IndexedMorphism.build(self.to_morphism(source, target), self.indices)


class PointTerm(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertex: Optional[int] = None
    edge: Optional[int] = None
    offset: Optional[str] = None
    c: int

    def to_point(self) -> Point:
        if self.vertex is not None:
            if self.edge is not None or self.offset is not None:
                raise FormatError("a term names a vertex or an edge offset, not both")

            return Point.at(self.vertex)

        if self.edge is None or self.offset is None:
            raise FormatError("an edge term needs 'edge' and 'offset'")

        return Point.on(self.edge, as_fraction(self.offset))

    @classmethod
    def of(cls, point: Point, c: int) -> "PointTerm":
        if point.is_vertex:
            return cls(vertex=point.vertex, c=c)

        return cls(edge=point.edge, offset=format_fraction(point.offset), c=c)


def point_divisor_from_terms(terms: list[PointTerm]) -> PointDivisor:
    return PointDivisor.of((term.to_point(), term.c) for term in terms)


def point_divisor_to_terms(D: PointDivisor) -> list[PointTerm]:
    return [PointTerm.of(point, c) for point, c in D.terms]


class PLFunctionFile(BaseModel):
    edges: list[list[tuple[int | str, int | str]]]

    def to_function(self) -> PLFunction:
        try:
            return PLFunction.of(self.edges)
        except ChipfireError:
            raise
        except (TypeError, ValueError) as exc:
            raise FormatError("breakpoints must be [offset, value] pairs") from exc

    @classmethod
    def of(cls, f: PLFunction) -> "PLFunctionFile":
        return cls(
            edges=[
                [(format_fraction(offset), format_fraction(value)) for offset, value in edge]
                for edge in f.pieces
            ]
        )


class WitnessEntry(BaseModel):
    vertex: int
    divisor: list[PointTerm]
    function: PLFunctionFile


class WitnessFile(BaseModel):
    divisor: list[PointTerm]
    witnesses: list[WitnessEntry]

    def to_inputs(self) -> tuple[PointDivisor, dict[int, Witness]]:
        witnesses = {}

        for entry in self.witnesses:
            if entry.vertex in witnesses:
                raise FormatError(f"two witnesses for vertex {entry.vertex}", {"vertex": entry.vertex})

            witnesses[entry.vertex] = Witness(
                point_divisor_from_terms(entry.divisor), entry.function.to_function()
            )

        return point_divisor_from_terms(self.divisor), witnesses
