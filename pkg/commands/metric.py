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

from pathlib import Path

import click

from pydantic import TypeAdapter

from commands.common import INPUT, emit, handle_errors, read_text, verdict
from utils.errors import FormatError
from utils.formats import (
    PLFunctionFile,
    PointTerm,
    WitnessFile,
    load_json,
    parse_model,
    point_divisor_from_terms,
    point_divisor_to_terms,
    read_metric_graph,
    write_graph,
)
from utils.metric import (
    MetricGraph,
    PointDivisor,
    find_equivalence_function,
    format_fraction,
    to_div,
    transfer_witness,
)

TERMS = TypeAdapter(list[PointTerm])


def load_metric_graph(path: Path) -> MetricGraph:
    return read_metric_graph(read_text(path))


def load_point_divisor(path: Path) -> PointDivisor:
    try:
        terms = TERMS.validate_python(load_json(read_text(path)))
    except ValueError as exc:
        raise FormatError(f"invalid point divisor in {path}") from exc

    return point_divisor_from_terms(terms)


def _terms_payload(D: PointDivisor) -> list[dict]:
    return [term.model_dump(mode="json", exclude_none=True) for term in point_divisor_to_terms(D)]


def _terms_text(D: PointDivisor) -> str:
    parts = []

    for point, c in D.terms:
        where = f"v{point.vertex}" if point.is_vertex else f"e{point.edge}@{format_fraction(point.offset)}"
        parts.append(f"{c}*{where}")

    return " + ".join(parts) if parts else "0"


def create(cli: click.Group) -> None:
    @cli.group("metric")
    def metric_group() -> None:
        """
        Rational metric graphs.
        """

    @metric_group.command("todiv")
    @click.argument("metric_graph", type=INPUT)
    @click.argument("function", type=INPUT)
    @handle_errors
    def todiv_command(metric_graph: Path, function: Path) -> None:
        """
        Principal divisor of a piecewise linear function.
        """

        gamma = load_metric_graph(metric_graph)
        f = parse_model(PLFunctionFile, read_text(function)).to_function()
        D = to_div(gamma, f)
        emit(_terms_text(D), _terms_payload(D))

    @metric_group.command("equiv")
    @click.argument("metric_graph", type=INPUT)
    @click.argument("first", type=INPUT)
    @click.argument("second", type=INPUT)
    @handle_errors
    def equiv_command(metric_graph: Path, first: Path, second: Path) -> None:
        """
        Find f with D - div(f) = E for vertex-supported divisors.
        """

        gamma = load_metric_graph(metric_graph)
        f = find_equivalence_function(gamma, load_point_divisor(first), load_point_divisor(second))

        if f is None:
            verdict(False, "not equivalent", {"equivalent": False})
            return

        function = PLFunctionFile.of(f)
        verdict(
            True,
            "\n".join(
                " ".join(f"{offset}:{value}" for offset, value in edge) for edge in function.edges
            ),
            {"equivalent": True, "function": function.model_dump()},
        )

    @metric_group.command("transfer")
    @click.argument("metric_graph", type=INPUT)
    @click.argument("witness", type=INPUT)
    @handle_errors
    def transfer_command(metric_graph: Path, witness: Path) -> None:
        """
        Move a positive-rank divisor to a subdivision of the underlying graph.
        """

        gamma = load_metric_graph(metric_graph)
        D, witnesses = parse_model(WitnessFile, read_text(witness)).to_inputs()
        result = transfer_witness(gamma, D, witnesses)

        emit(
            f"bound {result.bound}\nscale {format_fraction(result.scale)}\n"
            f"{result.divisor}\n{write_graph(result.graph)}".rstrip("\n"),
            {
                "bound": result.bound,
                "scale": format_fraction(result.scale),
                "divisor": list(result.divisor),
                "positive_rank": result.positive_rank,
                "graph": {"n": result.graph.n, "edges": [list(e) for e in result.graph.edges]},
            },
        )
