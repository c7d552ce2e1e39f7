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

from commands.common import (
    INPUT,
    emit,
    handle_errors,
    load_divisor,
    load_graph,
    parse_vertex_set,
    verdict,
)
from utils.chipfire import equivalent, fire_set, rank, reduce
from utils.formats import ScriptFile


def create(cli: click.Group) -> None:
    @cli.command("rank")
    @click.argument("graph", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @handle_errors
    def rank_command(graph: Path, divisor: Path) -> None:
        """
        Exact rank of a divisor.
        """

        G = load_graph(graph)
        value = rank(G, load_divisor(divisor, G))
        emit(str(value), {"rank": value})

    @cli.command("reduce")
    @click.argument("graph", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @click.option("--at", "vertex", type=int, required=True, help="Base vertex.")
    @handle_errors
    def reduce_command(graph: Path, divisor: Path, vertex: int) -> None:
        """
        The equivalent divisor reduced at a vertex, and its script.
        """

        G = load_graph(graph)
        reduced, script = reduce(G, load_divisor(divisor, G), vertex)
        emit(str(reduced), {"divisor": list(reduced), "script": list(script)})

    @cli.command("fire")
    @click.argument("graph", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @click.option("--set", "vertices", required=True, help="Comma separated vertices, e.g. 0,1,2.")
    @click.option("--legal", is_flag=True, help="Refuse firings that go into debt.")
    @handle_errors
    def fire_command(graph: Path, divisor: Path, vertices: str, legal: bool) -> None:
        """
        Fire a vertex set once.
        """

        G = load_graph(graph)
        fired = fire_set(G, load_divisor(divisor, G), parse_vertex_set(vertices), legal)
        emit(str(fired), {"divisor": list(fired)})

    @cli.command("equiv")
    @click.argument("graph", type=INPUT)
    @click.argument("first", type=INPUT)
    @click.argument("second", type=INPUT)
    @handle_errors
    def equiv_command(graph: Path, first: Path, second: Path) -> None:
        """
        Decide equivalence; prints a script x with D - Qx = E.
        """

        G = load_graph(graph)
        script = equivalent(G, load_divisor(first, G), load_divisor(second, G))

        if script is None:
            verdict(False, "not equivalent", {"equivalent": False})
        else:
            certificate = ScriptFile.of(script)
            verdict(
                True,
                " ".join(str(x) for x in certificate.script),
                {"equivalent": True, **certificate.model_dump()},
            )
