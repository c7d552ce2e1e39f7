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
from typing import Optional

import click

from commands.common import (
    INPUT,
    emit,
    handle_errors,
    load_divisor,
    load_graph,
    read_text,
    verdict,
)
from utils.bramble import Bramble, bramble_order, is_bramble
from utils.formats import BrambleFile, parse_model
from utils.theorem import hitting_set_from_divisor
from utils.treewidth import treewidth_exact


def load_bramble(path: Path) -> Bramble:
    return parse_model(BrambleFile, read_text(path)).to_bramble()


def create(cli: click.Group) -> None:
    @cli.command("treewidth")
    @click.argument("graph", type=INPUT)
    @click.option("--bramble", "bramble_path", type=INPUT, default=None, help="Bramble JSON used as a lower bound.")
    @handle_errors
    def treewidth_command(graph: Path, bramble_path: Optional[Path]) -> None:
        """
        Exact treewidth with an optimal elimination order.
        """

        hints = [load_bramble(bramble_path)] if bramble_path else None
        width, order = treewidth_exact(load_graph(graph), hints)
        emit(str(width), {"treewidth": width, "order": list(order.order)})

    @cli.group("bramble")
    def bramble_group() -> None:
        """
        Bramble checks and hitting sets.
        """

    @bramble_group.command("check")
    @click.argument("graph", type=INPUT)
    @click.argument("bramble", type=INPUT)
    @handle_errors
    def check_command(graph: Path, bramble: Path) -> None:
        """
        Exit 0 when the members pairwise touch, 1 otherwise.
        """

        ok = is_bramble(load_graph(graph), load_bramble(bramble))
        verdict(ok, "bramble" if ok else "not a bramble", {"bramble": ok})

    @bramble_group.command("order")
    @click.argument("graph", type=INPUT)
    @click.argument("bramble", type=INPUT)
    @handle_errors
    def order_command(graph: Path, bramble: Path) -> None:
        """
        Bramble order with a minimum hitting set.
        """

        order, hitting = bramble_order(load_graph(graph), load_bramble(bramble))
        emit(
            f"{order}\n" + " ".join(str(v) for v in hitting.vertices),
            {"order": order, "hitting_set": list(hitting.vertices)},
        )

    @bramble_group.command("certify")
    @click.argument("graph", type=INPUT)
    @click.argument("bramble", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @handle_errors
    def certify_command(graph: Path, bramble: Path, divisor: Path) -> None:
        """
        Hitting set of size at most deg(D) + 1 from a positive-rank divisor.
        """

        G = load_graph(graph)
        D = load_divisor(divisor, G)
        hitting = hitting_set_from_divisor(G, D, load_bramble(bramble))
        emit(
            " ".join(str(v) for v in hitting.vertices),
            {"hitting_set": list(hitting.vertices), "size": hitting.size, "degree": D.degree},
        )
