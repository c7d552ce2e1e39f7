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

from commands.common import OUTPUT, handle_errors, write_output
from utils.families import ARITY, FamilySpec, generate_family
from utils.formats import write_graph


def create(cli: click.Group) -> None:
    @cli.command("gen")
    @click.argument("kind", type=click.Choice(sorted(ARITY)))
    @click.argument("params", nargs=-1, type=int)
    @click.option("--seed", type=int, default=None, help="Seed for random families.")
    @click.option("-o", "--output", type=OUTPUT, default=None, help="Write to a file instead of stdout.")
    @handle_errors
    def gen(kind: str, params: tuple[int, ...], seed: Optional[int], output: Optional[Path]) -> None:
        """
        Generate a graph family member in the graph text format.
        """

        G = generate_family(FamilySpec(kind=kind, params=params, seed=seed))
        write_output(output, write_graph(G))
