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

from commands.common import INPUT, OUTPUT, emit, handle_errors, load_graph, write_output
from utils.formats import GonalityFile, dump_json
from utils.gonality import gonality


def create(cli: click.Group) -> None:
    @cli.command("gonality")
    @click.argument("graph", type=INPUT)
    @click.option("--cap", type=int, default=None, help="Largest degree to try.")
    @click.option("--witness-out", type=OUTPUT, default=None, help="Write the witness as JSON.")
    @handle_errors
    def gonality_command(graph: Path, cap: Optional[int], witness_out: Optional[Path]) -> None:
        """
        Exact divisorial gonality.
        """

        result = gonality(load_graph(graph), cap=cap)
        certificate = GonalityFile(
            gonality=result.value,
            witness=list(result.witness),
            candidates=result.stats.candidates,
        )

        if witness_out is not None:
            write_output(witness_out, dump_json(certificate) + "\n")

        emit(str(result.value), certificate.model_dump())
