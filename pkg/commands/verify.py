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

from commands.common import EXIT_ERROR, EXIT_FALSE, INPUT, emit, handle_errors, load_graph
from db.atlas import get_suite
from utils.errors import InvalidParameters
from utils.settings import get_settings
from utils.theorem import verify_main_theorem

settings = get_settings()


def create(cli: click.Group) -> None:
    @cli.group("verify")
    def verify_group() -> None:
        """
        Suite verification.
        """

    @verify_group.command("theorem")
    @click.argument("files", nargs=-1, type=INPUT)
    @click.option("--suite", type=click.Choice(["all-connected", "families"]), default=None)
    @click.option("--max-vertices", type=int, default=settings.SUITE_MAX_VERTICES, show_default=True)
    @click.option("--workers", type=int, default=settings.WORKERS, show_default=True)
    @handle_errors
    def theorem_command(
        files: tuple[Path, ...],
        suite: Optional[str],
        max_vertices: int,
        workers: int,
    ) -> None:
        """
        Check dgon(G) >= tw(G) on a suite or on graph files.
        """

        if bool(files) == bool(suite):
            raise InvalidParameters("give either --suite or graph files")

        graphs = get_suite(suite, max_vertices) if suite else [(str(path), load_graph(path)) for path in files]
        report = verify_main_theorem(graphs, workers=workers)
        emit(report.to_text(), report)

        if report.violations:
            raise click.exceptions.Exit(EXIT_FALSE)
        if report.errors:
            raise click.exceptions.Exit(EXIT_ERROR)
