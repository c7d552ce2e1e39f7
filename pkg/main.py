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

import click

from commands.divisors import create as create_divisors
from commands.gonality import create as create_gonality
from commands.graphs import create as create_graphs
from commands.metric import create as create_metric
from commands.morphism import create as create_morphism
from commands.treewidth import create as create_treewidth
from commands.verify import create as create_verify
from utils.log import setup_logging
from utils.settings import get_settings

settings = get_settings()


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default=settings.OUTPUT_FORMAT,
    show_default=True,
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=settings.LOG_LEVEL,
    show_default=True,
)
@click.pass_context
def cli(ctx: click.Context, output_format: str, log_level: str) -> None:
    """
    Chip-firing, gonality and treewidth on finite multigraphs.

    Exit status is 0 on success or a true verdict, 1 on a false verdict
    and 2 on errors.
    """

    setup_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format


create_graphs(cli)
create_divisors(cli)
create_gonality(cli)
create_treewidth(cli)
create_verify(cli)
create_morphism(cli)
create_metric(cli)


if __name__ == "__main__":
    cli()
