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

import functools
import logging

from pathlib import Path
from typing import Any, Callable

import click

from pydantic import BaseModel

from utils.divisor import Divisor
from utils.errors import ChipfireError, FormatError
from utils.formats import dump_json, read_divisors, read_graph
from utils.graph import MultiGraph

log = logging.getLogger(__name__)

EXIT_FALSE = 1
EXIT_ERROR = 2

INPUT = click.Path(exists=True, dir_okay=False, path_type=Path)
OUTPUT = click.Path(dir_okay=False, writable=True, path_type=Path)


def handle_errors(func: Callable) -> Callable:
    """
    Report toolkit errors as JSON on stderr and exit with status 2.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ChipfireError as exc:
            log.debug("command failed", exc_info=True)
            click.echo(dump_json(exc.to_dict()), err=True)
            raise click.exceptions.Exit(EXIT_ERROR)

    return wrapper


def output_format() -> str:
    root = click.get_current_context().find_root()

    return (root.obj or {}).get("format", "text")


def emit(text: str, payload: BaseModel | dict | list) -> None:
    """
    Print text or the JSON payload, depending on --format.
    """

    if output_format() == "json":
        click.echo(dump_json(payload))
    else:
        click.echo(text)


def verdict(ok: bool, text: str, payload: dict) -> None:
    emit(text, payload)

    if not ok:
        raise click.exceptions.Exit(EXIT_FALSE)


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def load_graph(path: Path) -> MultiGraph:
    return read_graph(read_text(path))


def load_divisor(path: Path, G: MultiGraph) -> Divisor:
    return read_divisors(read_text(path), G.n)[0]


def parse_vertex_set(value: str) -> list[int]:
    try:
        return [int(token) for token in value.split(",") if token.strip()]
    except ValueError as exc:
        raise FormatError(f"not a comma separated vertex list: {value!r}") from exc


def write_output(path: Path | None, content: str) -> None:
    if path is None:
        click.echo(content, nl=False)
        return

    try:
        path.write_text(content, encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}") from exc
