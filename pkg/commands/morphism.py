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

from commands.common import INPUT, emit, handle_errors, load_divisor, load_graph, read_text, verdict
from utils.formats import MorphismFile, parse_model
from utils.harmonic import (
    Morphism,
    Requirement,
    check_morphism,
    expand_indexed,
    gonality_bound_certificate,
    pullback,
)


def load_morphism(source: Path, target: Path, morphism: Path) -> Morphism:
    """
    Indices in the file are applied by parallel-edge expansion.
    """

    spec = parse_model(MorphismFile, read_text(morphism))
    indexed = spec.to_indexed(load_graph(source), load_graph(target))

    if spec.indices:
        return expand_indexed(indexed).morphism

    return indexed.base


def create(cli: click.Group) -> None:
    @cli.group("morphism")
    def morphism_group() -> None:
        """
        Harmonic morphism certificates.
        """

    @morphism_group.command("check")
    @click.argument("source", type=INPUT)
    @click.argument("target", type=INPUT)
    @click.argument("morphism", type=INPUT)
    @click.option(
        "--require",
        type=click.Choice([r.value for r in Requirement]),
        default=Requirement.HARMONIC.value,
        show_default=True,
    )
    @handle_errors
    def check_command(source: Path, target: Path, morphism: Path, require: str) -> None:
        """
        Verify a morphism and print its multiplicities and degree.
        """

        data = check_morphism(load_morphism(source, target, morphism), require)

        if data is None:
            verdict(False, "not harmonic", {"harmonic": False})

        emit(
            f"degree {data.degree}\n" + " ".join(str(m) for m in data.multiplicities),
            {"harmonic": True, "degree": data.degree, "multiplicities": list(data.multiplicities)},
        )

    @morphism_group.command("pullback")
    @click.argument("source", type=INPUT)
    @click.argument("target", type=INPUT)
    @click.argument("morphism", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @handle_errors
    def pullback_command(source: Path, target: Path, morphism: Path, divisor: Path) -> None:
        """
        Pull a target divisor back to the source.
        """

        phi = load_morphism(source, target, morphism)
        pulled = pullback(phi, load_divisor(divisor, phi.target))
        emit(str(pulled), {"divisor": list(pulled)})

    @morphism_group.command("certify")
    @click.argument("source", type=INPUT)
    @click.argument("target", type=INPUT)
    @click.argument("morphism", type=INPUT)
    @click.argument("divisor", type=INPUT)
    @handle_errors
    def certify_command(source: Path, target: Path, morphism: Path, divisor: Path) -> None:
        """
        Gonality bound dgon(source) <= deg(D) deg(phi) with a witness.
        """

        phi = load_morphism(source, target, morphism)
        pulled, bound = gonality_bound_certificate(phi, load_divisor(divisor, phi.target))
        emit(f"{bound}\n{pulled}", {"bound": bound, "witness": list(pulled)})
