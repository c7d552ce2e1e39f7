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
Graph families with frozen vertex numbering.

- path(n), cycle(n): vertices 0..n-1 along the path, edge i is (i, i+1).
- complete(n): edges (i, j), i < j, in lexicographic order.
- complete-multipartite(n_1, ..., n_k): parts are consecutive id blocks in
  the given order.
- grid(rows, cols): (r, c) gets id r * cols + c (row-major).
- hypercube(d): a 0/1 vector gets the id it has when read as a binary
  number with the first coordinate most significant.
- banana(k): two vertices joined by k parallel edges.
- star(n): centre 0 and leaves 1..n.
- tree-random(n, seed): decoded from a Prüfer sequence drawn with
  random.Random(seed).
"""

import logging
import random

from typing import Literal, Optional

import networkx as nx

from pydantic import BaseModel, ConfigDict, Field

from utils.errors import InvalidParameters
from utils.graph import MultiGraph, from_networkx

log = logging.getLogger(__name__)

FamilyKind = Literal[
    "tree-random",
    "path",
    "cycle",
    "complete",
    "complete-multipartite",
    "complete-bipartite",
    "grid",
    "hypercube",
    "banana",
    "star",
]

ARITY: dict[str, Optional[int]] = {
    "tree-random": 1,
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete-multipartite": None,
    "complete-bipartite": 2,
    "grid": 2,
    "hypercube": 1,
    "banana": 1,
    "star": 1,
}


class FamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    params: tuple[int, ...] = ()
    seed: Optional[int] = Field(default=None)


def grid_id(cols: int, row: int, col: int) -> int:
    return row * cols + col


def _validate(spec: FamilySpec) -> None:
    arity = ARITY[spec.kind]

    if arity is not None and len(spec.params) != arity:
        raise InvalidParameters(
            f"{spec.kind} takes {arity} parameter(s)",
            {"kind": spec.kind, "params": list(spec.params)},
        )

    if spec.kind == "complete-multipartite" and len(spec.params) < 2:
        raise InvalidParameters(
            "complete-multipartite needs at least two parts",
            {"params": list(spec.params)},
        )

    if any(p < 1 for p in spec.params):
        raise InvalidParameters(
            "family parameters must be positive",
            {"kind": spec.kind, "params": list(spec.params)},
        )

    if spec.kind == "cycle" and spec.params[0] < 3:
        raise InvalidParameters("a cycle needs at least 3 vertices; use banana(2)")


def _random_tree(n: int, seed: Optional[int]) -> MultiGraph:
    if n == 1:
        return MultiGraph(1, [])
    if n == 2:
        return MultiGraph(2, [(0, 1)])

    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]

    return from_networkx(nx.from_prufer_sequence(sequence))


def generate_family(spec: FamilySpec) -> MultiGraph:
    """
    Build the graph described by spec with the documented numbering.
    """

    _validate(spec)
    params = spec.params

    match spec.kind:
        case "tree-random":
            graph = _random_tree(params[0], spec.seed)
        case "path":
            n = params[0]
            graph = MultiGraph(n, [(i, i + 1) for i in range(n - 1)])
        case "cycle":
            n = params[0]
            graph = MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])
        case "complete":
            graph = from_networkx(nx.complete_graph(params[0]))
        case "complete-multipartite" | "complete-bipartite":
            graph = from_networkx(nx.complete_multipartite_graph(*params))
        case "grid":
            rows, cols = params
            base = from_networkx(nx.grid_2d_graph(rows, cols))
            labels = [f"{r},{c}" for r in range(rows) for c in range(cols)]
            graph = MultiGraph(base.n, base.edges, labels)
        case "hypercube":
            d = params[0]
            base = from_networkx(nx.hypercube_graph(d))
            labels = [format(i, f"0{d}b") for i in range(base.n)]
            graph = MultiGraph(base.n, base.edges, labels)
        case "banana":
            graph = MultiGraph(2, [(0, 1)] * params[0])
        case "star":
            graph = from_networkx(nx.star_graph(params[0]))

    log.debug("generated %s%s: %r", spec.kind, params, graph)

    return graph


def family(kind: str, *params: int, seed: Optional[int] = None) -> MultiGraph:
    """
    Shorthand for generate_family(FamilySpec(...)).
    """

    return generate_family(FamilySpec(kind=kind, params=params, seed=seed))
