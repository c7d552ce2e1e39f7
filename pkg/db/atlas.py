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

import logging

import networkx as nx

from utils.errors import InvalidParameters
from utils.families import family
from utils.graph import MultiGraph, from_networkx

log = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


def get_connected_graphs(max_vertices: int) -> list[tuple[str, MultiGraph]]:
    """
    All connected simple graphs on 1..max_vertices vertices, one per
    isomorphism class, in the order of the networkx graph atlas. Ids are
    "atlas-<index>".
    """

    if not 1 <= max_vertices <= ATLAS_MAX_VERTICES:
        raise InvalidParameters(
            f"the graph atlas covers 1..{ATLAS_MAX_VERTICES} vertices",
            {"max_vertices": max_vertices},
        )

    graphs = []

    for index, graph in enumerate(nx.graph_atlas_g()):
        n = graph.number_of_nodes()

        if n == 0 or n > max_vertices or not nx.is_connected(graph):
            continue

        graphs.append((f"atlas-{index}", from_networkx(graph)))

    log.info("atlas suite: %d connected graphs on at most %d vertices", len(graphs), max_vertices)

    return graphs


def get_family_graphs() -> list[tuple[str, MultiGraph]]:
    """
    Named graphs whose gonality and treewidth are known in closed form.
    """

    graphs = [(f"complete-{n}", family("complete", n)) for n in range(2, 7)]
    graphs += [
        (f"complete-bipartite-{a}-{b}", family("complete-bipartite", a, b))
        for a in range(1, 5)
        for b in range(a, 5)
    ]
    graphs.append(("complete-multipartite-2-2-2", family("complete-multipartite", 2, 2, 2)))
    graphs += [
        (f"grid-{m + 1}-{n + 1}", family("grid", m + 1, n + 1))
        for m, n in ((1, 1), (1, 2), (2, 2), (2, 3))
    ]
    graphs += [(f"banana-{k}", family("banana", k)) for k in (2, 3)]
    graphs += [(f"tree-{seed}", family("tree-random", 7, seed=seed)) for seed in range(3)]

    return graphs


def get_suite(name: str, max_vertices: int) -> list[tuple[str, MultiGraph]]:
    match name:
        case "all-connected":
            return get_connected_graphs(max_vertices)
        case "families":
            return get_family_graphs()

    raise InvalidParameters(f"unknown suite {name!r}", {"suite": name})
