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

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx

from utils.bramble import Bramble, bramble_order
from utils.errors import CertificateInconsistent, InvalidParameters, TooLarge
from utils.graph import MultiGraph
from utils.settings import get_settings

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]
    width: int


def elimination_width(
    G: MultiGraph,
    order: Sequence[int],
) -> tuple[int, list[tuple[int, int]]]:
    """
    Width of an elimination order and the fill edges of its chordal
    extension.
    """

    if sorted(order) != list(G.vertices):
        raise InvalidParameters("elimination order must list every vertex once")

    neighbours = [set(row) for row in G.adjacency]
    eliminated: set[int] = set()
    width = 0
    fill: list[tuple[int, int]] = []

    for v in order:
        later = sorted(neighbours[v] - eliminated)
        width = max(width, len(later))

        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if b not in neighbours[a]:
                    neighbours[a].add(b)
                    neighbours[b].add(a)
                    fill.append((a, b))

        eliminated.add(v)

    return width, fill


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _later_neighbours(adjacency: list[int], eliminated: int, v: int) -> int:
    # Vertices outside the eliminated set reachable from v through it.
    seen = 1 << v
    frontier = [v]
    found = 0

    while frontier:
        w = frontier.pop()
        fresh = adjacency[w] & ~seen
        seen |= fresh
        found |= fresh & ~eliminated

        for u in _bits(fresh & eliminated):
            frontier.append(u)

    return found


def _order_of_width(adjacency: list[int], n: int, k: int) -> Optional[list[int]]:
    full = (1 << n) - 1
    dead: set[int] = set()
    order: list[int] = []

    def search(eliminated: int) -> bool:
        remaining = n - eliminated.bit_count()

        if remaining - 1 <= k:
            order.extend(_bits(full & ~eliminated))
            return True

        if eliminated in dead:
            return False

        for v in _bits(full & ~eliminated):
            if _later_neighbours(adjacency, eliminated, v).bit_count() <= k:
                order.append(v)

                if search(eliminated | (1 << v)):
                    return True

                order.pop()

        dead.add(eliminated)
        return False

    return order if search(0) else None


def treewidth_exact(
    G: MultiGraph,
    lower_hints: Optional[Sequence[Bramble]] = None,
) -> tuple[int, EliminationOrder]:
    """
    Exact treewidth of the underlying simple graph with an optimal
    elimination order.

    Widths are tried upwards from the best lower bound (degeneracy or
    bramble orders minus one) to the min-fill-in upper bound; feasibility
    of width k is a search over eliminated vertex sets.
    """

    limit = get_settings().TREEWIDTH_MAX_VERTICES

    if G.n > limit:
        raise TooLarge(
            f"exact treewidth is limited to {limit} vertices",
            {"n": G.n, "limit": limit},
        )

    simple = G.simple()

    if G.n == 0:
        return 0, EliminationOrder((), 0)

    graph = nx.Graph(simple.to_networkx())
    lower = max(nx.core_number(graph).values())

    for bramble in lower_hints or ():
        order_value, _ = bramble_order(simple, bramble)
        lower = max(lower, order_value - 1)

    upper, _ = nx.approximation.treewidth_min_fill_in(graph)

    if lower > upper:
        raise CertificateInconsistent(
            "lower bound exceeds the heuristic upper bound",
            {"lower": lower, "upper": upper},
        )

    adjacency = [sum(1 << u for u in row) for row in simple.adjacency]

    for k in range(lower, upper + 1):
        order = _order_of_width(adjacency, G.n, k)

        if order is None:
            log.debug("no elimination order of width %d", k)
            continue

        width, _ = elimination_width(simple, order)

        if width != k:
            raise CertificateInconsistent(
                "elimination order width does not match the search",
                {"expected": k, "width": width},
            )

        return k, EliminationOrder(tuple(order), k)

    raise CertificateInconsistent("no order found up to the heuristic upper bound")
