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
from typing import Iterable, Sequence

from utils.errors import (
    CertificateInconsistent,
    EmptyMember,
    HypothesisUnmet,
    InvalidParameters,
    NotABramble,
    VertexOutOfRange,
)
from utils.families import grid_id
from utils.graph import MultiGraph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bramble:
    """
    Members as sorted vertex tuples, duplicates dropped, first occurrence
    order kept.
    """

    members: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, members: Iterable[Iterable[int]]) -> "Bramble":
        seen: set[tuple[int, ...]] = set()
        kept = []

        for index, member in enumerate(members):
            normalized = tuple(sorted(set(int(v) for v in member)))

            if not normalized:
                raise EmptyMember(f"member {index} is empty", {"member": index})

            if normalized not in seen:
                seen.add(normalized)
                kept.append(normalized)

        return cls(tuple(kept))

    def __len__(self) -> int:
        return len(self.members)

    def as_lists(self) -> list[list[int]]:
        return [list(member) for member in self.members]


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "HittingSet":
        return cls(tuple(sorted(set(vertices))))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def hits(self, bramble: Bramble) -> bool:
        chosen = set(self.vertices)

        return all(chosen.intersection(member) for member in bramble.members)


def _as_bramble(members: Bramble | Iterable[Iterable[int]]) -> Bramble:
    return members if isinstance(members, Bramble) else Bramble.of(members)


def is_bramble(G: MultiGraph, members: Bramble | Iterable[Iterable[int]]) -> bool:
    bramble = _as_bramble(members)

    if not bramble.members:
        raise InvalidParameters("a bramble needs at least one member")

    for member in bramble.members:
        for v in member:
            if not 0 <= v < G.n:
                raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}", {"vertex": v})

    for i, first in enumerate(bramble.members):
        for second in bramble.members[i:]:
            if not G.is_induced_connected(set(first) | set(second)):
                return False

    return True


def require_bramble(G: MultiGraph, members: Bramble | Iterable[Iterable[int]]) -> Bramble:
    bramble = _as_bramble(members)

    if not is_bramble(G, bramble):
        raise NotABramble("members do not pairwise touch", {"members": bramble.as_lists()})

    return bramble


def _greedy_hitting_set(members: list[frozenset[int]]) -> list[int]:
    chosen: list[int] = []
    unhit = list(members)

    while unhit:
        counts: dict[int, int] = {}

        for member in unhit:
            for v in member:
                counts[v] = counts.get(v, 0) + 1

        best = min(counts, key=lambda v: (-counts[v], v))
        chosen.append(best)
        unhit = [member for member in unhit if best not in member]

    return chosen


def _packing_bound(members: list[frozenset[int]]) -> int:
    # Pairwise disjoint members each need their own vertex.
    used: set[int] = set()
    count = 0

    for member in sorted(members, key=lambda m: (len(m), sorted(m))):
        if used.isdisjoint(member):
            used |= member
            count += 1

    return count


def minimum_hitting_set(members: Sequence[Iterable[int]]) -> list[int]:
    """
    Exact minimum hitting set by branch-and-bound, branching on the
    smallest unhit member.
    """

    family = [frozenset(member) for member in members]
    best = sorted(_greedy_hitting_set(family))
    chosen: list[int] = []

    def branch(unhit: list[frozenset[int]]) -> None:
        nonlocal best

        if not unhit:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return

        if len(chosen) + _packing_bound(unhit) >= len(best):
            return

        target = min(unhit, key=lambda m: (len(m), sorted(m)))

        for v in sorted(target):
            chosen.append(v)
            branch([member for member in unhit if v not in member])
            chosen.pop()

    branch(family)

    return best


def bramble_order(G: MultiGraph, bramble: Bramble | Iterable[Iterable[int]]) -> tuple[int, HittingSet]:
    bramble = require_bramble(G, bramble)
    hitting = HittingSet.of(minimum_hitting_set(bramble.members))

    if not hitting.hits(bramble):
        raise CertificateInconsistent("optimal hitting set misses a member")

    log.debug("bramble of %d members has order %d", len(bramble), hitting.size)

    return hitting.size, hitting


def hitting_set_from_cut(
    G: MultiGraph,
    bramble: Bramble | Iterable[Iterable[int]],
    U: Iterable[int],
) -> HittingSet:
    """
    Hitting set of size at most |E(U, V \\ U)| + 1 for a bramble with one
    member inside U and one inside its complement.

    X and Y are the shores of the cut inside U and outside U. A member B'
    inside U with the fewest vertices on X is picked; one vertex of B' ∩ X
    plus, for every cut edge xy, x when x is outside B' and y otherwise.
    """

    bramble = require_bramble(G, bramble)
    inside = set(U)
    cut = G.cut_edges(inside)

    within = [set(m) for m in bramble.members if set(m) <= inside]
    outside = [set(m) for m in bramble.members if inside.isdisjoint(m)]

    if not within or not outside:
        raise HypothesisUnmet(
            "need a member inside U and a member inside its complement",
            {"inside": len(within), "outside": len(outside)},
        )

    shore = set()

    for edge in cut:
        tail, head = G.edges[edge]
        shore.add(tail if tail in inside else head)

    chosen_member = min(within, key=lambda m: (len(m & shore), sorted(m)))
    touching = sorted(chosen_member & shore)

    # Members inside U touch the outside member only through a cut edge.
    if not touching:
        raise CertificateInconsistent("member inside U does not reach the cut")

    chosen = {touching[0]}

    for edge in cut:
        tail, head = G.edges[edge]
        x, y = (tail, head) if tail in inside else (head, tail)
        chosen.add(x if x not in chosen_member else y)

    hitting = HittingSet.of(chosen)

    if not hitting.hits(bramble) or hitting.size > len(cut) + 1:
        raise CertificateInconsistent(
            "cut construction did not produce a small hitting set",
            {"size": hitting.size, "cut": len(cut)},
        )

    return hitting


def make_multipartite_bramble(*sizes: int) -> Bramble:
    """
    {{s_1}, ..., {s_k}} plus every edge of K_{n_1,...,n_k}; s_i is the first
    vertex of part i.
    """

    if len(sizes) < 2 or any(size < 1 for size in sizes):
        raise InvalidParameters("need at least two positive part sizes", {"sizes": list(sizes)})

    starts = []
    part_of = []
    offset = 0

    for part, size in enumerate(sizes):
        starts.append(offset)
        part_of.extend([part] * size)
        offset += size

    members: list[tuple[int, ...]] = [(s,) for s in starts]
    members.extend(
        (u, v)
        for u in range(offset)
        for v in range(u + 1, offset)
        if part_of[u] != part_of[v]
    )

    return Bramble.of(members)


def make_grid_bramble(m: int, n: int) -> Bramble:
    """
    Bramble on grid(m+1, n+1): the last column A, the last row B without
    its corner, and the crosses C_ij of row i and column j inside the
    top-left m x n block. Coordinates are 1-based; (a, b) is vertex
    (a-1)(n+1) + (b-1).
    """

    if not 1 <= m <= n:
        raise InvalidParameters("need 1 <= m <= n", {"m": m, "n": n})

    cols = n + 1

    def vid(a: int, b: int) -> int:
        return grid_id(cols, a - 1, b - 1)

    column = [vid(a, n + 1) for a in range(1, m + 2)]
    row = [vid(m + 1, b) for b in range(1, n + 1)]
    crosses = [
        [vid(a, b) for a in range(1, m + 1) for b in range(1, n + 1) if a == i or b == j]
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    ]

    return Bramble.of([column, row, *crosses])
