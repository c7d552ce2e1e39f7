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

from collections import deque
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from utils.divisor import (
    Divisor,
    FiringScript,
    LevelChain,
    StrongSeparator,
    effective_divisors,
)
from utils.errors import (
    CertificateInconsistent,
    DimensionMismatch,
    EmptyOrFullSet,
    EmptySet,
    EqualDivisors,
    IllegalMove,
    NoEffectiveRepresentative,
    NotAStrongSeparator,
    NotEffective,
    NotEquivalent,
    TooLarge,
    VertexOutOfRange,
)
from utils.graph import MultiGraph
from utils.settings import get_settings

log = logging.getLogger(__name__)


def _check_divisor(G: MultiGraph, D: Divisor) -> None:
    if len(D) != G.n:
        raise DimensionMismatch(
            "divisor length does not match the vertex count",
            {"n": G.n, "divisor": len(D)},
        )


def _check_vertex(G: MultiGraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}", {"vertex": v})


def _check_subset(G: MultiGraph, vertices: Iterable[int]) -> frozenset[int]:
    chosen = frozenset(int(v) for v in vertices)

    for v in chosen:
        _check_vertex(G, v)

    return chosen


def base_vertex(G: MultiGraph, q: Optional[int] = None) -> int:
    if q is None:
        q = get_settings().BASE_VERTEX

        if q >= G.n:
            q = 0

    _check_vertex(G, q)
    return q


def fire_set(
    G: MultiGraph,
    D: Divisor,
    U: Iterable[int],
    require_legal: bool = False,
) -> Divisor:
    """
    Fire every vertex of U once: D - Q 1_U.
    """

    _check_divisor(G, D)
    chosen = _check_subset(G, U)

    if require_legal:
        if not chosen or len(chosen) == G.n:
            raise EmptyOrFullSet(
                "a legal firing set must be nonempty and proper",
                {"size": len(chosen), "n": G.n},
            )
        if not D.is_effective:
            raise NotEffective("legal firing starts from an effective divisor")

        for u in sorted(chosen):
            needed = G.out_degree(u, set(chosen))

            if D[u] < needed:
                raise IllegalMove(
                    f"vertex {u} has {D[u]} chips but {needed} edges leave the set",
                    {"vertex": u, "chips": D[u], "needed": needed},
                )

    fired = D.as_array() - G.laplacian @ FiringScript.indicator(G.n, chosen).as_array()

    return Divisor(tuple(fired))


def apply_script(G: MultiGraph, D: Divisor, x: FiringScript) -> Divisor:
    _check_divisor(G, D)

    if len(x) != G.n:
        raise DimensionMismatch(
            "script length does not match the vertex count",
            {"n": G.n, "script": len(x)},
        )

    return Divisor(tuple(D.as_array() - G.laplacian @ x.as_array()))


def _unburnt(G: MultiGraph, chips: np.ndarray, v: int) -> set[int]:
    # Fire starts at v and crosses an edge into u once the burnt edges at u
    # outnumber its chips. The unburnt set (if any) can fire legally.
    burnt = [False] * G.n
    burnt[v] = True
    heat = [0] * G.n
    queue = deque([v])

    while queue:
        w = queue.popleft()

        for u, count in G.adjacency[w].items():
            if burnt[u]:
                continue

            heat[u] += count

            if heat[u] > chips[u]:
                burnt[u] = True
                queue.append(u)

    return {u for u in G.vertices if not burnt[u]}


def is_reduced(G: MultiGraph, D: Divisor, v: int) -> bool:
    """
    Dhar's burning test for v-reducedness of an effective divisor.
    """

    _check_divisor(G, D)
    _check_vertex(G, v)
    G.require_connected()

    if not D.is_effective:
        raise NotEffective("reducedness is defined for effective divisors")

    return not _unburnt(G, D.as_array(), v)


def is_reduced_by_definition(G: MultiGraph, D: Divisor, v: int) -> bool:
    """
    Reference check over every nonempty U ⊆ V \\ {v}. Exponential.
    """

    if not D.is_effective:
        raise NotEffective("reducedness is defined for effective divisors")

    others = [u for u in G.vertices if u != v]

    for size in range(1, len(others) + 1):
        for chosen in combinations(others, size):
            if fire_set(G, D, chosen).is_effective:
                return False

    return True


def reduce(G: MultiGraph, D: Divisor, v: int) -> tuple[Divisor, FiringScript]:
    """
    Return the v-reduced divisor equivalent to D and a normalized script x
    with D - Qx equal to it.

    Divisors that are negative away from v are first repaired by firing the
    BFS balls around v, farthest layer first, until every vertex except v is
    nonnegative. Burning then runs on the resulting divisor.
    """

    _check_divisor(G, D)
    _check_vertex(G, v)
    G.require_connected()

    Q = G.laplacian
    chips = D.as_array().copy()
    script = np.zeros(G.n, dtype=np.int64)
    dist = G.distances(v)
    depth = max(dist)

    for radius in range(depth - 1, -1, -1):
        ball = np.array([1 if d <= radius else 0 for d in dist], dtype=np.int64)
        rounds = 0

        for u in G.vertices:
            if dist[u] != radius + 1 or chips[u] >= 0:
                continue

            gain = sum(
                count for w, count in G.adjacency[u].items() if dist[w] == radius
            )
            # ceil(-chips / gain) firings lift u to zero
            rounds = max(rounds, -(int(chips[u]) // gain))

        if rounds:
            chips -= rounds * (Q @ ball)
            script += rounds * ball

    while True:
        unburnt = _unburnt(G, chips, v)

        if not unburnt:
            break

        # Fire the unburnt set as often as it stays legal; at least once.
        rounds = min(
            chips[u] // out
            for u in unburnt
            if (out := G.out_degree(u, unburnt))
        )
        indicator = FiringScript.indicator(G.n, unburnt).as_array()
        chips -= rounds * (Q @ indicator)
        script += rounds * indicator

    result = Divisor(tuple(chips))
    log.debug("reduced %s at %d to %s", D, v, result)

    return result, FiringScript(tuple(script)).normalized()


def equivalent(
    G: MultiGraph,
    D: Divisor,
    E: Divisor,
    q: Optional[int] = None,
) -> Optional[FiringScript]:
    """
    Return the normalized script x with D - Qx = E, or None.
    """

    _check_divisor(G, D)
    _check_divisor(G, E)

    if D.degree != E.degree:
        return None

    q = base_vertex(G, q)
    reduced_d, script_d = reduce(G, D, q)
    reduced_e, script_e = reduce(G, E, q)

    if reduced_d != reduced_e:
        return None

    return (script_d - script_e).normalized()


def chain_decompose(G: MultiGraph, D: Divisor, D0: Divisor) -> LevelChain:
    """
    Split the move D -> D0 into nested set-firings through effective
    divisors.
    """

    if not D.is_effective or not D0.is_effective:
        raise NotEffective("both divisors of a chain must be effective")
    if D == D0:
        raise EqualDivisors("a chain needs two distinct divisors")

    script = equivalent(G, D, D0)

    if script is None:
        raise NotEquivalent("divisors are not equivalent")

    top = max(script.values)
    chain = LevelChain(
        tuple(
            frozenset(v for v in G.vertices if script[v] >= top - i + 1)
            for i in range(1, top + 1)
        )
    )

    for step in level_divisors(G, D, chain):
        if not step.is_effective:
            raise CertificateInconsistent(
                "a chain step left the effective cone", {"divisor": list(step)}
            )

    return chain


def level_divisors(G: MultiGraph, D: Divisor, chain: LevelChain) -> list[Divisor]:
    """
    Divisors D_1, ..., D_k reached after each firing of the chain.
    """

    steps = []
    current = D

    for chosen in chain.sets:
        current = fire_set(G, current, chosen)
        steps.append(current)

    return steps


def covers(G: MultiGraph, D: Divisor, v: int) -> bool:
    reduced, _ = reduce(G, D, v)

    if reduced[v] < 0:
        raise NoEffectiveRepresentative(
            "divisor is not equivalent to an effective divisor",
            {"divisor": list(D)},
        )

    return reduced[v] >= 1


def has_positive_rank(G: MultiGraph, D: Divisor) -> bool:
    for v in G.vertices:
        reduced, _ = reduce(G, D, v)

        if reduced[v] < 1:
            return False

    return True


def _has_effective_representative(G: MultiGraph, D: Divisor, q: int) -> bool:
    reduced, _ = reduce(G, D, q)

    return reduced[q] >= 0


def rank(G: MultiGraph, D: Divisor, q: Optional[int] = None) -> int:
    """
    Exact rank, found by raising k until some effective E of degree k leaves
    D - E without an effective representative.
    """

    q = base_vertex(G, q)

    if D.degree < 0 or not _has_effective_representative(G, D, q):
        return -1

    limit = get_settings().RANK_MAX_DEGREE

    if D.degree > limit:
        raise TooLarge(
            f"rank enumeration is limited to degree {limit}",
            {"degree": D.degree, "limit": limit},
        )

    k = 0

    while k < D.degree:
        if not all(
            _has_effective_representative(G, D - E, q)
            for E in effective_divisors(G.n, k + 1)
        ):
            break

        k += 1

    return k


def effective_class(G: MultiGraph, D: Divisor, q: Optional[int] = None) -> list[Divisor]:
    """
    Every effective divisor equivalent to D, lexicographically ordered.
    """

    q = base_vertex(G, q)
    target, _ = reduce(G, D, q)

    if target[q] < 0:
        return []

    return [
        E
        for E in effective_divisors(G.n, D.degree)
        if reduce(G, E, q)[0] == target
    ]


def is_strong_separator(G: MultiGraph, S: Iterable[int]) -> bool:
    chosen = _check_subset(G, S)

    if not chosen:
        raise EmptySet("a separator must be nonempty")

    rest = [v for v in G.vertices if v not in chosen]

    for component in G.components(rest):
        inner = sum(
            count
            for v in component
            for u, count in G.adjacency[v].items()
            if u in component
        ) // 2

        if inner != len(component) - 1:
            return False

        for s in chosen:
            if sum(G.multiplicity(s, v) for v in component) > 1:
                return False

    return True


def separator_rank_certificate(
    G: MultiGraph,
    D: Divisor,
    S: StrongSeparator | Iterable[int],
) -> bool:
    """
    True when D covers every vertex of the strong separator S, which forces
    positive rank. False is inconclusive.
    """

    vertices = S.vertices if isinstance(S, StrongSeparator) else frozenset(S)

    if not vertices or not is_strong_separator(G, vertices):
        raise NotAStrongSeparator(
            "vertex set is not a strong separator", {"vertices": sorted(vertices)}
        )

    for s in sorted(vertices):
        reduced, _ = reduce(G, D, s)

        if reduced[s] < 1:
            return False

    if not has_positive_rank(G, D):
        raise CertificateInconsistent(
            "separator certificate holds but the divisor misses a vertex",
            {"divisor": list(D), "separator": sorted(vertices)},
        )

    return True
