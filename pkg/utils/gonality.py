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
import time

from dataclasses import dataclass
from typing import Iterator, Optional

from utils.chipfire import base_vertex, has_positive_rank, is_reduced, reduce
from utils.divisor import Divisor, effective_divisors
from utils.errors import CapExceeded, InvalidParameters
from utils.graph import MultiGraph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GonalityStats:
    candidates: int
    per_degree: tuple[int, ...]
    elapsed: float


@dataclass(frozen=True)
class GonalityResult:
    value: int
    witness: Divisor
    stats: GonalityStats


def default_cap(G: MultiGraph) -> int:
    """
    min(|V| - 1, g + 1) on simple graphs. Multigraphs use |V| in place of
    |V| - 1, since 1_V always has positive rank but B2 already needs 2.
    """

    if G.n >= 2 and G.is_simple():
        return max(1, min(G.n - 1, G.circuit_rank + 1))

    return max(1, min(G.n, G.circuit_rank + 1))


def enumerate_reduced_divisors(G: MultiGraph, q: int, k: int) -> Iterator[Divisor]:
    """
    q-reduced effective divisors of degree k with a chip on q, in ascending
    lexicographic order. Every divisor class appears at most once.
    """

    if k < 1:
        raise InvalidParameters("degree must be at least 1", {"k": k})

    for rest in effective_divisors(G.n, k - 1):
        values = list(rest.values)
        values[q] += 1
        candidate = Divisor(tuple(values))

        if is_reduced(G, candidate, q):
            yield candidate


def gonality(
    G: MultiGraph,
    cap: Optional[int] = None,
    q: Optional[int] = None,
) -> GonalityResult:
    """
    Smallest degree of a positive-rank divisor, with a witness.

    Degrees are tried in increasing order. Per degree only q-reduced
    divisors with a chip on q are tested, which covers every positive-rank
    class exactly once.
    """

    G.require_connected()
    q = base_vertex(G, q)
    cap = default_cap(G) if cap is None else cap

    if cap < 1:
        raise InvalidParameters("cap must be at least 1", {"cap": cap})

    started = time.perf_counter()
    candidates = 0
    per_degree: list[int] = []

    for k in range(1, cap + 1):
        tested = 0

        for D in enumerate_reduced_divisors(G, q, k):
            tested += 1

            if has_positive_rank(G, D):
                per_degree.append(tested)
                candidates += tested
                stats = GonalityStats(
                    candidates, tuple(per_degree), time.perf_counter() - started
                )
                log.debug("gonality %d after %d candidates", k, candidates)

                return GonalityResult(k, D, stats)

        per_degree.append(tested)
        candidates += tested
        log.debug("degree %d: %d reduced candidates, none of positive rank", k, tested)

    raise CapExceeded(
        f"no positive-rank divisor of degree at most {cap}",
        {"cap": cap, "candidates": candidates, "per_degree": per_degree},
    )


def gonality_upper_witness(G: MultiGraph, D: Divisor) -> bool:
    return D.is_effective and has_positive_rank(G, D)


def brute_force_positive_rank_classes(
    G: MultiGraph,
    k: int,
    q: Optional[int] = None,
) -> set[Divisor]:
    """
    q-reduced representatives of every positive-rank class of degree k,
    found by testing all effective divisors of that degree.
    """

    q = base_vertex(G, q)
    found = set()

    for D in effective_divisors(G.n, k):
        if has_positive_rank(G, D):
            found.add(reduce(G, D, q)[0])

    return found
