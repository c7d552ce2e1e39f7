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
Checks of dgon(G) >= tw(G) over graph suites, and the constructive step
that turns a positive-rank divisor into a small bramble hitting set.
"""

import logging

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Mapping, Optional, Sequence

from pydantic import BaseModel

from utils.bramble import Bramble, HittingSet, hitting_set_from_cut, require_bramble
from utils.chipfire import (
    chain_decompose,
    effective_class,
    has_positive_rank,
    level_divisors,
    reduce,
)
from utils.divisor import Divisor
from utils.errors import CertificateInconsistent, ChipfireError, HypothesisUnmet
from utils.gonality import gonality
from utils.graph import MultiGraph
from utils.settings import get_settings
from utils.treewidth import treewidth_exact

log = logging.getLogger(__name__)


class TheoremRow(BaseModel):
    id: str
    n: int
    m: int
    dgon: Optional[int] = None
    tw: Optional[int] = None
    gap: Optional[int] = None
    error: Optional[str] = None


class TheoremReport(BaseModel):
    rows: list[TheoremRow]
    violations: list[str]
    histogram: dict[int, int]
    errors: int

    @property
    def holds(self) -> bool:
        return not self.violations and not self.errors

    def to_text(self) -> str:
        lines = ["id, n, m, dgon, tw, gap"]

        for row in self.rows:
            if row.error is not None:
                lines.append(f"{row.id}, {row.n}, {row.m}, error: {row.error}")
            else:
                lines.append(f"{row.id}, {row.n}, {row.m}, {row.dgon}, {row.tw}, {row.gap}")

        lines.append("")
        lines.append(f"graphs: {len(self.rows)}")
        lines.append(f"violations: {len(self.violations)}")
        lines.append(f"errors: {self.errors}")

        for gap, count in sorted(self.histogram.items()):
            lines.append(f"gap {gap}: {count}")

        return "\n".join(lines)


def _check_item(item: tuple[str, MultiGraph, tuple[Bramble, ...]]) -> TheoremRow:
    name, G, hints = item

    try:
        dgon = gonality(G).value
        tw, _ = treewidth_exact(G, list(hints))
    except ChipfireError as exc:
        log.warning("%s: %s", name, exc.message)
        return TheoremRow(id=name, n=G.n, m=G.num_edges, error=exc.code)

    return TheoremRow(id=name, n=G.n, m=G.num_edges, dgon=dgon, tw=tw, gap=dgon - tw)


def verify_main_theorem(
    suite: Sequence[tuple[str, MultiGraph]],
    workers: Optional[int] = None,
    hints: Optional[Mapping[str, Sequence[Bramble]]] = None,
) -> TheoremReport:
    """
    Compute dgon and tw for every graph; rows keep the suite order.
    """

    workers = workers or get_settings().WORKERS
    items = [(name, G, tuple((hints or {}).get(name, ()))) for name, G in suite]

    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_check_item, items, chunksize=8))
    else:
        rows = [_check_item(item) for item in items]

    violations = [row.id for row in rows if row.gap is not None and row.gap < 0]
    histogram = Counter(row.gap for row in rows if row.gap is not None)

    for name in violations:
        log.error("dgon < tw on %s", name)

    return TheoremReport(
        rows=rows,
        violations=violations,
        histogram=dict(sorted(histogram.items())),
        errors=sum(1 for row in rows if row.error is not None),
    )


def hitting_set_from_divisor(
    G: MultiGraph,
    D: Divisor,
    bramble: Bramble,
) -> HittingSet:
    """
    Hitting set of size at most deg(D) + 1 for any bramble, given an
    effective divisor of positive rank.

    Among the effective divisors equivalent to D the one whose support hits
    the most members is taken. If some member B is still missed, the chain
    of set-firings towards the min(B)-reduced form must drop a hit member at
    some step U_i, and U_i separates two members.
    """

    bramble = require_bramble(G, bramble)

    if not D.is_effective or not has_positive_rank(G, D):
        raise HypothesisUnmet("need an effective divisor of positive rank", {"divisor": list(D)})

    def hit(E: Divisor) -> set[int]:
        support = E.support
        return {i for i, member in enumerate(bramble.members) if support.intersection(member)}

    start = max(effective_class(G, D), key=lambda E: len(hit(E)))
    hit_at_start = hit(start)

    if len(hit_at_start) == len(bramble):
        return HittingSet.of(start.support)

    missed = next(i for i in range(len(bramble)) if i not in hit_at_start)
    v = bramble.members[missed][0]
    target, _ = reduce(G, start, v)
    chain = chain_decompose(G, start, target)

    for chosen, step in zip(chain.sets, level_divisors(G, start, chain)):
        if hit_at_start - hit(step):
            hitting = hitting_set_from_cut(G, bramble, chosen)

            if hitting.size > D.degree + 1:
                raise CertificateInconsistent(
                    "hitting set exceeds deg(D) + 1", {"size": hitting.size}
                )

            return hitting

    raise CertificateInconsistent("no chain step dropped a member")
