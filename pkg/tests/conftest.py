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

import random
import sys
from pathlib import Path

import pytest

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.graph import MultiGraph  # noqa: E402


@pytest.fixture
def k3() -> MultiGraph:
    """
    Triangle a=0, b=1, c=2 oriented a->b, b->c, a->c.
    """
    return MultiGraph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> MultiGraph:
    return MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def p3() -> MultiGraph:
    """
    Path a-b-c.
    """
    return MultiGraph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p5() -> MultiGraph:
    return MultiGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def b2() -> MultiGraph:
    """
    Banana graph: u=0, v=1 and two parallel edges.
    """
    return MultiGraph(2, [(0, 1), (0, 1)])


@pytest.fixture
def k2() -> MultiGraph:
    return MultiGraph(2, [(0, 1)])


@pytest.fixture
def c4() -> MultiGraph:
    """
    4-cycle 0-1-2-3-0.
    """
    return MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def random_connected_graph(
    rng: random.Random,
    n: int,
    extra: int,
    allow_parallel: bool = True,
) -> MultiGraph:
    """
    Random spanning tree plus `extra` random edges, randomly oriented.
    """
    edges = []

    for v in range(1, n):
        edges.append((rng.randrange(v), v))

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]

    for _ in range(extra):
        if not pairs:
            break

        u, v = rng.choice(pairs)

        if not allow_parallel and (u, v) in edges:
            continue

        edges.append((u, v))

    edges = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in edges]
    rng.shuffle(edges)

    return MultiGraph(n, edges)


@pytest.fixture
def make_random_graph():
    return random_connected_graph
