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

from itertools import permutations

import pytest

from utils.bramble import make_grid_bramble
from utils.errors import InvalidParameters, NotABramble, TooLarge
from utils.families import family
from utils.graph import MultiGraph, subdivide
from utils.treewidth import elimination_width, treewidth_exact


def brute_force_treewidth(G: MultiGraph) -> int:
    simple = G.simple()

    return min(elimination_width(simple, order)[0] for order in permutations(G.vertices))


class TestEliminationWidth:
    """
    Test cases for elimination orders.
    """

    def test_cycle(self, c4):
        """
        Eliminating a vertex of C4 adds one chord.
        """
        width, fill = elimination_width(c4, [0, 1, 2, 3])

        assert width == 2
        assert fill == [(1, 3)]

    def test_path(self, p5):
        """
        Leaves first gives width 1 with no fill.
        """
        assert elimination_width(p5, [0, 1, 2, 3, 4]) == (1, [])

    def test_middle_first(self, p5):
        """
        A bad order on a path costs width 2.
        """
        width, _ = elimination_width(p5, [2, 0, 1, 3, 4])

        assert width == 2

    def test_not_a_permutation(self, k3):
        """
        Every vertex must appear once.
        """
        with pytest.raises(InvalidParameters):
            elimination_width(k3, [0, 1])


class TestTreewidth:
    """
    Test cases for exact treewidth.
    """

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_complete(self, n):
        """
        tw(K_n) = n - 1.
        """
        width, order = treewidth_exact(family("complete", n))

        assert width == n - 1
        assert order.width == width
        assert sorted(order.order) == list(range(n))

    @pytest.mark.parametrize("seed", range(5))
    def test_trees(self, seed):
        """
        Nontrivial trees have treewidth 1.
        """
        assert treewidth_exact(family("tree-random", 9, seed=seed))[0] == 1

    @pytest.mark.parametrize(
        "rows, cols, expected",
        [(2, 2, 2), (2, 3, 2), (3, 3, 3), (3, 4, 3)],
    )
    def test_grid(self, rows, cols, expected):
        """
        The (m+1) x (n+1) grid has treewidth m + 1.
        """
        assert treewidth_exact(family("grid", rows, cols))[0] == expected

    def test_banana(self, b2):
        """
        Parallel edges do not count; subdividing one of them does.
        """
        assert treewidth_exact(b2)[0] == 1
        assert treewidth_exact(subdivide(b2, [2, 1]).graph)[0] == 2

    def test_multipartite(self):
        """
        |V| minus the largest part.
        """
        assert treewidth_exact(family("complete-multipartite", 2, 2, 2))[0] == 4
        assert treewidth_exact(family("complete-bipartite", 2, 4))[0] == 2

    def test_hypercube(self):
        """
        tw(Q_3) = 3.
        """
        assert treewidth_exact(family("hypercube", 3))[0] == 3

    def test_order_is_optimal(self):
        """
        The returned order attains the width.
        """
        G = family("grid", 3, 3)
        width, order = treewidth_exact(G)

        assert elimination_width(G, order.order)[0] == width

    def test_bramble_hint(self):
        """
        Bramble lower bounds agree with the search.
        """
        G = family("grid", 3, 4)

        assert treewidth_exact(G, [make_grid_bramble(2, 3)])[0] == 3

    def test_bad_hint(self, p3):
        """
        Hints must be brambles.
        """
        with pytest.raises(NotABramble):
            treewidth_exact(p3, [[[0], [2]]])

    def test_too_large(self):
        """
        Exact search is bounded by the configured vertex limit.
        """
        with pytest.raises(TooLarge):
            treewidth_exact(family("path", 15))

    def test_matches_brute_force(self, make_random_graph):
        """
        Equal to the minimum width over all elimination orders.
        """
        rng = random.Random(31)

        for _ in range(25):
            G = make_random_graph(rng, rng.randint(2, 6), rng.randint(0, 8))

            assert treewidth_exact(G)[0] == brute_force_treewidth(G)

    def test_simple_graph(self, make_random_graph):
        """
        tw(G) = tw(simple(G)).
        """
        rng = random.Random(32)

        for _ in range(25):
            G = make_random_graph(rng, rng.randint(2, 8), rng.randint(0, 10))

            assert treewidth_exact(G)[0] == treewidth_exact(G.simple())[0]
