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

import pytest

from utils.bramble import (
    Bramble,
    HittingSet,
    bramble_order,
    hitting_set_from_cut,
    is_bramble,
    make_grid_bramble,
    make_multipartite_bramble,
    minimum_hitting_set,
)
from utils.errors import (
    EmptyMember,
    HypothesisUnmet,
    InvalidParameters,
    NotABramble,
    VertexOutOfRange,
)
from utils.families import family

SINGLETONS = [[0], [1], [2]]


class TestIsBramble:
    """
    Test cases for the touching check.
    """

    def test_triangle_singletons(self, k3):
        """
        Every pair of vertices of K3 is adjacent.
        """
        assert is_bramble(k3, SINGLETONS)

    def test_path_ends(self, p3):
        """
        The two ends of a path do not touch.
        """
        assert not is_bramble(p3, [[0], [2]])

    def test_grid(self):
        """
        Column, row and crosses on the 2 x 3 grid.
        """
        assert is_bramble(family("grid", 2, 3), make_grid_bramble(1, 2))

    def test_duplicates_collapse(self):
        """
        Repeated members count once.
        """
        assert len(Bramble.of([[1, 0], [0, 1], [2]])) == 2

    def test_empty_member(self, k3):
        """
        Members must be nonempty.
        """
        with pytest.raises(EmptyMember):
            is_bramble(k3, [[0], []])

    def test_no_members(self, k3):
        """
        An empty family is rejected.
        """
        with pytest.raises(InvalidParameters):
            is_bramble(k3, [])

    def test_out_of_range(self, k3):
        """
        Member vertices must exist.
        """
        with pytest.raises(VertexOutOfRange):
            is_bramble(k3, [[0], [5]])


class TestOrder:
    """
    Test cases for bramble order.
    """

    def test_triangle(self, k3):
        """
        Singletons force every vertex.
        """
        order, hitting = bramble_order(k3, SINGLETONS)

        assert order == 3
        assert hitting == HittingSet((0, 1, 2))

    def test_not_a_bramble(self, p3):
        """
        Order is only defined for brambles.
        """
        with pytest.raises(NotABramble):
            bramble_order(p3, [[0], [2]])

    @pytest.mark.parametrize(
        "sizes, expected",
        [((1, 1), 2), ((1, 3), 2), ((2, 2, 2), 5), ((2, 3), 3)],
    )
    def test_multipartite(self, sizes, expected):
        """
        n_1 + ... + n_{k-1} + 1 with the largest part last.
        """
        G = family("complete-multipartite", *sizes)
        order, hitting = bramble_order(G, make_multipartite_bramble(*sizes))

        assert order == expected
        assert hitting.hits(make_multipartite_bramble(*sizes))

    @pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (2, 3)])
    def test_grid(self, m, n):
        """
        The grid bramble has order m + 2.
        """
        G = family("grid", m + 1, n + 1)
        bramble = make_grid_bramble(m, n)

        assert is_bramble(G, bramble)
        assert bramble_order(G, bramble)[0] == m + 2

    def test_grid_members(self):
        """
        With one row the two crosses coincide.
        """
        assert len(make_grid_bramble(1, 2)) == 3
        assert len(make_grid_bramble(2, 2)) == 6

    def test_bad_parameters(self):
        """
        Grid brambles need 1 <= m <= n; multipartite ones two parts.
        """
        with pytest.raises(InvalidParameters):
            make_grid_bramble(3, 2)

        with pytest.raises(InvalidParameters):
            make_multipartite_bramble(4)


class TestMinimumHittingSet:
    """
    Test cases for the exact hitting set search.
    """

    def test_chain_of_pairs(self):
        """
        Three overlapping pairs need two vertices.
        """
        assert len(minimum_hitting_set([[0, 1], [1, 2], [2, 3]])) == 2

    def test_three_disjoint_pairs(self):
        """
        Three disjoint pairs plus a spoke around 0 need four vertices.
        """
        members = [[0, 1], [0, 2], [0, 3], [1, 4], [2, 5], [3, 6], [4, 5, 6], [1, 2, 3]]
        best = minimum_hitting_set(members)

        assert len(best) == 4
        assert all(set(best) & set(member) for member in members)

    def test_disjoint(self):
        """
        Disjoint members need one vertex each.
        """
        assert minimum_hitting_set([[0], [1, 2], [3, 4, 5]]) == [0, 1, 3]


class TestCutConstruction:
    """
    Test cases for hitting sets built from a cut.
    """

    def test_triangle(self, k3):
        """
        Cut of size 2 gives a hitting set of size at most 3.
        """
        hitting = hitting_set_from_cut(k3, SINGLETONS, {0})

        assert hitting.size <= 3
        assert hitting.hits(Bramble.of(SINGLETONS))

    def test_grid(self):
        """
        U holds the first cross and avoids the last column.
        """
        G = family("grid", 2, 3)
        bramble = make_grid_bramble(1, 2)
        U = {0, 1}
        hitting = hitting_set_from_cut(G, bramble, U)

        assert hitting.hits(bramble)
        assert hitting.size <= G.cut_size(U) + 1

    def test_hypothesis_unmet(self):
        """
        No member lies inside {0}.
        """
        with pytest.raises(HypothesisUnmet):
            hitting_set_from_cut(family("grid", 2, 3), make_grid_bramble(1, 2), {0})

    def test_not_a_bramble(self, p3):
        """
        The ends of a path are rejected before the cut is used.
        """
        with pytest.raises(NotABramble):
            hitting_set_from_cut(p3, [[0], [2]], {0})
