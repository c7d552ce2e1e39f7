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

import numpy as np
import pytest

from utils.errors import (
    DimensionMismatch,
    InvalidParameters,
    LoopEdge,
    NonPositiveCount,
    VertexOutOfRange,
)
from utils.families import FamilySpec, family, generate_family
from utils.graph import (
    MultiGraph,
    build_graph,
    cut_lattice_decompose,
    fundamental_cycles,
    laplacian_apply,
    subdivide,
)


class TestBuildGraph:
    """
    Test cases for graph construction.
    """

    def test_triangle(self):
        """
        K3 has circuit rank 1.
        """
        G = build_graph(3, [(0, 1), (1, 2), (0, 2)])

        assert G.n == 3
        assert G.num_edges == 3
        assert G.circuit_rank == 1
        assert G.is_connected

    def test_banana(self, b2):
        """
        Parallel edges are separate records.
        """
        assert b2.num_edges == 2
        assert b2.circuit_rank == 1
        assert b2.multiplicity(0, 1) == 2
        assert not b2.is_simple()

    def test_loop_rejected(self):
        """
        Loops are not allowed.
        """
        with pytest.raises(LoopEdge):
            build_graph(2, [(0, 0)])

    def test_vertex_out_of_range(self):
        """
        Edge ends must be vertices.
        """
        with pytest.raises(VertexOutOfRange):
            build_graph(2, [(0, 2)])

    def test_disconnected_allowed(self):
        """
        Disconnected graphs build but are flagged.
        """
        G = build_graph(4, [(0, 1), (2, 3)])

        assert not G.is_connected
        assert G.num_components == 2
        assert G.components(range(4)) == [frozenset({0, 1}), frozenset({2, 3})]


class TestLaplacian:
    """
    Test cases for incidence and Laplacian.
    """

    def test_all_ones_in_kernel(self, k3):
        """
        Q1 = 0.
        """
        assert laplacian_apply(k3, [1, 1, 1]).tolist() == [0, 0, 0]

    def test_indicator_triangle(self, k3):
        """
        Degree on the diagonal, minus adjacency off it.
        """
        assert laplacian_apply(k3, [1, 0, 0]).tolist() == [2, -1, -1]

    def test_indicator_banana(self, b2):
        """
        Parallel edges count with multiplicity.
        """
        assert laplacian_apply(b2, [1, 0]).tolist() == [2, -2]

    def test_dimension_mismatch(self, k3):
        """
        Vector length must match.
        """
        with pytest.raises(DimensionMismatch):
            laplacian_apply(k3, [1, 0])

    def test_orientation_independent(self, make_random_graph):
        """
        Q = MM^T does not depend on the orientation.
        """
        rng = random.Random(11)

        for _ in range(50):
            G = make_random_graph(rng, rng.randint(2, 8), rng.randint(0, 6))
            flipped = G.reoriented([rng.random() < 0.5 for _ in G.edges])

            assert np.array_equal(G.laplacian, flipped.laplacian)
            assert np.array_equal(G.laplacian, G.incidence @ G.incidence.T)
            assert G.laplacian.sum(axis=1).tolist() == [0] * G.n

    def test_kernel_is_constants(self, make_random_graph):
        """
        Qx = 0 exactly for constant x on connected graphs.
        """
        rng = random.Random(12)

        for _ in range(200):
            G = make_random_graph(rng, rng.randint(2, 8), rng.randint(0, 5))
            x = [rng.randint(-2, 2) for _ in range(G.n)]
            zero = not laplacian_apply(G, x).any()

            assert zero == (len(set(x)) == 1)


class TestCutLattice:
    """
    Test cases for cut lattice decomposition.
    """

    def test_triangle_potential(self, k3):
        """
        f = (1, 1, 2) is M^T (0, 1, 2).
        """
        assert cut_lattice_decompose(k3, [1, 1, 2]).tolist() == [0, 1, 2]

    def test_triangle_not_in_lattice(self, k3):
        """
        A nonzero cycle sum has no potential.
        """
        assert cut_lattice_decompose(k3, [1, 1, 1]) is None

    def test_tree_always_decomposes(self):
        """
        Trees have no cycles.
        """
        rng = random.Random(3)
        tree = family("tree-random", 9, seed=4)

        for _ in range(20):
            f = [rng.randint(-5, 5) for _ in tree.edges]
            x = cut_lattice_decompose(tree, f)

            assert x is not None
            assert (tree.incidence.T @ x).tolist() == f

    def test_recovers_potential(self, make_random_graph):
        """
        f = M^T x gives back x up to a constant.
        """
        rng = random.Random(5)

        for _ in range(200):
            G = make_random_graph(rng, rng.randint(2, 7), rng.randint(0, 5))
            x = np.array([rng.randint(-4, 4) for _ in range(G.n)])
            found = cut_lattice_decompose(G, (G.incidence.T @ x).tolist())

            assert found is not None
            assert (found - x).tolist() == [-x[0]] * G.n

    def test_fundamental_cycles(self, k3, b2):
        """
        One signed cycle per unit of circuit rank, each in the kernel of M.
        """
        for G in (k3, b2, family("grid", 3, 3)):
            cycles = fundamental_cycles(G)

            assert len(cycles) == G.circuit_rank

            for cycle in cycles:
                assert not (G.incidence @ np.array(cycle.entries)).any()

    def test_triangle_cycle_sum(self, k3):
        """
        The triangle cycle sums (1, 1, 1) to +-1.
        """
        (cycle,) = fundamental_cycles(k3)

        assert abs(cycle.dot([1, 1, 1])) == 1


class TestSubdivide:
    """
    Test cases for subdivision.
    """

    def test_banana_midpoint(self, b2):
        """
        One midpoint on the first edge.
        """
        sub = subdivide(b2, [2, 1])

        assert sub.graph.n == 3
        assert sub.graph.num_edges == 3
        assert sub.vertex_map == (0, 1)
        assert sub.edge_vertices[0] == (0, 2, 1)

    def test_identity(self, k3):
        """
        Counts of 1 change nothing.
        """
        assert subdivide(k3, {}).graph == k3

    def test_path(self, k2):
        """
        A single edge in three pieces is a path on four vertices.
        """
        sub = subdivide(k2, [3])

        assert sub.graph.n == 4
        assert sub.graph.edges == ((0, 2), (2, 3), (3, 1))

    def test_nonpositive(self, k3):
        """
        Counts must be positive.
        """
        with pytest.raises(NonPositiveCount):
            subdivide(k3, [1, 0, 1])

    def test_keeps_circuit_rank(self, make_random_graph):
        """
        Subdivision keeps connectivity and g.
        """
        rng = random.Random(8)

        for _ in range(50):
            G = make_random_graph(rng, rng.randint(2, 6), rng.randint(0, 4))
            H = subdivide(G, [rng.randint(1, 3) for _ in G.edges]).graph

            assert H.is_connected
            assert H.circuit_rank == G.circuit_rank


class TestTraversal:
    """
    Test cases for induced connectivity, BFS trees and distances.
    """

    def test_induced_connected(self, p5):
        """
        The ends of a path need the middle.
        """
        assert p5.is_induced_connected([1, 2, 3])
        assert not p5.is_induced_connected([0, 2])
        assert not p5.is_induced_connected([])

    def test_bfs_tree_parallel(self, b2):
        """
        Parallel edges link through the smaller id.
        """
        order, parent = b2.bfs_tree(0)

        assert order == [0, 1]
        assert parent == {1: (0, 0)}

    def test_bfs_tree_spans(self, make_random_graph):
        """
        Every vertex is reached through an edge to an earlier vertex.
        """
        rng = random.Random(5)

        for _ in range(100):
            G = make_random_graph(rng, rng.randint(2, 8), rng.randint(0, 6))
            root = rng.randrange(G.n)
            order, parent = G.bfs_tree(root)

            assert sorted(order) == list(G.vertices)

            for v, (p, edge) in parent.items():
                assert set(G.edges[edge]) == {p, v}
                assert order.index(p) < order.index(v)

    def test_distances(self, p5):
        """
        Hop counts, with -1 for unreachable vertices.
        """
        assert p5.distances(2) == [2, 1, 0, 1, 2]
        assert MultiGraph(3, [(0, 1)]).distances(0) == [0, 1, -1]


class TestFamilies:
    """
    Test cases for family generators.
    """

    def test_grid(self):
        """
        grid(2, 3) has 6 vertices and 7 edges, row-major.
        """
        G = family("grid", 2, 3)

        assert (G.n, G.num_edges) == (6, 7)
        assert G.multiplicity(0, 1) == 1
        assert G.multiplicity(0, 3) == 1
        assert G.labels[4] == "1,1"

    def test_octahedron(self):
        """
        K_{2,2,2} has 12 edges and blocks in order.
        """
        G = generate_family(FamilySpec(kind="complete-multipartite", params=(2, 2, 2)))

        assert (G.n, G.num_edges) == (6, 12)
        assert G.multiplicity(0, 1) == 0
        assert G.multiplicity(2, 3) == 0
        assert G.multiplicity(0, 2) == 1

    def test_hypercube(self):
        """
        Q_3 has 8 vertices and 12 edges in binary order.
        """
        G = family("hypercube", 3)

        assert (G.n, G.num_edges) == (8, 12)
        assert G.labels[5] == "101"
        assert G.multiplicity(0, 4) == 1
        assert G.multiplicity(0, 3) == 0

    def test_banana_and_star(self):
        """
        banana(k) has k parallel edges; star(n) has n leaves.
        """
        assert family("banana", 3).edges == ((0, 1),) * 3
        assert family("star", 3).degree(0) == 3

    def test_random_tree_deterministic(self):
        """
        Same seed, same tree.
        """
        first = family("tree-random", 10, seed=7)

        assert first == family("tree-random", 10, seed=7)
        assert first.num_edges == 9
        assert first.is_connected

    def test_invalid(self):
        """
        Bad parameters are rejected.
        """
        with pytest.raises(InvalidParameters):
            family("complete-multipartite", 3)

        with pytest.raises(InvalidParameters):
            family("grid", 0, 3)

        with pytest.raises(InvalidParameters):
            family("cycle", 2)

    def test_relabeled(self):
        """
        Relabeling moves the edges with the vertices.
        """
        G = MultiGraph(3, [(0, 1), (1, 2)])

        assert G.relabeled([2, 0, 1]).edges == ((2, 0), (0, 1))
