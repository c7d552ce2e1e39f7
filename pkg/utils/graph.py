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
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

import networkx as nx
import numpy as np

from utils.errors import (
    DimensionMismatch,
    Disconnected,
    InvalidParameters,
    LoopEdge,
    NonPositiveCount,
    VertexOutOfRange,
)

log = logging.getLogger(__name__)


class MultiGraph:
    """
    Finite loopless multigraph with a fixed orientation.

    Parallel edges are separate edge records, so every edge has an id
    (its position in `edges`). Instances are never mutated after
    construction; derived data is computed lazily and cached.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        if n < 0:
            raise InvalidParameters("vertex count must be nonnegative", {"n": n})

        checked = []

        for index, edge in enumerate(edges):
            tail, head = int(edge[0]), int(edge[1])

            if not (0 <= tail < n and 0 <= head < n):
                raise VertexOutOfRange(
                    f"edge {index} ({tail}, {head}) leaves the vertex range 0..{n - 1}",
                    {"edge": index, "tail": tail, "head": head},
                )
            if tail == head:
                raise LoopEdge(
                    f"edge {index} is a loop at vertex {tail}",
                    {"edge": index, "vertex": tail},
                )

            checked.append((tail, head))

        if labels is not None and len(labels) != n:
            raise DimensionMismatch(
                "one label per vertex is required", {"n": n, "labels": len(labels)}
            )

        self._n = n
        self._edges: tuple[tuple[int, int], ...] = tuple(checked)
        self._labels: Optional[tuple[str, ...]] = (
            tuple(str(label) for label in labels) if labels is not None else None
        )

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._n}, m={len(self._edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented

        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def labels(self) -> Optional[tuple[str, ...]]:
        return self._labels

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def circuit_rank(self) -> int:
        """
        g = |E| - |V| + 1 for connected graphs; one more per extra component
        is subtracted so the value stays the cycle-space dimension.
        """

        return self.num_edges - self._n + self.num_components

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """
        Per vertex, neighbour -> number of parallel edges.
        """

        adjacency: list[dict[int, int]] = [{} for _ in range(self._n)]

        for tail, head in self._edges:
            adjacency[tail][head] = adjacency[tail].get(head, 0) + 1
            adjacency[head][tail] = adjacency[head].get(tail, 0) + 1

        return tuple(adjacency)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        incident: list[list[int]] = [[] for _ in range(self._n)]

        for index, (tail, head) in enumerate(self._edges):
            incident[tail].append(index)
            incident[head].append(index)

        return tuple(tuple(edges) for edges in incident)

    def degree(self, v: int) -> int:
        return len(self.incident_edges[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u].get(v, 0)

    def other_end(self, edge: int, v: int) -> int:
        tail, head = self._edges[edge]

        return head if v == tail else tail

    def is_simple(self) -> bool:
        return all(count == 1 for row in self.adjacency for count in row.values())

    @cached_property
    def incidence(self) -> np.ndarray:
        """
        Signed incidence matrix M: +1 at the head, -1 at the tail.
        """

        matrix = np.zeros((self._n, self.num_edges), dtype=np.int64)

        for index, (tail, head) in enumerate(self._edges):
            matrix[head, index] = 1
            matrix[tail, index] = -1

        matrix.setflags(write=False)
        return matrix

    @cached_property
    def laplacian(self) -> np.ndarray:
        laplacian = self.incidence @ self.incidence.T
        laplacian.setflags(write=False)

        return laplacian

    def cut_edges(self, vertices: Iterable[int]) -> list[int]:
        """
        Edge ids of E(U, V \\ U).
        """

        inside = set(vertices)

        return [
            index
            for index, (tail, head) in enumerate(self._edges)
            if (tail in inside) != (head in inside)
        ]

    def cut_size(self, vertices: Iterable[int]) -> int:
        return len(self.cut_edges(vertices))

    def out_degree(self, v: int, inside: set[int]) -> int:
        """
        |E({v}, V \\ U)| for v in U.
        """

        return sum(
            count for u, count in self.adjacency[v].items() if u not in inside
        )

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self._n))

        for index, (tail, head) in enumerate(self._edges):
            graph.add_edge(tail, head, key=index)

        return graph

    @cached_property
    def num_components(self) -> int:
        if self._n == 0:
            return 0

        return nx.number_connected_components(self.to_networkx())

    @property
    def is_connected(self) -> bool:
        return self.num_components == 1

    def require_connected(self) -> None:
        if not self.is_connected:
            raise Disconnected(
                "divisor operations need a connected graph",
                {"components": self.num_components},
            )

    def components(self, vertices: Iterable[int]) -> list[frozenset[int]]:
        """
        Vertex sets of the components of G[U], ordered by smallest vertex.
        """

        subgraph = self.to_networkx().subgraph(set(vertices))
        found = [frozenset(c) for c in nx.connected_components(subgraph)]

        return sorted(found, key=min)

    def is_induced_connected(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)

        if not chosen:
            return False

        return nx.is_connected(self.to_networkx().subgraph(chosen))

    def bfs_tree(self, root: int) -> tuple[list[int], dict[int, tuple[int, int]]]:
        """
        BFS order from root and parent links (parent vertex, edge id) for
        every reached vertex except the root. Parallel edges link through
        their smallest id.
        """

        graph = self.to_networkx()
        order = [root]
        parent: dict[int, tuple[int, int]] = {}

        for v, u in nx.bfs_edges(graph, root):
            parent[u] = (v, min(graph[v][u]))
            order.append(u)

        return order, parent

    def distances(self, root: int) -> list[int]:
        """
        Hop distance from root; -1 for unreachable vertices.
        """

        dist = [-1] * self._n

        for v, d in nx.single_source_shortest_path_length(self.to_networkx(), root).items():
            dist[v] = d

        return dist

    def simple(self) -> "MultiGraph":
        """
        Underlying simple graph; the first copy of each parallel class keeps
        its position and orientation.
        """

        seen: set[frozenset[int]] = set()
        edges = []

        for tail, head in self._edges:
            key = frozenset((tail, head))

            if key not in seen:
                seen.add(key)
                edges.append((tail, head))

        return MultiGraph(self._n, edges, self._labels)

    def reoriented(self, flips: Sequence[bool]) -> "MultiGraph":
        if len(flips) != self.num_edges:
            raise DimensionMismatch(
                "one flip flag per edge is required",
                {"edges": self.num_edges, "flips": len(flips)},
            )

        edges = [
            (head, tail) if flip else (tail, head)
            for (tail, head), flip in zip(self._edges, flips)
        ]

        return MultiGraph(self._n, edges, self._labels)

    def relabeled(self, permutation: Sequence[int]) -> "MultiGraph":
        """
        Vertex v of this graph becomes vertex permutation[v].
        """

        if sorted(permutation) != list(range(self._n)):
            raise InvalidParameters("not a permutation of the vertices")

        edges = [(permutation[tail], permutation[head]) for tail, head in self._edges]
        labels = None

        if self._labels is not None:
            moved = [""] * self._n

            for v, label in enumerate(self._labels):
                moved[permutation[v]] = label

            labels = moved

        return MultiGraph(self._n, edges, labels)


@dataclass(frozen=True)
class CycleVector:
    """
    Signed incidence vector of a closed walk using each edge at most once.
    """

    entries: tuple[int, ...]

    def dot(self, values: Sequence) -> object:
        return sum(
            value * sign for value, sign in zip(values, self.entries) if sign
        )


class Subdivision(NamedTuple):
    graph: MultiGraph
    vertex_map: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]
    edge_vertices: tuple[tuple[int, ...], ...]


def build_graph(
    n: int,
    edge_list: Iterable[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> MultiGraph:
    """
    Validate and build a multigraph. Disconnected graphs are allowed; the
    connectivity flag is available as `is_connected`.
    """

    graph = MultiGraph(n, edge_list, labels)

    if n and not graph.is_connected:
        log.info("built a disconnected graph with %d components", graph.num_components)

    return graph


def _vector(values: Sequence[int], length: int, name: str) -> np.ndarray:
    vector = np.asarray(values, dtype=np.int64)

    if vector.shape != (length,):
        raise DimensionMismatch(
            f"{name} must have length {length}",
            {"expected": length, "got": int(vector.size)},
        )

    return vector


def laplacian_apply(G: MultiGraph, x: Sequence[int]) -> np.ndarray:
    """
    Return Qx.
    """

    return G.laplacian @ _vector(x, G.n, "vertex vector")


def cut_lattice_decompose(G: MultiGraph, f: Sequence[int]) -> Optional[np.ndarray]:
    """
    Return x with f = M^T x, or None when f is not in the cut lattice.

    Potentials are accumulated along BFS trees (one per component) so
    x(v) is the signed sum of f along the tree path from the root; each
    root, the smallest vertex of its component, gets x(root) = 0.
    """

    values = _vector(f, G.num_edges, "edge vector")
    x = np.zeros(G.n, dtype=np.int64)
    placed = [False] * G.n

    for root in G.vertices:
        if placed[root]:
            continue

        order, parent = G.bfs_tree(root)

        for v in order:
            placed[v] = True

            if v == root:
                continue

            p, edge = parent[v]
            tail, _ = G.edges[edge]
            x[v] = x[p] + values[edge] if tail == p else x[p] - values[edge]

    if G.num_edges and not np.array_equal(G.incidence.T @ x, values):
        return None

    return x


def fundamental_cycles(G: MultiGraph) -> list[CycleVector]:
    """
    Signed cycle vectors of the fundamental cycles of BFS spanning forests.
    Each non-tree edge is traversed forwards and closed through the tree.
    """

    parent: dict[int, tuple[int, int]] = {}
    depth = [0] * G.n
    tree_edges: set[int] = set()
    placed = [False] * G.n

    for root in G.vertices:
        if placed[root]:
            continue

        order, links = G.bfs_tree(root)

        for v in order:
            placed[v] = True

            if v in links:
                p, edge = links[v]
                parent[v] = (p, edge)
                depth[v] = depth[p] + 1
                tree_edges.add(edge)

    def tree_path(a: int, b: int) -> dict[int, int]:
        # Signed edges of the tree walk a -> b.
        up_a: list[tuple[int, int, int]] = []
        up_b: list[tuple[int, int, int]] = []

        while a != b:
            if depth[a] >= depth[b]:
                p, edge = parent[a]
                up_a.append((a, p, edge))
                a = p
            else:
                p, edge = parent[b]
                up_b.append((p, b, edge))
                b = p

        signs: dict[int, int] = {}

        for start, _, edge in up_a:
            signs[edge] = 1 if G.edges[edge][0] == start else -1

        for start, _, edge in reversed(up_b):
            signs[edge] = 1 if G.edges[edge][0] == start else -1

        return signs

    cycles = []

    for index, (tail, head) in enumerate(G.edges):
        if index in tree_edges:
            continue

        entries = [0] * G.num_edges
        entries[index] = 1

        for edge, sign in tree_path(head, tail).items():
            entries[edge] = sign

        cycles.append(CycleVector(tuple(entries)))

    return cycles


def subdivide(G: MultiGraph, counts: Mapping[int, int] | Sequence[int]) -> Subdivision:
    """
    Replace edge e by a path of counts[e] edges, keeping its orientation.

    New vertices are appended in edge order, so the original vertices keep
    their ids. Edges missing from a mapping keep count 1.
    """

    if isinstance(counts, Mapping):
        per_edge = [int(counts.get(index, 1)) for index in range(G.num_edges)]
    else:
        per_edge = [int(c) for c in counts]

        if len(per_edge) != G.num_edges:
            raise DimensionMismatch(
                "one count per edge is required",
                {"edges": G.num_edges, "counts": len(per_edge)},
            )

    for index, count in enumerate(per_edge):
        if count < 1:
            raise NonPositiveCount(
                f"edge {index} has count {count}", {"edge": index, "count": count}
            )

    next_vertex = G.n
    edges: list[tuple[int, int]] = []
    edge_paths = []
    edge_vertices = []
    labels = list(G.labels) if G.labels is not None else None

    for index, ((tail, head), count) in enumerate(zip(G.edges, per_edge)):
        walk = [tail]

        for step in range(1, count):
            walk.append(next_vertex)

            if labels is not None:
                labels.append(f"{index}.{step}")

            next_vertex += 1

        walk.append(head)
        path = []

        for a, b in zip(walk, walk[1:]):
            path.append(len(edges))
            edges.append((a, b))

        edge_paths.append(tuple(path))
        edge_vertices.append(tuple(walk))

    graph = MultiGraph(next_vertex, edges, labels)

    return Subdivision(
        graph,
        tuple(G.vertices),
        tuple(edge_paths),
        tuple(edge_vertices),
    )


def from_networkx(graph: nx.Graph) -> MultiGraph:
    """
    Convert with nodes numbered in sorted order and edges sorted by their
    (smaller id, larger id) pair; the smaller id becomes the tail.
    """

    nodes = sorted(graph.nodes())
    ids = {node: index for index, node in enumerate(nodes)}
    pairs = sorted(
        (min(ids[u], ids[v]), max(ids[u], ids[v])) for u, v in graph.edges()
    )

    return MultiGraph(len(nodes), pairs)
