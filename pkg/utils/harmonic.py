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

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence

import networkx as nx

from utils.chipfire import has_positive_rank
from utils.divisor import Divisor, FiringScript
from utils.errors import (
    CertificateInconsistent,
    Degenerate,
    DimensionMismatch,
    InvalidParameters,
    InvalidWitness,
    NonPositiveIndex,
    NotAMorphism,
    NotHarmonic,
    NotHomomorphism,
    TargetDivisorNotPositiveRank,
)
from utils.gonality import gonality
from utils.graph import MultiGraph
from utils.treewidth import treewidth_exact

log = logging.getLogger(__name__)


class Requirement(str, Enum):
    NONE = "none"
    HARMONIC = "harmonic"
    NONDEGENERATE = "nondegenerate"
    HOMOMORPHISM = "homomorphism"


@dataclass(frozen=True)
class EdgeImage:
    """
    Image of a source edge: a target edge, or a target vertex when the
    edge is vertical.
    """

    edge: Optional[int] = None
    vertex: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.edge is None) == (self.vertex is None):
            raise NotAMorphism("an edge image names exactly one target edge or vertex")

    @property
    def is_vertical(self) -> bool:
        return self.vertex is not None


@dataclass(frozen=True)
class Morphism:
    source: MultiGraph
    target: MultiGraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[EdgeImage, ...]

    @classmethod
    def build(
        cls,
        source: MultiGraph,
        target: MultiGraph,
        vertex_map: Sequence[int],
        edge_map: Sequence[EdgeImage | int],
    ) -> "Morphism":
        """
        Plain integers in edge_map name target edges.
        """

        images = tuple(
            image if isinstance(image, EdgeImage) else EdgeImage(edge=int(image))
            for image in edge_map
        )

        return cls(source, target, tuple(int(v) for v in vertex_map), images)


@dataclass(frozen=True)
class HarmonicData:
    multiplicities: tuple[int, ...]
    degree: int

    def m(self, v: int) -> int:
        return self.multiplicities[v]


@dataclass(frozen=True)
class IndexedMorphism:
    """
    Morphism with a positive index per non-vertical edge; vertical edges
    keep index 1.
    """

    base: Morphism
    indices: tuple[int, ...]

    @classmethod
    def build(cls, base: Morphism, indices: Mapping[int, int] | None = None) -> "IndexedMorphism":
        given = dict(indices or {})

        return cls(base, tuple(int(given.get(e, 1)) for e in range(base.source.num_edges)))


@dataclass(frozen=True)
class Expansion:
    graph: MultiGraph
    morphism: Morphism
    edge_copies: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RefinementWitness:
    """
    Where G sits inside a refinement H: an injective vertex map and, per
    edge of G, the path of H edges replacing it from tail to head.
    """

    vertex_map: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GonalityChainReport:
    degree: int
    dgon: int
    tw_expanded: int
    tw_base: int

    @property
    def holds(self) -> bool:
        return self.degree >= self.dgon >= self.tw_expanded >= self.tw_base


def _check_maps(phi: Morphism) -> None:
    source, target = phi.source, phi.target

    if len(phi.vertex_map) != source.n or len(phi.edge_map) != source.num_edges:
        raise DimensionMismatch(
            "maps must cover every source vertex and edge",
            {"vertices": len(phi.vertex_map), "edges": len(phi.edge_map)},
        )

    for v, image in enumerate(phi.vertex_map):
        if not 0 <= image < target.n:
            raise NotAMorphism(f"vertex {v} maps outside the target", {"vertex": v})

    for e, ((u, w), image) in enumerate(zip(source.edges, phi.edge_map)):
        a, b = phi.vertex_map[u], phi.vertex_map[w]

        if image.is_vertical:
            if not (image.vertex == a == b):
                raise NotAMorphism(
                    f"vertical edge {e} must collapse onto the image of both ends",
                    {"edge": e},
                )
            continue

        if not 0 <= image.edge < target.num_edges:
            raise NotAMorphism(f"edge {e} maps outside the target", {"edge": e})

        if set(target.edges[image.edge]) != {a, b} or a == b:
            raise NotAMorphism(
                f"edge {e} does not map onto an edge between its end images",
                {"edge": e, "image": image.edge},
            )


def _harmonic_data(phi: Morphism) -> HarmonicData:
    source, target = phi.source, phi.target
    multiplicities = []

    for v in source.vertices:
        counts = Counter(
            phi.edge_map[e].edge
            for e in source.incident_edges[v]
            if not phi.edge_map[e].is_vertical
        )
        around = target.incident_edges[phi.vertex_map[v]]
        values = {e2: counts.get(e2, 0) for e2 in around}

        if len(set(values.values())) > 1:
            ordered = sorted(values, key=lambda e2: (values[e2], e2))
            first, second = ordered[0], ordered[-1]
            raise NotHarmonic(
                f"vertex {v} has {values[first]} preimages over edge {first} "
                f"but {values[second]} over edge {second}",
                {"vertex": v, "edges": [first, second]},
            )

        multiplicities.append(next(iter(values.values()), 0))

    preimages = Counter(image.edge for image in phi.edge_map if not image.is_vertical)
    sizes = {preimages.get(e2, 0) for e2 in range(target.num_edges)}

    if len(sizes) > 1:
        raise NotHarmonic("target edges have fibres of different sizes", {"sizes": sorted(sizes)})

    degree = sizes.pop() if sizes else 0

    for w in target.vertices:
        fibre = sum(multiplicities[v] for v in source.vertices if phi.vertex_map[v] == w)

        if fibre != degree:
            raise CertificateInconsistent(
                "fibre multiplicities do not add up to the degree",
                {"vertex": w, "sum": fibre, "degree": degree},
            )

    return HarmonicData(tuple(multiplicities), degree)


def check_morphism(
    phi: Morphism,
    require: Requirement | str = Requirement.HARMONIC,
) -> Optional[HarmonicData]:
    """
    Verify phi at the requested level. With Requirement.NONE only the map
    conditions are enforced and harmonic data is returned when available.
    """

    require = Requirement(require)
    phi.source.require_connected()
    phi.target.require_connected()
    _check_maps(phi)

    if require is Requirement.NONE:
        try:
            return _harmonic_data(phi)
        except NotHarmonic:
            return None

    data = _harmonic_data(phi)

    if require is Requirement.NONDEGENERATE:
        for v, m in enumerate(data.multiplicities):
            if m == 0:
                raise Degenerate(f"vertex {v} has multiplicity 0", {"vertex": v})

    if require is Requirement.HOMOMORPHISM:
        for e, image in enumerate(phi.edge_map):
            if image.is_vertical:
                raise NotHomomorphism(f"edge {e} is vertical", {"edge": e})

    return data


def pullback(phi: Morphism, D: Divisor, data: Optional[HarmonicData] = None) -> Divisor:
    data = data or check_morphism(phi, Requirement.HARMONIC)

    if len(D) != phi.target.n:
        raise DimensionMismatch("divisor does not live on the target")

    return Divisor(
        tuple(data.m(v) * D[phi.vertex_map[v]] for v in phi.source.vertices)
    )


def pullback_script(
    phi: Morphism,
    y: FiringScript,
    data: Optional[HarmonicData] = None,
) -> FiringScript:
    """
    x(u) = y(phi(u)); pulls back Q'y to Qx.
    """

    if data is None:
        check_morphism(phi, Requirement.HARMONIC)

    if len(y) != phi.target.n:
        raise DimensionMismatch("script does not live on the target")

    return FiringScript(tuple(y[phi.vertex_map[u]] for u in phi.source.vertices))


def expand_indexed(psi: IndexedMorphism) -> Expansion:
    """
    Replace every non-vertical edge e by r_e parallel copies mapped to the
    same target edge.
    """

    base = psi.base

    if len(psi.indices) != base.source.num_edges:
        raise DimensionMismatch("one index per source edge is required")

    edges: list[tuple[int, int]] = []
    images: list[EdgeImage] = []
    copies = []

    for e, (edge, image, index) in enumerate(zip(base.source.edges, base.edge_map, psi.indices)):
        count = 1 if image.is_vertical else index

        if count < 1:
            raise NonPositiveIndex(f"edge {e} has index {index}", {"edge": e, "index": index})

        copies.append(tuple(range(len(edges), len(edges) + count)))
        edges.extend([edge] * count)
        images.extend([image] * count)

    graph = MultiGraph(base.source.n, edges, base.source.labels)
    morphism = Morphism(graph, base.target, base.vertex_map, tuple(images))

    return Expansion(graph, morphism, tuple(copies))


def gonality_bound_certificate(phi: Morphism, D: Divisor) -> tuple[Divisor, int]:
    """
    Pull a positive-rank divisor back along a non-degenerate harmonic
    morphism; the result has positive rank and degree deg(D) deg(phi).
    """

    data = check_morphism(phi, Requirement.NONDEGENERATE)

    if not has_positive_rank(phi.target, D):
        raise TargetDivisorNotPositiveRank(
            "target divisor does not have positive rank", {"divisor": list(D)}
        )

    pulled = pullback(phi, D, data)
    bound = D.degree * data.degree

    if pulled.degree != bound or not has_positive_rank(phi.source, pulled):
        raise CertificateInconsistent(
            "pullback lost positive rank", {"divisor": list(pulled)}
        )

    return pulled, bound


def check_refinement(G: MultiGraph, H: MultiGraph, witness: RefinementWitness) -> bool:
    """
    True iff H is G with its edges subdivided along the witness paths plus
    trees hanging off single vertices.
    """

    vertex_map = witness.vertex_map

    if len(vertex_map) != G.n or len(set(vertex_map)) != G.n:
        raise InvalidWitness("vertex map must be injective on V(G)")
    if any(not 0 <= v < H.n for v in vertex_map):
        raise InvalidWitness("vertex map leaves V(H)")
    if len(witness.edge_paths) != G.num_edges:
        raise InvalidWitness("one path per edge of G is required")

    images = set(vertex_map)
    used_edges: set[int] = set()
    interior: set[int] = set()

    for e, ((tail, head), path) in enumerate(zip(G.edges, witness.edge_paths)):
        if not path:
            raise InvalidWitness(f"edge {e} has an empty path", {"edge": e})

        current = vertex_map[tail]
        walk = [current]

        for step in path:
            if not 0 <= step < H.num_edges or current not in H.edges[step]:
                raise InvalidWitness(
                    f"path of edge {e} breaks at H edge {step}", {"edge": e, "step": step}
                )

            current = H.other_end(step, current)
            walk.append(current)

        if current != vertex_map[head]:
            raise InvalidWitness(f"path of edge {e} ends at the wrong vertex", {"edge": e})
        if len(set(walk)) != len(walk):
            raise InvalidWitness(f"path of edge {e} is not simple", {"edge": e})

        inner = set(walk[1:-1])

        if used_edges.intersection(path) or inner & images or inner & interior:
            return False

        used_edges.update(path)
        interior |= inner

    core = images | interior
    rest = nx.MultiGraph()
    rest.add_nodes_from(H.vertices)
    rest.add_edges_from(
        (tail, head) for index, (tail, head) in enumerate(H.edges) if index not in used_edges
    )

    for component in nx.connected_components(rest):
        if len(component) == 1 and next(iter(component)) in core:
            continue

        edges = rest.subgraph(component).number_of_edges()

        if edges != len(component) - 1 or len(component & core) != 1:
            return False

    return True


def _tree_target(target: MultiGraph) -> None:
    if not target.is_connected or target.num_edges != target.n - 1:
        raise InvalidParameters("the target of a gonality certificate must be a tree")


def _chain_report(expansion: Expansion, base: MultiGraph, degree: int) -> GonalityChainReport:
    report = GonalityChainReport(
        degree=degree,
        dgon=gonality(expansion.graph).value,
        tw_expanded=treewidth_exact(expansion.graph)[0],
        tw_base=treewidth_exact(base)[0],
    )

    if not report.holds:
        raise CertificateInconsistent(
            "degree, gonality and treewidth are out of order",
            {
                "degree": report.degree,
                "dgon": report.dgon,
                "tw_expanded": report.tw_expanded,
                "tw_base": report.tw_base,
            },
        )

    return report


def check_stable_gonality_certificate(
    G: MultiGraph,
    H: MultiGraph,
    witness: RefinementWitness,
    psi: IndexedMorphism,
) -> GonalityChainReport:
    """
    Verify a refinement H of G with an indexed harmonic homomorphism from H
    to a tree, and check deg >= dgon(H') >= tw(H') >= tw(G) for the
    expanded graph H'.
    """

    if psi.base.source != H:
        raise InvalidParameters("the indexed morphism must start at the refinement")
    if not check_refinement(G, H, witness):
        raise InvalidWitness("H is not a refinement of G along the witness")

    _tree_target(psi.base.target)
    expansion = expand_indexed(psi)
    data = check_morphism(expansion.morphism, Requirement.HOMOMORPHISM)

    return _chain_report(expansion, G, data.degree)


def check_indexed_tree_certificate(G: MultiGraph, psi: IndexedMorphism) -> GonalityChainReport:
    """
    Verify a non-degenerate indexed harmonic morphism from G to a tree and
    check deg >= dgon(H') >= tw(H') >= tw(G).
    """

    if psi.base.source != G:
        raise InvalidParameters("the indexed morphism must start at G")

    _tree_target(psi.base.target)
    expansion = expand_indexed(psi)
    data = check_morphism(expansion.morphism, Requirement.NONDEGENERATE)

    return _chain_report(expansion, G, data.degree)
