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

from fractions import Fraction

import pytest

from utils.chipfire import equivalent, has_positive_rank
from utils.divisor import Divisor
from utils.errors import (
    Discontinuous,
    DuplicatePoint,
    FormatError,
    InvalidParameters,
    IrrationalLength,
    NonIntegerLength,
    OffsetOutOfRange,
    SlopeNotIntegral,
    WitnessInvalid,
)
from utils.graph import MultiGraph
from utils.metric import (
    MetricGraph,
    PLFunction,
    Point,
    PointDivisor,
    Witness,
    as_fraction,
    check_cycle_system,
    find_equivalence_function,
    integerize,
    linear_function,
    slope_vector,
    subdivide_at,
    to_div,
    transfer_witness,
    unit_subdivision,
)

HALF = Fraction(1, 2)


def vertex_divisor(*terms: tuple[int, int]) -> PointDivisor:
    return PointDivisor.of((Point.at(v), c) for v, c in terms)


class TestFractions:
    """
    Test cases for exact lengths.
    """

    def test_parse(self):
        """
        Integers, fractions and p/q strings.
        """
        assert as_fraction(3) == 3
        assert as_fraction("2/6") == Fraction(1, 3)
        assert as_fraction(HALF) is HALF

    def test_float_rejected(self):
        """
        Floats are not exact.
        """
        with pytest.raises(IrrationalLength):
            as_fraction(0.5)

    def test_garbage(self):
        """
        Unparseable strings.
        """
        with pytest.raises(FormatError):
            as_fraction("half")

    def test_nonpositive_length(self, k2):
        """
        Lengths must be positive.
        """
        with pytest.raises(InvalidParameters):
            MetricGraph(k2, (0,))


class TestToDiv:
    """
    Test cases for principal divisors.
    """

    def test_unit_segment(self, k2):
        """
        f rising from 0 to 1 gives u - v.
        """
        gamma = MetricGraph(k2, (1,))
        f = linear_function(gamma, [0, 1])

        assert to_div(gamma, f) == vertex_divisor((0, 1), (1, -1))

    def test_constant(self, k3):
        """
        Constants have no divisor.
        """
        gamma = MetricGraph(k3, (1, 1, 1))

        assert to_div(gamma, linear_function(gamma, [5, 5, 5])) == PointDivisor(())

    def test_banana_tent(self, b2):
        """
        Slopes +2 then -2 on one edge: 2u - 4 mid + 2v.
        """
        gamma = MetricGraph(b2, (1, 1))
        f = PLFunction.of([[(0, 0), ("1/2", 1), (1, 0)], [(0, 0), (1, 0)]])
        divisor = to_div(gamma, f)

        assert divisor == PointDivisor.of(
            [(Point.at(0), 2), (Point.on(0, HALF), -4), (Point.at(1), 2)]
        )
        assert divisor.degree == 0

    def test_slope_not_integral(self, k2):
        """
        Slope 1/2 is rejected.
        """
        gamma = MetricGraph(k2, (2,))

        with pytest.raises(SlopeNotIntegral):
            to_div(gamma, linear_function(gamma, [0, 1]))

    def test_discontinuous(self, b2):
        """
        The two edges disagree at u.
        """
        gamma = MetricGraph(b2, (1, 1))
        f = PLFunction.of([[(0, 0), (1, 1)], [(0, 1), (1, 1)]])

        with pytest.raises(Discontinuous):
            to_div(gamma, f)

    def test_breakpoints_must_span(self, k2):
        """
        Breakpoints start at 0 and end at the length.
        """
        gamma = MetricGraph(k2, (1,))

        with pytest.raises(OffsetOutOfRange):
            to_div(gamma, PLFunction.of([[(0, 0), (HALF, 1)]]))

    def test_degree_zero(self, make_random_graph):
        """
        Principal divisors have degree 0 and match Qx for f = -x.
        """
        rng = random.Random(61)

        for _ in range(100):
            G = make_random_graph(rng, rng.randint(2, 6), rng.randint(0, 4))
            gamma = MetricGraph(G, (1,) * G.num_edges)
            x = [rng.randint(-3, 3) for _ in G.vertices]
            divisor = to_div(gamma, linear_function(gamma, [-v for v in x])).to_divisor(G.n)

            assert divisor.degree == 0
            assert list(divisor) == (G.laplacian @ x).tolist()


class TestSubdivideAt:
    """
    Test cases for metric subdivision.
    """

    def test_banana_midpoint(self, b2):
        """
        One point splits edge 0 into two halves.
        """
        gamma = MetricGraph(b2, (1, 1))
        refined, moved = subdivide_at(gamma, [Point.on(0, HALF)])

        assert refined.underlying.edges == ((0, 2), (2, 1), (0, 1))
        assert refined.lengths == (HALF, HALF, 1)
        assert moved.point(Point.on(0, HALF)) == Point.at(2)
        assert moved.point(Point.on(0, Fraction(3, 4))) == Point.on(1, Fraction(1, 4))
        assert moved.point(Point.at(1)) == Point.at(1)

    def test_divisor_becomes_vertex_supported(self, b2):
        """
        Divisors on the new points become vertex divisors.
        """
        gamma = MetricGraph(b2, (1, 1))
        D = PointDivisor.of([(Point.at(0), 1), (Point.on(0, HALF), 2)])
        refined, moved = subdivide_at(gamma, [Point.on(0, HALF)])

        assert moved.divisor(D).to_divisor(refined.underlying.n) == Divisor((1, 0, 2))

    def test_function_carried(self, b2):
        """
        div(f) is unchanged by subdivision.
        """
        gamma = MetricGraph(b2, (1, 1))
        f = PLFunction.of([[(0, 0), ("1/2", 1), (1, 0)], [(0, 0), (1, 0)]])
        refined, moved = subdivide_at(gamma, [Point.on(0, HALF)])

        assert to_div(refined, moved.function(f)) == moved.divisor(to_div(gamma, f))

    def test_duplicate(self, b2):
        """
        Points are listed once.
        """
        gamma = MetricGraph(b2, (1, 1))

        with pytest.raises(DuplicatePoint):
            subdivide_at(gamma, [Point.on(0, HALF), Point.on(0, "2/4")])

    def test_endpoint(self, b2):
        """
        Offsets are strictly inside the edge.
        """
        gamma = MetricGraph(b2, (1, 1))

        with pytest.raises(OffsetOutOfRange):
            subdivide_at(gamma, [Point.on(1, 1)])


class TestIntegerize:
    """
    Test cases for scaling and unit subdivision.
    """

    def test_lcm(self, b2):
        """
        (1/2, 1/3) scales by 6 to (3, 2).
        """
        scaled, scale = integerize(MetricGraph(b2, (HALF, Fraction(1, 3))))

        assert scaled.lengths == (3, 2)
        assert scale == 6

    def test_reduced_fractions(self, b2):
        """
        2/6 is 1/3, so the scale is 3.
        """
        scaled, scale = integerize(MetricGraph(b2, ("2/6", Fraction(1, 3))))

        assert scaled.lengths == (1, 1)
        assert scale == 3

    def test_unit_subdivision(self, b2):
        """
        Lengths (2, 1) give a triangle.
        """
        unit = unit_subdivision(MetricGraph(b2, (2, 1)))

        assert unit.graph.n == 3
        assert unit.graph.num_edges == 3
        assert unit.vertex(Point.on(0, 1)) == 2

    def test_non_integer(self, b2):
        """
        Unit subdivision needs integer lengths.
        """
        with pytest.raises(NonIntegerLength):
            unit_subdivision(MetricGraph(b2, (HALF, 1)))

    def test_cycle_system(self, k3):
        """
        Slopes of a function balance around every cycle.
        """
        gamma = MetricGraph(k3, (1, 2, HALF))
        f = linear_function(gamma, [0, 1, 1])

        assert slope_vector(gamma, f) == (1, 0, 2)
        assert check_cycle_system(gamma, [slope_vector(gamma, f)])
        assert not check_cycle_system(gamma, [(1, 0, 0)])


class TestTransfer:
    """
    Test cases for moving metric witnesses to a graph subdivision.
    """

    def test_banana_halves(self, b2):
        """
        2u on B2 with half lengths lands on B2 itself.
        """
        gamma = MetricGraph(b2, (HALF, HALF))
        D = vertex_divisor((0, 2))
        witnesses = {
            0: Witness(D, linear_function(gamma, [0, 0])),
            1: Witness(vertex_divisor((1, 2)), linear_function(gamma, [0, HALF])),
        }
        result = transfer_witness(gamma, D, witnesses)

        assert result.scale == 2
        assert result.graph == b2
        assert result.divisor == Divisor((2, 0))
        assert result.bound == 2
        assert has_positive_rank(result.graph, result.divisor)

    def test_triangle(self, k3):
        """
        2a on unit K3 with f = -1 at a.
        """
        gamma = MetricGraph(k3, (1, 1, 1))
        D = vertex_divisor((0, 2))
        moved = Witness(vertex_divisor((1, 1), (2, 1)), linear_function(gamma, [-1, 0, 0]))
        result = transfer_witness(
            gamma, D, {0: Witness(D, linear_function(gamma, [0, 0, 0])), 1: moved, 2: moved}
        )

        assert result.graph == k3
        assert result.divisor == Divisor((2, 0, 0))
        assert result.vertex_map == (0, 1, 2)

    def test_interior_support(self, b2):
        """
        Chips inside an edge become vertices of the subdivision.
        """
        gamma = MetricGraph(b2, (1, 1))
        D = PointDivisor.of([(Point.at(0), 1), (Point.on(0, HALF), 1)])
        bend = PLFunction.of(
            [[(0, 0), ("1/2", 0), (1, "1/2")], [(0, 0), ("1/2", "1/2"), (1, "1/2")]]
        )
        to_v = PointDivisor.of([(Point.at(1), 1), (Point.on(1, HALF), 1)])
        witnesses = {0: Witness(D, linear_function(gamma, [0, 0])), 1: Witness(to_v, bend)}

        assert D - to_div(gamma, bend) == to_v

        result = transfer_witness(gamma, D, witnesses)

        assert result.scale == 2
        assert result.graph.n == 4
        assert result.divisor == Divisor((1, 0, 1, 0))
        assert has_positive_rank(result.graph, result.divisor)

    def test_missing_witness(self, k3):
        """
        Every vertex needs a witness.
        """
        gamma = MetricGraph(k3, (1, 1, 1))
        D = vertex_divisor((0, 2))

        with pytest.raises(WitnessInvalid):
            transfer_witness(gamma, D, {0: Witness(D, linear_function(gamma, [0, 0, 0]))})

    def test_wrong_witness(self, k3):
        """
        D - div(f) must equal the witness divisor.
        """
        gamma = MetricGraph(k3, (1, 1, 1))
        D = vertex_divisor((0, 2))
        flat = linear_function(gamma, [0, 0, 0])
        wrong = Witness(vertex_divisor((1, 1), (2, 1)), flat)

        with pytest.raises(WitnessInvalid):
            transfer_witness(gamma, D, {0: Witness(D, flat), 1: wrong, 2: wrong})


class TestEquivalenceFunction:
    """
    Test cases for metric equivalence of vertex divisors.
    """

    def test_triangle(self, k3):
        """
        (1, 1, 0) ~ (0, 0, 2) on unit K3.
        """
        gamma = MetricGraph(k3, (1, 1, 1))
        f = find_equivalence_function(gamma, Divisor((1, 1, 0)), Divisor((0, 0, 2)))

        assert f is not None
        assert PointDivisor.from_divisor(Divisor((1, 1, 0))) - to_div(gamma, f) == (
            PointDivisor.from_divisor(Divisor((0, 0, 2)))
        )

    def test_not_equivalent(self, k3):
        """
        Single chips on unit K3.
        """
        gamma = MetricGraph(k3, (1, 1, 1))

        assert find_equivalence_function(gamma, Divisor((1, 0, 0)), Divisor((0, 1, 0))) is None

    def test_half_lengths(self, k3):
        """
        On a circle of length 3/2, a + b ~ 2c.
        """
        gamma = MetricGraph(k3, (HALF, HALF, HALF))

        assert find_equivalence_function(gamma, Divisor((1, 1, 0)), Divisor((0, 0, 2))) is not None

    def test_matches_graph_equivalence(self, make_random_graph):
        """
        Uniform lengths: metric and graph equivalence agree.
        """
        rng = random.Random(62)
        pairs = 0

        while pairs < 200:
            G = make_random_graph(rng, rng.randint(2, 5), rng.randint(0, 3))
            gamma = MetricGraph(G, (rng.choice([HALF, 1, 2]),) * G.num_edges)
            degree = rng.randint(0, 3)
            D = Divisor(tuple(rng.randint(0, degree) for _ in G.vertices))
            E = Divisor.point(G.n, rng.randrange(G.n), D.degree)

            found = find_equivalence_function(gamma, D, E)

            assert (found is not None) == (equivalent(G, D, E) is not None)
            pairs += 1

    def test_interior_support_rejected(self, b2):
        """
        Only vertex divisors are handled.
        """
        gamma = MetricGraph(b2, (1, 1))
        D = PointDivisor.of([(Point.on(0, HALF), 1)])

        with pytest.raises(InvalidParameters):
            find_equivalence_function(gamma, D, vertex_divisor((0, 1)))
