import math

import numpy as np
import pytest

from diamapprox import EvalCounter, PointSet, distance, farthest, worst_case_five_points

from util import squared_distance_matrix


class TestPointSet:
    def test_shape_and_accessors(self):
        ps = PointSet([[0.0, 1.0], [2.0, 3.0], [4.0, 5.0]])
        assert ps.n == 3
        assert ps.m == 2
        assert len(ps) == 3
        assert ps.point(1).tolist() == [2.0, 3.0]

    def test_rejects_nan_and_inf(self):
        with pytest.raises(ValueError):
            PointSet([[0.0, float("nan")]])
        with pytest.raises(ValueError):
            PointSet([[float("inf"), 0.0]])

    def test_rejects_empty_and_wrong_rank(self):
        with pytest.raises(ValueError):
            PointSet(np.empty((0, 3)))
        with pytest.raises(ValueError):
            PointSet(np.empty((3, 0)))
        with pytest.raises(ValueError):
            PointSet([1.0, 2.0, 3.0])

    def test_coords_frozen_and_copied(self):
        src = np.zeros((2, 2))
        ps = PointSet(src)
        src[0, 0] = 7.0  # mutating the source must not leak in
        assert ps.coords[0, 0] == 0.0
        with pytest.raises(ValueError):
            ps.coords[0, 0] = 1.0


class TestDistance:
    def test_three_four_five(self):
        assert distance((0.0, 0.0), (3.0, 4.0)) == 5.0

    def test_identity(self):
        assert distance((1.0, 1.0, 1.0), (1.0, 1.0, 1.0)) == 0.0

    def test_dim_nine(self):
        assert distance(np.zeros(9), np.ones(9)) == 3.0

    def test_symmetry(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            a, b = rng.normal(size=(2, 5))
            assert distance(a, b) == distance(b, a)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            distance((0.0, 0.0), (0.0, 0.0, 0.0))


class TestFarthest:
    def test_unit_square_corner(self):
        ps = PointSet([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        res = farthest(ps, (0.0, 0.0))
        assert res.index == 3
        assert res.dist == math.sqrt(2.0)

    def test_singleton(self):
        ps = PointSet([[2.0, 2.0]])
        res = farthest(ps, (2.0, 2.0))
        assert res == (0, 0.0)

    def test_worst_case_query_row0(self):
        # Independent oracle: scan all five distances by hand.
        ps = worst_case_five_points()
        query = ps.point(0)
        dists = [distance(query, ps.point(i)) for i in range(5)]
        best = max(dists)
        expected_index = dists.index(best)  # lowest index on ties
        res = farthest(ps, query)
        assert res.index == expected_index == 1
        assert res.dist == best == 1.0

    def test_query_outside_set_allowed(self):
        ps = PointSet([[0.0, 0.0], [1.0, 0.0]])
        res = farthest(ps, (10.0, 0.0))
        assert res.index == 0
        assert res.dist == 10.0

    def test_dominates_every_member(self):
        rng = np.random.default_rng(11)
        for n, m in [(3, 2), (64, 3), (256, 5)]:
            coords = rng.normal(size=(n, m))
            ps = PointSet(coords)
            query = rng.normal(size=m)
            res = farthest(ps, query)
            d2 = ((coords - query) ** 2).sum(axis=1)
            assert res.dist**2 >= d2.max() - 1e-12
            assert math.isclose(res.dist, math.sqrt(d2[res.index]))

    def test_tie_break_lowest_index(self):
        # Symmetric duplicates produce bitwise-equal distances.
        ps = PointSet([[0.0, 0.0], [1.0, 1.0], [1.0, 1.0], [-1.0, -1.0]])
        assert farthest(ps, (0.0, 0.0)).index == 1

    def test_tie_break_stable_under_coordinate_swap(self):
        # Swapping the two coordinate columns of every point preserves
        # all distances bitwise, so the returned index must not change.
        coords = np.array([[0.0, 0.0], [2.0, 1.0], [1.0, 2.0], [-1.0, -2.0], [-2.0, -1.0]])
        a = PointSet(coords)
        b = PointSet(coords[:, ::-1])
        for i in range(len(coords)):
            ra = farthest(a, a.point(i))
            rb = farthest(b, b.point(i))
            assert ra.index == rb.index
            assert ra.dist == rb.dist

    def test_counter_delta_is_n(self):
        rng = np.random.default_rng(3)
        for n in (1, 2, 17, 200):
            ps = PointSet(rng.normal(size=(n, 3)))
            counter = EvalCounter()
            farthest(ps, ps.point(0), counter)
            assert counter.distance_evaluations == n
            farthest(ps, np.zeros(3), counter)
            assert counter.distance_evaluations == 2 * n

    def test_query_dimension_mismatch(self):
        ps = PointSet([[0.0, 0.0]])
        with pytest.raises(ValueError):
            farthest(ps, (0.0, 0.0, 0.0))

    def test_matches_dense_matrix_on_members(self):
        rng = np.random.default_rng(9)
        coords = rng.normal(size=(40, 4))
        ps = PointSet(coords)
        d2 = squared_distance_matrix(coords)
        for i in range(40):
            res = farthest(ps, coords[i])
            assert res.index == int(np.argmax(d2[i]))
