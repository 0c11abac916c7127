import math

import numpy as np
import pytest

from edc.geom import (Branch, Circle, Disjoint, Concentric, Coincident, Point, Side,
                      Tolerance, circle_circle_intersect, distance, intersect_both, side_of)

TOL = Tolerance()
L, R = Branch.LEFT, Branch.RIGHT


def test_lens_apex():
    p = circle_circle_intersect(Circle(Point(0, 0), 1), Circle(Point(1, 0), 1), L, TOL)
    assert p.x == pytest.approx(0.5, abs=1e-12)
    assert p.y == pytest.approx(math.sqrt(3) / 2, abs=1e-12)


@pytest.mark.parametrize("branch", [L, R])
def test_external_tangency(branch):
    p = circle_circle_intersect(Circle(Point(0, 0), 1), Circle(Point(2, 0), 1), branch, TOL)
    assert p == (1.0, 0.0)


def test_disjoint():
    with pytest.raises(Disjoint):
        circle_circle_intersect(Circle(Point(0, 0), 2), Circle(Point(4, 0), 1), L, TOL)


def test_concentric_and_coincident():
    with pytest.raises(Concentric):
        intersect_both(Circle(Point(0, 0), 2), Circle(Point(0, 0), 1), TOL)
    with pytest.raises(Coincident):
        intersect_both(Circle(Point(0, 0), 1), Circle(Point(0, 0), 1), TOL)


@pytest.mark.parametrize("p,side", [((0, 1), Side.LEFT), ((0, -1), Side.RIGHT),
                                    ((0.5, 0), Side.ON)])
def test_side_of(p, side):
    assert side_of(Point(*p), Point(0, 0), Point(1, 0), TOL) is side


@pytest.mark.parametrize("p,q,d", [((0, 0), (3, 4), 5.0), ((1, 1), (1, 1), 0.0),
                                   ((0, 0), (1, 0), 1.0)])
def test_distance(p, q, d):
    assert distance(Point(*p), Point(*q)) == d


def test_meets_lie_on_both_circles_and_mirror():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        c1, c2 = Point(*rng.uniform(-5, 5, 2)), Point(*rng.uniform(-5, 5, 2))
        d = distance(c1, c2)
        if d < 0.1:
            continue
        r1 = rng.uniform(0.6 * d, 1.5 * d)
        r2 = rng.uniform(abs(d - r1) + 0.05 * d, d + r1 - 0.05 * d)
        a, b = Circle(c1, r1), Circle(c2, r2)
        left, right = intersect_both(a, b, TOL)
        for p in (left, right):
            assert abs(distance(p, c1) - r1) < 1e-9 * max(1, r1)
            assert abs(distance(p, c2) - r2) < 1e-9 * max(1, r2)
        assert side_of(left, c1, c2, TOL) is Side.LEFT
        assert side_of(right, c1, c2, TOL) is Side.RIGHT
        # mirror images across the center axis: same foot on the axis
        ux, uy = (c2.x - c1.x) / d, (c2.y - c1.y) / d
        proj = lambda p: (p.x - c1.x) * ux + (p.y - c1.y) * uy
        assert proj(left) == pytest.approx(proj(right), abs=1e-9)


def test_tolerance_scales_with_inputs():
    t = Tolerance.for_points([Point(0, 0), Point(-300, 20)])
    assert t.eps == pytest.approx(300e-9)
    with pytest.raises(ValueError):
        Tolerance(eps_rel=0)
