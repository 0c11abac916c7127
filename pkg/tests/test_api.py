import math

import numpy as np
import pytest

from edc.geom import (Branch, Circle, CollinearPoints, DangerCircle, DegenerateInput,
                      DegenerateLine, LengthOutOfRange, Point, PointInsideOrOn,
                      PointsNotOnCircle)
from edc.propositions import api
from edc.propositions.api import AngleSpec

L, R = Branch.LEFT, Branch.RIGHT
S3 = math.sqrt(3) / 2
UNIT = Circle(Point(0, 0), 1.0)


def close(p, q, tol=1e-9):
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= tol


def test_equilateral_apex():
    assert close(api.equilateral_apex((0, 0), (1, 0), L), (0.5, S3))
    assert close(api.equilateral_apex((0, 0), (1, 0), R), (0.5, -S3))
    with pytest.raises(DegenerateInput):
        api.equilateral_apex((1, 1), (1, 1))


def test_antipode():
    assert close(api.antipode((0, 0), (1, 0)), (-1, 0))
    assert close(api.antipode((2, 3), (2, 4)), (2, 2))
    with pytest.raises(DegenerateInput):
        api.antipode((1, 1), (1, 1))


@pytest.mark.parametrize("A,B,n,out", [((0, 0), (1, 0), 2, (2, 0)), ((0, 0), (1, 0), 3, (3, 0)),
                                       ((1, 1), (2, 2), 2, (3, 3))])
def test_extend_n(A, B, n, out):
    assert close(api.extend_n(A, B, n), out)


def test_copy_angle():
    src = AngleSpec.points((1, 0), (0, 0), (math.cos(math.pi / 3), math.sin(math.pi / 3)))
    F = api.copy_angle(src, (0, 0), (1, 0), L)
    assert math.atan2(F[1], F[0]) == pytest.approx(math.pi / 3, abs=1e-9)
    F = api.copy_angle(AngleSpec.radians(math.pi / 2), (0, 0), (2, 0), L)
    assert math.atan2(F[1], F[0]) == pytest.approx(math.pi / 2, abs=1e-9)
    with pytest.raises(DegenerateInput):
        api.copy_angle(AngleSpec.points((1, 0), (0, 0), (2, 0)), (0, 0), (1, 0))


def test_midpoint_variants():
    assert close(api.midpoint((0, 0), (2, 0)), (1, 0))
    assert close(api.midpoint((1, 1), (3, 5)), (2, 3))
    metrics = set()
    for v in (1, 2, 3):
        m, prog = api.midpoint((0, 0), (1, 1), variant=v, program=True)
        assert close(m, (0.5, 0.5))
        assert prog.is_compass()
        metrics.add(len(prog.steps))
    assert len(metrics) == 3


def test_perpendicular_foot():
    assert close(api.perpendicular_foot((0, 1), (-1, 0), (1, 0)), (0, 0))
    assert close(api.perpendicular_foot((2, 3), (0, 0), (1, 0)), (2, 0))
    assert close(api.perpendicular_foot((0.5, 0), (0, 0), (1, 0)), (0.5, 0))
    with pytest.raises(DegenerateLine):
        api.perpendicular_foot((0, 1), (1, 0), (1, 0))


def test_tangent_point():
    assert close(api.tangent_point((2, 0), UNIT, L), (0.5, S3))
    assert close(api.tangent_point((2, 0), UNIT, R), (0.5, -S3))
    with pytest.raises(PointInsideOrOn):
        api.tangent_point((0.5, 0), UNIT)


def test_perpendicular_at_endpoint():
    assert close(api.perpendicular_at_endpoint((0, 0), (1, 0), 1, L), (0, 1))
    rng = np.random.default_rng(3)
    for _ in range(50):
        a, b = sorted(rng.uniform(0.1, 10, 2))[::-1]
        K1 = api.perpendicular_at_endpoint((0, 0), (a, 0), b, L, variant=1)
        K2 = api.perpendicular_at_endpoint((0, 0), (a, 0), b, L, variant=2)
        assert close(K1, K2, 1e-9 * a)
        assert (K1[0] - a) ** 2 + K1[1] ** 2 == pytest.approx(a * a + b * b, rel=1e-9)


def test_extend_by_and_cut_off():
    assert close(api.extend_by((1, 0), (0, 0), 2), (3, 0))
    with pytest.raises(DegenerateInput):
        api.extend_by((1, 0), (0, 0), 1e-12)
    assert close(api.cut_off((0, 0), (5, 0), 2), (2, 0))
    with pytest.raises(LengthOutOfRange):
        api.cut_off((0, 0), (0, 3), 3)


def test_divide_n():
    pts = api.divide_n((0, 0), (3, 0), 3)
    assert len(pts) == 2 and close(pts[0], (1, 0)) and close(pts[1], (2, 0))
    (m,) = api.divide_n((0, 0), (1, 1), 2)
    assert close(m, api.midpoint((0, 0), (1, 1)))


@pytest.mark.parametrize("fn,args,out", [
    (api.geometric_mean, (1, 4), 2.0),
    (api.geometric_mean, (2, 3), 2.449489742783178),   # sqrt(6)
    (api.geometric_mean, (1.7, 1.7), 1.7),
    (api.third_proportional, (1, 2), 4.0),
    (api.third_proportional, (2, 3), 4.5),
    (api.third_proportional, (5, 5), 5.0),
    (api.fourth_proportional, (1, 2, 3), 6.0),
    (api.fourth_proportional, (2, 3, 4), 6.0),
    (api.fourth_proportional, (3, 1, 12), 4.0),
])
def test_lengths(fn, args, out):
    assert fn(*args) == pytest.approx(out, rel=1e-9)


def test_bisect_angle():
    for v in (1, 2):
        C = api.bisect_angle(AngleSpec.points((1, 0), (0, 0), (0, 1)), variant=v)
        assert close(C, (math.sqrt(0.5), math.sqrt(0.5)))
        C = api.bisect_angle(AngleSpec.points((1, 0), (0, 0), (0.5, S3)), variant=v)
        assert math.atan2(C[1], C[0]) == pytest.approx(math.pi / 6, abs=1e-9)
    with pytest.raises(DegenerateInput):
        api.bisect_angle(AngleSpec.points((1, 0), (0, 0), (3, 0)))


def test_circumcenter():
    assert close(api.circumcenter((0, 0), (2, 0), (1, 1)), (1, 0))
    E = api.circumcenter((0, 0), (1, 0), (0.5, 10))
    d = [math.dist(E, p) for p in ((0, 0), (1, 0), (0.5, 10))]
    assert max(d) - min(d) < 1e-8
    with pytest.raises(CollinearPoints):
        api.circumcenter((0, 0), (1, 0), (2, 0))


def test_bisect_arc():
    assert close(api.bisect_arc((1, 0), (0, 1), UNIT), (math.sqrt(0.5), math.sqrt(0.5)))
    # the arc on the left of A -> B, which points along -x here
    assert close(api.bisect_arc((1, 0), (-1, 0), UNIT, L), (0, -1))
    assert close(api.bisect_arc((1, 0), (-1, 0), UNIT, R), (0, 1))
    with pytest.raises(PointsNotOnCircle):
        api.bisect_arc((1.1, 0), (0, 1), UNIT)


def test_golden_section():
    phi = (math.sqrt(5) - 1) / 2            # positive root of x^2 + x - 1
    G = api.golden_section((0, 0), (1, 0))
    assert close(G, (1 - phi, 0))
    G = api.golden_section((0, 0), (2, 0))
    assert math.dist(G, (2, 0)) == pytest.approx(2 * phi, abs=1e-9)


def test_pentagon_and_pentadecagon():
    assert api.pentagon_side(UNIT) == pytest.approx(2 * math.sin(math.radians(36)), abs=1e-9)
    assert api.pentagon_side(Circle(Point(1, 1), 2.0)) == pytest.approx(
        4 * math.sin(math.radians(36)), abs=1e-9)
    assert api.pentadecagon_side(UNIT) == pytest.approx(2 * math.sin(math.radians(12)),
                                                        abs=1e-9)


def test_parallel_through():
    D = api.parallel_through((0, 2), (0, 0), (1, 0))
    assert close(D, (-1, 2))
    assert abs((D[0] - 0) * (1 - 0) * 0 + (D[1] - 2) * 1 - 0 * (D[0] - 0)) < 1e-9
    with pytest.raises(DegenerateLine):
        api.parallel_through((0, 2), (1, 0), (1, 0))


def test_resection_example():
    q = math.pi / 4
    E = api.resection((-2, 0), (0, 0), (2, 0), q, q, R)
    assert close(E, (0, -2))


def test_resection_danger_circle():
    # E on the circumcircle of A, B, C
    A, B, C = (1, 0), (0, 1), (-1, 0)
    E = (math.cos(-1.2), math.sin(-1.2))
    a1 = AngleSpec.points(A, E, B).measure()
    a2 = AngleSpec.points(B, E, C).measure()
    # E lies left of both A -> B and B -> C
    with pytest.raises(DangerCircle):
        api.resection(A, B, C, a1, a2, (L, L))


def test_perspective_image():
    # glass base V-T on the y axis, eye S at distance SW = 1, A at AG = 1 beyond, GW = 2
    A, V, T, S = (1, 2), (0, -5), (0, 5), (-1, 0)
    assert api.perspective_image(A, V, T, S, 2) == pytest.approx((1, 1), abs=1e-9)
    # A on the line through S perpendicular to the glass: no offset
    off, h = api.perspective_image((3, 0), V, T, S, 2)
    assert off == pytest.approx(0, abs=1e-9) and h == pytest.approx(2 * 3 / 4, abs=1e-9)
    off, h = api.perspective_image((1e-7, 2), V, T, S, 2)
    assert h < 1e-6


def test_run_proposition_triangle_from_sides():
    # sides |AB| = 3, |AC| = 4 (U1 U2), |BC| = 5 (V1 V2)
    out = api.run_proposition("P1.7", {"A": (0, 0), "B": (3, 0), "U1": (0, 0), "U2": (4, 0),
                                       "V1": (0, 0), "V2": (5, 0)})
    assert close(out["C"], (0, 4))
    out = api.run_proposition("P1.7", {"A": (0, 0), "B": (3, 0), "U1": (0, 0), "U2": (4, 0),
                                       "V1": (0, 0), "V2": (5, 0)}, {"side": "right"})
    assert close(out["C"], (0, -4))


def test_program_flag_returns_pure_program():
    C, prog = api.equilateral_apex((0, 0), (1, 0), program=True)
    assert prog.is_compass() and len(prog.steps) == 3


def test_run_proposition_square_in_unit_circle():
    # circle about B through A; the square is A I C G
    out = api.run_proposition("P1.11", {"A": (0, 0), "B": (1, 0)})
    assert math.dist(out["I"], (0, 0)) == pytest.approx(math.sqrt(2), abs=1e-9)
    assert math.dist(out["I"], out["C"]) == pytest.approx(math.sqrt(2), abs=1e-9)


def test_run_proposition_square_in_semicircle_matches_optimum():
    # inscribed square on the diameter: (s/2)^2 + s^2 = r^2 with r = 1/2
    out = api.run_proposition("P2.14", {"A": (0, 0), "B": (1, 0)})
    assert math.dist(out["D"], (0, 0)) == pytest.approx(2 * 0.5 / math.sqrt(5), abs=1e-9)
