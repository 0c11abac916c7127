import math

import numpy as np
import pytest

from edc.geom import Branch, Circle, LineMissesCircle, ParallelLines, Point, Tolerance
from edc.program import dsl
from edc.program import executor as X
from edc.transpiler import (CENTRAL, NONCENTRAL, compile, dispatch, line_circle_meet,
                            line_line_meet)
from edc.verify import differential, random_ruler_program

L, R = Branch.LEFT, Branch.RIGHT
UNIT = Circle(Point(0, 0), 1.0)


def close(p, q, tol=1e-9):
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= tol


def test_line_line_meet():
    assert close(line_line_meet((0, 0), (1, 0), (0, 0), (0, 1)), (0, 0))
    assert close(line_line_meet((0, 0), (1, 1), (0, 1), (1, 0)), (0.5, 0.5))
    with pytest.raises(ParallelLines):
        line_line_meet((0, 0), (1, 0), (0, 1), (1, 1))


def test_line_line_meet_is_pure():
    _, prog = line_line_meet((0, 0), (3, 1), (0, 2), (2, -1), program=True)
    assert prog.is_compass() and X.step_metrics(prog)["ruler_steps"] == 0


def test_line_circle_meet_central():
    a = line_circle_meet((-3, 0), (2, 0), UNIT, L)
    b = line_circle_meet((-3, 0), (2, 0), UNIT, R)
    assert {round(a.x, 9), round(b.x, 9)} == {1.0, -1.0}
    assert close(a, (1, 0))       # further along P1 -> P2


def test_line_circle_meet_noncentral():
    s = math.sqrt(3) / 2
    assert close(line_circle_meet((-2, 0.5), (2, 0.5), UNIT, L), (s, 0.5))
    assert close(line_circle_meet((-2, 0.5), (2, 0.5), UNIT, R), (-s, 0.5))
    with pytest.raises(LineMissesCircle):
        line_circle_meet((-2, 2), (2, 2), UNIT, L)


def test_dispatch_threshold():
    tol = Tolerance()
    assert dispatch(Point(0, 0), Point(-1, 0), Point(1, 0), tol) == CENTRAL
    assert dispatch(Point(0, 0.9e-9), Point(-1, 0), Point(1, 0), tol) == CENTRAL
    assert dispatch(Point(0, 1.1e-9), Point(-1, 0), Point(1, 0), tol) == NONCENTRAL


def test_rules_agree_near_the_dispatch_threshold():
    # the two expansions are different constructions; they agree to within
    # the verification threshold near the switch, not to within eps
    rng = np.random.default_rng(2)
    eps = 3e-9      # points reach |x| = 3, so the tolerance scale is 3
    for _ in range(200):
        off = rng.uniform(1.2, 10) * eps * rng.choice([-1, 1])
        th = rng.uniform(0, 2 * math.pi)
        u = (math.cos(th), math.sin(th))
        P1 = (-3 * u[0] - off * u[1], -3 * u[1] + off * u[0])
        P2 = (2 * u[0] - off * u[1], 2 * u[1] + off * u[0])
        for br in (L, R):
            a = line_circle_meet(P1, P2, UNIT, br, rule=CENTRAL)
            b = line_circle_meet(P1, P2, UNIT, br, rule=NONCENTRAL)
            assert math.dist(a, b) < 1e-6


def test_compile_pure_program_unchanged():
    p = dsl.parse("given A (0,0)\ngiven B (1,0)\ncircle k1 = A rad A B\n"
                  "circle k2 = B rad A B\npoint C = meet k1 k2 left")
    cp = compile(p)
    assert cp == p


def test_compile_square_diagonals():
    rp = dsl.parse("given A (0,0)\ngiven B (1,0)\ngiven C (1,1)\ngiven D (0,1)\n"
                   "line l1 = A C\nline l2 = B D\npoint X = meetll l1 l2", ruler=True)
    cp = compile(rp)
    assert cp.is_compass() and not cp.ruler
    assert close(X.execute(cp).points()["X"], (0.5, 0.5))


def test_compile_circle_forms_and_assertions():
    rp = dsl.parse("given A (0,0)\ngiven B (4,0)\ngiven C (1,3)\ncircle k = diam A B\n"
                   "circle m = thru A B C\npoint X = meet k m left\nline l = A C\n"
                   "point Y = meetlc l k left\nassert on Y k", ruler=True)
    cp = compile(rp)
    ref, got = X.execute(rp).values, X.execute(cp).values
    for n in ("X", "Y"):
        assert close(got[n], ref[n])
    for n in ("k", "m"):
        assert close(got[n].center, ref[n].center) and got[n].radius == pytest.approx(
            ref[n].radius, abs=1e-9)


def test_compile_reports_failing_step():
    rp = dsl.parse("given A (0,0)\ngiven B (1,0)\ngiven C (0,1)\ngiven D (1,1)\n"
                   "line l = A B\nline m = C D\npoint X = meetll l m", ruler=True)
    with pytest.raises(X.StepError) as e:
        compile(rp)
    assert e.value.index == 2


def test_random_programs_compile_and_agree():
    rng = np.random.default_rng(9)
    for _ in range(20):
        rp = random_ruler_program(rng)
        assert rp.ruler_step_count() > 0
        err, cp = differential(rp)
        assert cp.is_compass() and err <= 1e-6
