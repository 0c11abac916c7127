"""Ruler-and-compass programs rewritten as compass-only programs.

Each ruler step is replaced by a compass construction that defines the same
named point or circle:

    line meets line              fourth proportionals on the feet (ll_meet)
    line meets circle, off center   center mirrored in the line, then two circles
    line meets circle, on center    radius laid along the line by arc midpoints
    circle on a diameter         midpoint construction, then one circle
    circle through three points  circumcenter construction, then one circle

Lines disappear: they live on only as the point pairs that defined them.
Choices between two meets are fixed from the ruler program's own values, so
the compiled program reproduces it at the bindings it was compiled for.
"""

from .geom import (Circle, GeometryError, LineMissesCircle, Point, Tolerance, distance)
from .program import executor as X
from .program import ruler as RU
from .program.builder import Builder
from .program.ir import (CatalogError, CircleDiam, CircleThru, DrawCircle, DrawLine,
                         Intersect, MacroCall, MeetLC, MeetLL, Program, count_steps,
                         step_outputs)
from .propositions import kernel as K

CENTRAL, NONCENTRAL = "central", "noncentral"


def dispatch(center, p, q, tol):
    """Which line-circle rule applies: central iff the center is within eps
    of the line pq."""
    n = distance(p, q)
    off = abs((q[0] - p[0]) * (center[1] - p[1]) - (q[1] - p[1]) * (center[0] - p[0])) / n
    return CENTRAL if off <= tol.eps else NONCENTRAL


def _line_circle(b, P1, P2, k, target, out=None, rule=None):
    """Meet of line P1P2 with circle k (a name in b.circle_defs) nearest target."""
    C, r1, r2 = b.circle_defs[k]
    rule = rule or dispatch(b.pt(C), b.pt(P1), b.pt(P2), b.tol)
    if rule == CENTRAL:
        P = P1 if b.d(C, P1) >= b.d(C, P2) else P2
        c, p = b.pt(C), b.pt(P)
        toward = (p[0] - c[0]) * (target[0] - c[0]) + (p[1] - c[1]) * (target[1] - c[1]) > 0
        name = K.lay(b, C, P, (r1, r2), toward)
        return b.alias(name, out) if out else name
    C2 = K.reflect(b, C, P1, P2)
    if C2 == C:
        raise GeometryError("center lies on the line; use the central rule")
    return b.meet_near(k, b.circle(C2, r1, r2), target, out)


def _emit(b, step, values, lines, i, taken):
    """Append the compass form of one source step to the builder."""
    if isinstance(step, DrawCircle):
        b.circle(step.center, step.r1, step.r2, out=step.out)
    elif isinstance(step, Intersect):
        b.meet(step.c1, step.c2, step.branch, out=step.out)
    elif isinstance(step, MacroCall):
        args = [b.pt(a) for a in step.args]
        for s in X.expand_macro(step, args, b.tol, taken, f"m{i}_"):
            _emit(b, s, values, lines, i, taken)
    elif isinstance(step, DrawLine):
        lines[step.out] = (step.p, step.q)
    elif isinstance(step, MeetLL):
        (p1, p2), (q1, q2) = lines[step.l1], lines[step.l2]
        b.alias(K.ll_meet(b, p1, p2, q1, q2), step.out)
    elif isinstance(step, MeetLC):
        p1, p2 = lines[step.line]
        _line_circle(b, p1, p2, step.circle, values[step.out], out=step.out)
    elif isinstance(step, CircleDiam):
        m = K.halve(b, step.p, step.q)
        b.circle(m, m, step.p, out=step.out)
    elif isinstance(step, CircleThru):
        e = K.circumcenter(b, step.p, step.q, step.r)
        b.circle(e, e, step.p, out=step.out)
    else:
        raise TypeError(f"cannot compile {step!r}")


def compile(rp, bindings=None, tol=None):
    """Compass-only program defining every point and circle of rp.

    Programs without ruler steps come back unchanged.  Otherwise rp is first
    run by the ruler-aware executor at its bindings (defaults from its given
    lines); geometric errors carry the index of the source step."""
    if rp.ruler_step_count() == 0:
        return Program(rp.inputs, rp.steps, rp.assertions, False)
    trace = X.run(rp, bindings, tol)
    values, tol = trace.values, trace.tol
    taken = set(values)
    for s in rp.steps:
        taken.update(step_outputs(s))
    b = Builder(tol, reserved=taken)
    for g in rp.inputs:
        b.given(g.name, values[g.name])
    lines = {}
    for i, step in enumerate(rp.steps):
        try:
            _emit(b, step, values, lines, i, taken)
        except (GeometryError, CatalogError) as e:
            raise X.StepError(i, e) from e
    return Program(rp.inputs, tuple(b.steps), rp.assertions, False)


def compile_stats(rp, cp):
    """Step counts before and after compilation."""
    return {"before": X.step_metrics(rp) if rp.ruler else count_steps(rp.steps).as_dict(),
            "after": count_steps(cp.steps).as_dict()}


# -- direct evaluation -------------------------------------------------------

def _builder(points):
    pts = {k: Point(float(v[0]), float(v[1])) for k, v in points.items()}
    b = Builder(Tolerance.for_points(pts.values()))
    for k, v in pts.items():
        b.given(k, v)
    return b


def line_line_meet(P1, P2, Q1, Q2, program=False):
    """Meet of lines P1P2 and Q1Q2 by compass alone."""
    b = _builder({"P1": P1, "P2": P2, "Q1": Q1, "Q2": Q2})
    RU.meet_ll(RU.make_line(b.pt("P1"), b.pt("P2"), b.tol),
               RU.make_line(b.pt("Q1"), b.pt("Q2"), b.tol), b.tol)
    p = b.pt(K.ll_meet(b, "P1", "P2", "Q1", "Q2"))
    return (p, b.program()) if program else p


def line_circle_meet(P1, P2, k, branch, program=False, rule=None):
    """Meet of line P1P2 with circle k; Left is the meet further along
    P1 -> P2.  rule forces the central or noncentral expansion."""
    c, r = Point(*k.center), float(k.radius)
    b = _builder({"P1": P1, "P2": P2, "Kc": c, "Kr": Point(c.x + r, c.y)})
    line = RU.make_line(b.pt("P1"), b.pt("P2"), b.tol)
    target = RU.meet_lc(line, Circle(c, r), branch, b.tol)
    kc = b.circle("Kc", "Kc", "Kr")
    p = b.pt(_line_circle(b, "P1", "P2", kc, target, rule=rule))
    return (p, b.program()) if program else p


__all__ = ["compile", "compile_stats", "dispatch", "line_line_meet", "line_circle_meet",
           "CENTRAL", "NONCENTRAL", "LineMissesCircle"]
