"""Direct evaluation of the catalog's constructions on concrete points.

Each function builds its compass construction on a fresh Builder and returns
the resulting point (or length).  Pass ``program=True`` to also get the
recorded compass program.  Scalar lengths are laid on a private work axis
starting at the origin.
"""

import math
from dataclasses import dataclass
from typing import Optional

from ..geom import (Branch, Circle, DangerCircle, DegenerateInput, DegenerateLine,
                    LengthOutOfRange, NonpositiveLength, ObserverOnGlass, Point,
                    PointInsideOrOn, PointsNotOnCircle, Tolerance, cross, distance)
from ..program.builder import Builder
from . import catalog
from . import kernel as K
from . import part1, part2

L, R = Branch.LEFT, Branch.RIGHT


@dataclass(frozen=True)
class AngleSpec:
    """Angle B-A-C at vertex A, or a plain angle in radians."""
    B: Optional[Point] = None
    A: Optional[Point] = None
    C: Optional[Point] = None
    value: Optional[float] = None

    @classmethod
    def radians(cls, value):
        if not (0.0 < value < math.pi):
            raise DegenerateInput(f"angle {value!r} outside (0, pi)")
        return cls(value=float(value))

    @classmethod
    def points(cls, B, A, C):
        return cls(Point(*B), Point(*A), Point(*C))

    def triple(self, vertex=Point(0.0, 0.0)):
        """(B, A, C) points; the numeric form sits on the unit circle about vertex."""
        if self.value is not None:
            return (Point(vertex.x + 1.0, vertex.y), vertex,
                    Point(vertex.x + math.cos(self.value), vertex.y + math.sin(self.value)))
        return self.B, self.A, self.C

    def measure(self):
        if self.value is not None:
            return self.value
        B, A, C = self.B, self.A, self.C
        return abs(math.atan2(cross(A, B, C), (B.x - A.x) * (C.x - A.x) + (B.y - A.y) * (C.y - A.y)))


def _angle(spec):
    if isinstance(spec, AngleSpec):
        return spec
    if isinstance(spec, (int, float)):
        return AngleSpec.radians(spec)
    return AngleSpec.points(*spec)


class _Work:
    """A Builder with named inputs and scalar lengths on a work axis."""

    def __init__(self, points, lengths=(), extra=()):
        pts = {k: Point(float(v[0]), float(v[1])) for k, v in points.items()}
        for n, v in lengths:
            if not (v > 0 and math.isfinite(v)):
                raise NonpositiveLength(f"length {n} = {v!r} is not positive")
        self.axis = {}
        if lengths:
            pts["_W0"] = Point(0.0, 0.0)
            for n, v in lengths:
                pts["_W" + n] = Point(float(v), 0.0)
        pts.update(extra)
        self.b = Builder(Tolerance.for_points(pts.values()))
        for n, p in pts.items():
            self.b.given(n, p)
        for n, v in lengths:
            if v <= self.b.eps:
                raise NonpositiveLength(f"length {n} = {v!r} below the tolerance floor")
            self.axis[n] = ("_W0", "_W" + n)

    def pair(self, n):
        return self.axis[n]

    def done(self, value, program):
        return (value, self.b.program()) if program else value


def _distinct(p, q, err=DegenerateInput):
    tol = Tolerance.for_points([p, q])
    if distance(p, q) <= tol.eps:
        raise err("points coincide")


def equilateral_apex(A, B, branch=L, program=False):
    w = _Work({"A": A, "B": B})
    return w.done(w.b.pt(K.apex(w.b, "A", "B", branch)), program)


def antipode(center, P, program=False):
    w = _Work({"O": center, "P": P})
    return w.done(w.b.pt(K.antipode(w.b, "O", "P")), program)


def extend_n(A, B, n, program=False):
    if n < 2:
        raise ValueError("n must be at least 2")
    w = _Work({"A": A, "B": B})
    return w.done(w.b.pt(K.extend_n(w.b, "A", "B", n)), program)


def copy_angle(src, E, D, branch=L, program=False):
    """F with angle DEF equal to src and |EF| the length of src's first arm."""
    Bs, As, Cs = _angle(src).triple()
    w = _Work({"B": Bs, "A": As, "C": Cs, "E": E, "D": D})
    return w.done(w.b.pt(K.copy_angle(w.b, "B", "A", "C", "E", "D", branch)), program)


def _catalog(pid, points, hints=None, program=False):
    b, outs = catalog.construct(pid, points, hints)
    return (outs, b.program()) if program else outs


def midpoint(A, B, variant=1, program=False):
    r = _catalog(f"P1.15.{variant}", {"A": Point(*A), "B": Point(*B)}, program=program)
    return (r[0]["M"], r[1]) if program else r["M"]


def perpendicular_foot(A, B, C, program=False):
    _distinct(Point(*B), Point(*C), DegenerateLine)
    w = _Work({"A": A, "B": B, "C": C})
    return w.done(w.b.pt(K.foot(w.b, "A", "B", "C")), program)


def _on_circle_point(k):
    c, r = Point(*k.center), float(k.radius)
    if not r > 0:
        raise NonpositiveLength("circle radius must be positive")
    return c, Point(c.x + r, c.y)


def tangent_point(A, k, branch=L, program=False):
    """Touch point on k of a tangent from A; branch is taken about the axis
    from k's center toward A."""
    c, on = _on_circle_point(k)
    w = _Work({"A": A, "Kc": c, "Kp": on})
    if w.b.d("A", "Kc") <= k.radius + w.b.eps:
        raise PointInsideOrOn("point is inside or on the circle")
    return w.done(w.b.pt(K.tangent_point(w.b, "A", "Kc", "Kp", branch)), program)


def perpendicular_at_endpoint(A, B, length, branch=L, variant=1, program=False):
    w = _Work({"A": A, "B": B}, [("len", length)])
    K._check_distinct(w.b, "A", "B")
    if variant == 1 and length > w.b.d("A", "B") + w.b.eps:
        raise LengthOutOfRange("variant 1 needs length <= |AB|")
    p = K.erect(w.b, "A", "B", w.pair("len"), branch, variant)
    return w.done(w.b.pt(p), program)


def extend_by(A, B, d, program=False):
    """N beyond A on line BA with |AN| = d."""
    w = _Work({"A": A, "B": B}, [("d", d)])
    return w.done(w.b.pt(K.extend_by(w.b, "A", "B", w.pair("d"))), program)


def cut_off(A, B, d, program=False):
    w = _Work({"A": A, "B": B}, [("d", d)])
    return w.done(w.b.pt(K.cut_off(w.b, "A", "B", w.pair("d"))), program)


def divide_n(A, B, n, variant=1, program=False):
    w = _Work({"A": A, "B": B})
    pts = [w.b.pt(x) for x in part1.divide(w.b, "A", "B", n, variant)]
    return w.done(pts, program)


def geometric_mean(p, q, program=False):
    w = _Work({}, [("p", p), ("q", q)])
    pr = K.mean(w.b, w.pair("p"), w.pair("q"))
    return w.done(w.b.d(*pr), program)


def third_proportional(a, b, program=False):
    """b^2 / a."""
    w = _Work({}, [("a", a), ("b", b)])
    pr = K.third(w.b, w.pair("a"), w.pair("b"))
    return w.done(w.b.d(*pr), program)


def fourth_proportional(a, b, c, program=False):
    """b c / a."""
    w = _Work({}, [("a", a), ("b", b), ("c", c)])
    pr = K.fourth(w.b, w.pair("a"), w.pair("b"), w.pair("c"))
    return w.done(w.b.d(*pr), program)


def bisect_angle(spec, variant=1, program=False):
    """Point on the arc of the sector (radius |AB|) halving the angle."""
    Bs, As, Cs = _angle(spec).triple()
    w = _Work({"B": Bs, "A": As, "D": Cs})
    b = w.b
    K._check_distinct(b, "A", "B")
    K._check_distinct(b, "A", "D")
    D = "D"
    if abs(b.d("A", "D") - b.d("A", "B")) > b.eps:
        D = K.lay(b, "A", "D", ("A", "B"))
    if b.d("B", D) <= 10 * b.eps:
        raise DegenerateInput("sector has no opening")
    return w.done(b.pt(K.bisect_sector(b, "A", "B", D, variant)), program)


def circumcenter(A, B, C, program=False):
    w = _Work({"A": A, "B": B, "C": C})
    return w.done(w.b.pt(K.circumcenter(w.b, "A", "B", "C")), program)


def bisect_arc(A, B, k, branch=None, program=False):
    """Midpoint of an arc AB of k: the minor arc, or for branch given, the arc
    on that side of A -> B."""
    c, _ = _on_circle_point(k)
    w = _Work({"A": A, "B": B, "O": c})
    b = w.b
    for n in "AB":
        if abs(b.d(n, "O") - k.radius) > 1e3 * b.eps:
            raise PointsNotOnCircle(f"{n} is not on the circle")
    K._check_distinct(b, "A", "B")
    pa, pb = b.pt("A"), b.pt("B")
    if branch is None:
        m = Point((pa.x + pb.x) / 2, (pa.y + pb.y) / 2)
        key = lambda p: distance(p, m)  # noqa: E731
    else:
        s = 1.0 if branch is L else -1.0
        key = lambda p: -s * cross(pa, pb, p)  # noqa: E731
    return w.done(b.pt(K.arc_mid(b, "O", "A", "B", key)), program)


def golden_section(A, C, program=False):
    """G on segment AC with |AC| |GA| = |GC|^2, so |GC| is the larger part."""
    w = _Work({"A": A, "C": C})
    K._check_distinct(w.b, "A", "C")
    return w.done(w.b.pt(part1.golden(w.b, "A", "C")), program)


def pentagon_side(k, program=False):
    c, on = _on_circle_point(k)
    w = _Work({"A": c, "P": on})
    v1 = part1.pentagon(w.b, "A", "P")[0]
    return w.done(w.b.d("P", v1), program)


def pentadecagon_side(k, program=False):
    c, on = _on_circle_point(k)
    r = _catalog("P1.45", {"A": c, "L": on}, program=program)
    outs = r[0] if program else r
    side = distance(outs["B"], outs["K"])
    return (side, r[1]) if program else side


def parallel_through(A, B, C, program=False):
    """D = A + B - C, so AD is parallel to CB."""
    _distinct(Point(*B), Point(*C), DegenerateLine)
    w = _Work({"A": A, "B": B, "C": C})
    return w.done(w.b.pt(K.parallel_through(w.b, "A", "B", "C")), program)


def resection(A, B, C, alpha, beta, branch=R, program=False):
    """Observer E seeing AB under alpha and BC under beta.  branch (or a pair
    of branches) gives E's side of A -> B and of B -> C."""
    a1, a2 = _angle(alpha).measure(), _angle(beta).measure()
    for a in (a1, a2):
        if not (0.0 < a < math.pi):
            raise DegenerateInput("angles must lie in (0, pi)")
    br1, br2 = branch if isinstance(branch, tuple) else (branch, branch)
    pts = {"A": A, "B": B, "C": C}
    for p, q in (("A", "B"), ("B", "C"), ("A", "C")):
        _distinct(Point(*pts[p]), Point(*pts[q]))
    # the two observed arcs FG, GH laid on a unit reference circle
    arcs = {"F": Point(math.cos(-a1), math.sin(-a1)), "G": Point(1.0, 0.0),
            "H": Point(math.cos(a2), math.sin(a2))}
    w = _Work(pts, extra=arcs)
    try:
        E = part2.resect(w.b, "A", "B", "C", "F", "G", "H", br1, br2)
    except (DegenerateInput, LengthOutOfRange) as e:
        raise DangerCircle(f"capacity circles degenerate: {e}") from e
    return w.done(w.b.pt(E), program)


def perspective_image(A, V, T, S, h, program=False):
    """(GH, HI): offset along the glass base from the foot G of A and the
    image height, for observer S at eye height h."""
    _distinct(Point(*V), Point(*T), DegenerateLine)
    S = Point(*S)
    w = _Work({"A": A, "V": V, "T": T, "S": S, "Z": Point(S.x + float(h), S.y)})
    b = w.b
    if not h > b.eps:
        raise NonpositiveLength("eye height must be positive")
    Hh, I, _, _ = part2.image(b, "A", "V", "T", "S", "Z")
    if b.d(Hh, I) <= b.eps:
        return w.done((0.0, 0.0), program)
    G = K.foot(b, "A", "V", "T")
    return w.done((b.d(G, Hh), b.d(Hh, I)), program)


def run_proposition(pid, inputs, hints=None, program=False):
    """Named outputs of any supported catalog entry ('P1.7', 'P1.15.2', ...)."""
    pts = {k: Point(*v) for k, v in inputs.items()}
    return _catalog(pid, pts, hints, program)


__all__ = ["AngleSpec", "equilateral_apex", "antipode", "extend_n", "copy_angle", "midpoint",
           "perpendicular_foot", "tangent_point", "perpendicular_at_endpoint", "extend_by",
           "cut_off", "divide_n", "geometric_mean", "third_proportional",
           "fourth_proportional", "bisect_angle", "circumcenter", "bisect_arc",
           "golden_section", "pentagon_side", "pentadecagon_side", "parallel_through",
           "resection", "perspective_image", "run_proposition", "Circle", "ObserverOnGlass"]
