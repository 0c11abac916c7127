"""Plane geometry substrate: points, circles, the circle-circle meet and the
tolerance policy shared by every other module."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class Point(NamedTuple):
    x: float
    y: float

    def __add__(self, o):
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def norm(self):
        return math.hypot(self.x, self.y)


class Circle(NamedTuple):
    center: Point
    radius: float


class Branch(Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self):
        return Branch.RIGHT if self is Branch.LEFT else Branch.LEFT


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"


LEFT = Branch.LEFT
RIGHT = Branch.RIGHT


@dataclass(frozen=True)
class Tolerance:
    eps_rel: float = 1e-9
    scale: float = 1.0

    def __post_init__(self):
        if not (self.eps_rel > 0 and math.isfinite(self.eps_rel)):
            raise ValueError("eps_rel must be positive and finite")
        if not (self.scale >= 1.0 and math.isfinite(self.scale)):
            raise ValueError("scale must be finite and >= 1")
        object.__setattr__(self, "_eps", self.eps_rel * self.scale)

    @property
    def eps(self):
        return self._eps

    @classmethod
    def for_points(cls, points, eps_rel=1e-9):
        scale = 1.0
        for p in points:
            scale = max(scale, abs(p[0]), abs(p[1]))
        return cls(eps_rel, scale)


DEFAULT_TOL = Tolerance()


class GeometryError(Exception):
    pass


class Disjoint(GeometryError):
    pass


class Concentric(GeometryError):
    pass


class Coincident(GeometryError):
    pass


class DegenerateAxis(GeometryError):
    pass


class ZeroRadius(GeometryError):
    pass


# construction-level failures raised by macros, the transpiler and the API
class DegenerateInput(GeometryError):
    pass


class DegenerateLine(DegenerateInput):
    pass


class CollinearPoints(DegenerateInput):
    pass


class LengthOutOfRange(GeometryError):
    pass


class NonpositiveLength(DegenerateInput):
    pass


class PointInsideOrOn(GeometryError):
    pass


class PointsNotOnCircle(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class CoincidentLines(ParallelLines):
    pass


class LineMissesCircle(GeometryError):
    pass


class DangerCircle(GeometryError):
    pass


class NoSolution(GeometryError):
    pass


class ObserverOnGlass(GeometryError):
    pass


def distance(p, q):
    return math.hypot(q[0] - p[0], q[1] - p[1])


def cross(o, a, b):
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def side_of(p, frm, to, tol=DEFAULT_TOL):
    d = distance(frm, to)
    if d <= tol.eps:
        raise DegenerateAxis(f"axis endpoints coincide: {frm} {to}")
    # signed distance of p from the axis line
    s = cross(frm, to, p) / d
    if abs(s) <= tol.eps:
        return Side.ON
    return Side.LEFT if s > 0 else Side.RIGHT


def _point(xy):
    return tuple.__new__(Point, xy)


def intersect_both(a, b, tol=DEFAULT_TOL, _new=tuple.__new__):
    """Both meets of circles a and b as (left, right) w.r.t. center(a) -> center(b).

    At tangency (within the band) the two points coincide.
    """
    (ax, ay), r1 = a
    (bx, by), r2 = b
    dx, dy = bx - ax, by - ay
    d = math.hypot(dx, dy)
    eps = tol._eps
    if d <= eps:
        if -eps <= r1 - r2 <= eps:
            raise Coincident(f"circles coincide: {a} {b}")
        raise Concentric(f"circles are concentric: {a} {b}")
    outer = d - r1 - r2
    inner = d - (r1 - r2 if r1 >= r2 else r2 - r1)
    if outer > eps or inner < -eps:
        raise Disjoint(f"circles do not meet: d={d!r} r1={r1!r} r2={r2!r}")
    ux, uy = dx / d, dy / d
    along = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    if outer >= -eps or inner <= eps:
        h = 0.0
    else:
        h = r1 * r1 - along * along
        h = math.sqrt(h) if h > 0.0 else 0.0
    mx, my = ax + along * ux, ay + along * uy
    return (_new(Point, (mx - h * uy, my + h * ux)), _new(Point, (mx + h * uy, my - h * ux)))


def circle_circle_intersect(a, b, branch, tol=DEFAULT_TOL):
    left, right = intersect_both(a, b, tol)
    return left if branch is Branch.LEFT else right

