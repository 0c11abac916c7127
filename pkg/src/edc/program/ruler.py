"""Straightedge primitives, used only when executing ruler programs."""

import math
from typing import NamedTuple

from ..geom import (Branch, Circle, CoincidentLines, CollinearPoints, DegenerateLine,
                    LineMissesCircle, ParallelLines, Point, distance)


class Line(NamedTuple):
    p: Point
    q: Point


def make_line(p, q, tol):
    if distance(p, q) <= tol.eps:
        raise DegenerateLine(f"line through coincident points {p}")
    return Line(Point(*p), Point(*q))


def meet_ll(l1, l2, tol):
    (x1, y1), (x2, y2) = l1
    (x3, y3), (x4, y4) = l2
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    den = dx1 * dy2 - dy1 * dx2
    n1, n2 = math.hypot(dx1, dy1), math.hypot(dx2, dy2)
    if abs(den) <= tol.eps_rel * n1 * n2:
        # same line if the second line's point sits on the first
        off = abs(dx1 * (y3 - y1) - dy1 * (x3 - x1)) / n1
        if off <= tol.eps:
            raise CoincidentLines("lines coincide")
        raise ParallelLines("lines are parallel")
    t = ((x3 - x1) * dy2 - (y3 - y1) * dx2) / den
    return Point(x1 + t * dx1, y1 + t * dy1)


def meet_lc(line, circle, branch, tol):
    """Left is the meet further along p -> q, Right the one behind."""
    (px, py), (qx, qy) = line
    (cx, cy), r = circle
    dx, dy = qx - px, qy - py
    n = math.hypot(dx, dy)
    ux, uy = dx / n, dy / n
    t0 = (cx - px) * ux + (cy - py) * uy
    fx, fy = px + t0 * ux, py + t0 * uy
    off = math.hypot(cx - fx, cy - fy)
    if off > r + tol.eps:
        raise LineMissesCircle(f"line misses circle by {off - r!r}")
    h = math.sqrt(max(0.0, r * r - off * off))
    if branch is Branch.LEFT:
        return Point(fx + h * ux, fy + h * uy)
    return Point(fx - h * ux, fy - h * uy)


def circle_on_diameter(p, q, tol):
    if distance(p, q) <= tol.eps:
        raise DegenerateLine("diameter endpoints coincide")
    c = Point((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
    return Circle(c, distance(c, p))


def circle_through(a, b, c, tol):
    ax, ay = a
    bx, by = b[0] - ax, b[1] - ay
    cx, cy = c[0] - ax, c[1] - ay
    d = 2 * (bx * cy - by * cx)
    if abs(d) <= tol.eps * max(1.0, math.hypot(bx, by), math.hypot(cx, cy)):
        raise CollinearPoints("points are collinear")
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(ax + ux, ay + uy)
    return Circle(center, math.hypot(ux, uy))
