"""Random instance helpers.  Coordinates stay inside a 20 x 20 box around the
origin; guards keep instances away from tangencies and near-parallel cases."""

import math

from ..geom import Point

BOX = 10.0


class Rejected(Exception):
    pass


def retry(fn, tries=2000):
    """Call fn(rng) until it returns a dict instead of None."""
    def wrapped(rng):
        for _ in range(tries):
            out = fn(rng)
            if out is not None:
                return out
        raise Rejected(f"{fn.__name__}: no acceptable instance")
    wrapped.__name__ = fn.__name__
    return wrapped


def pt(rng, half=6.0):
    x, y = rng.uniform(-half, half, 2)
    return Point(float(x), float(y))


def polar(c, r, ang):
    return Point(c.x + r * math.cos(ang), c.y + r * math.sin(ang))


def angle(rng):
    return float(rng.uniform(0.0, 2 * math.pi))


def u(rng, lo, hi):
    return float(rng.uniform(lo, hi))


def dist(p, q):
    return math.hypot(p.x - q.x, p.y - q.y)


def cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def inside(*pts, half=BOX):
    return all(abs(p.x) <= half and abs(p.y) <= half for p in pts)


def seg(rng, lo=1.0, hi=8.0, half=5.0):
    a = pt(rng, half)
    return a, polar(a, u(rng, lo, hi), angle(rng))


def along(a, b, t):
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def at_dist(a, b, d):
    """Point on ray a -> b at distance d from a."""
    return along(a, b, d / dist(a, b))


def turn(c, p, ang):
    dx, dy = p.x - c.x, p.y - c.y
    ca, sa = math.cos(ang), math.sin(ang)
    return Point(c.x + ca * dx - sa * dy, c.y + sa * dx + ca * dy)


def angles_ok(a, b, c, lo=0.3):
    """All angles of triangle abc at least lo radians."""
    for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
        v1 = (q.x - p.x, q.y - p.y)
        v2 = (r.x - p.x, r.y - p.y)
        n = math.hypot(*v1) * math.hypot(*v2)
        if n == 0:
            return False
        cosv = max(-1.0, min(1.0, (v1[0] * v2[0] + v1[1] * v2[1]) / n))
        if math.acos(cosv) < lo:
            return False
    return True


def triangle(rng, lo=0.3, smin=1.0, half=6.0):
    for _ in range(1000):
        a, b, c = pt(rng, half), pt(rng, half), pt(rng, half)
        if min(dist(a, b), dist(b, c), dist(a, c)) >= smin and angles_ok(a, b, c, lo):
            return a, b, c
    raise Rejected("triangle")


def angle_triple(rng, lo=0.25, hi=math.pi - 0.25):
    """Three points whose angle at the middle one lies in [lo, hi]."""
    v = pt(rng, 5.0)
    a0 = angle(rng)
    th = u(rng, lo, hi) * (1 if rng.random() < 0.5 else -1)
    return polar(v, u(rng, 1.0, 4.0), a0), v, polar(v, u(rng, 1.0, 4.0), a0 + th)


def side(rng):
    return "left" if rng.random() < 0.5 else "right"
