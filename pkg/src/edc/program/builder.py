"""Recording evaluator: every construction is built through a Builder, which
evaluates each step eagerly and records it so the result can be replayed,
printed as DSL text or counted."""

import math

from ..geom import (Branch, Circle, GeometryError, Point, ZeroRadius, cross, distance,
                    intersect_both)
from . import ruler as R
from .ir import (CircleDiam, CircleThru, DrawCircle, DrawLine, Given, Intersect, MeetLC,
                 MeetLL, Program, PurityViolation, step_refs)


_tuple = tuple.__new__


class Builder:
    def __init__(self, tol, ruler=False, reserved=()):
        self.tol = tol
        self.ruler = ruler
        self.reserved = frozenset(reserved)   # names fresh() must not hand out
        self.values = {}
        self.inputs = []
        self._raw = []          # ("c", out, center, r1, r2) | ("m", out, c1, c2, branch) | step
        self._steps = None
        self.circle_defs = {}   # circle name -> (center, r1, r2)
        self._circle_key = {}   # (center, r1, r2) with r1 <= r2 -> circle name
        self._counter = 0

    # -- naming ----------------------------------------------------------
    def fresh(self, tag="p"):
        self._counter += 1
        n = f"_{tag}{self._counter}"
        if n in self.values or n in self.reserved:
            return self.fresh(tag)
        return n

    def _define(self, name, value, step):
        if name in self.values:
            raise ValueError(f"name defined twice: {name}")
        self.values[name] = value
        if step is not None:
            self._raw.append(step)
        return name

    @property
    def steps(self):
        """Recorded steps as IR objects."""
        if self._steps is None or len(self._steps) != len(self._raw):
            out = []
            for r in self._raw:
                if type(r) is tuple:
                    r = (DrawCircle(*r[1:]) if r[0] == "c" else Intersect(*r[1:]))
                out.append(r)
            self._steps = out
        return self._steps

    # -- access ----------------------------------------------------------
    def given(self, name, at):
        at = Point(float(at[0]), float(at[1]))
        self.inputs.append(Given(name, at))
        return self._define(name, at, None)

    def pt(self, name):
        return self.values[name]

    def d(self, a, b):
        p, q = self.values[a], self.values[b]
        return math.hypot(q[0] - p[0], q[1] - p[1])

    @property
    def eps(self):
        return self.tol.eps

    # -- compass ---------------------------------------------------------
    def circle(self, center, r1, r2, out=None):
        key = (center, r1, r2) if r1 <= r2 else (center, r2, r1)
        keys = self._circle_key
        if out is None:
            name = keys.get(key)
            if name is not None:
                return name
        vals = self.values
        p, q = vals[r1], vals[r2]
        r = math.hypot(p[0] - q[0], p[1] - q[1])
        if r <= self.tol._eps:
            raise ZeroRadius(f"radius {r1}{r2} vanishes")
        name = out or self.fresh("k")
        if name in vals:
            raise ValueError(f"name defined twice: {name}")
        vals[name] = _tuple(Circle, (vals[center], r))
        self._raw.append(("c", name, center, r1, r2))
        self.circle_defs[name] = (center, r1, r2)
        keys.setdefault(key, name)
        return name

    def cc(self, center, through):
        """Circle about center passing through a point."""
        return self.circle(center, center, through)

    def both(self, c1, c2):
        return intersect_both(self.values[c1], self.values[c2], self.tol)

    def meet(self, c1, c2, branch, out=None):
        vals = self.values
        left, right = intersect_both(vals[c1], vals[c2], self.tol)
        if out is None:
            out = self.fresh("p")
        elif out in vals:
            raise ValueError(f"name defined twice: {out}")
        vals[out] = left if branch is Branch.LEFT else right
        self._raw.append(("m", out, c1, c2, branch))
        return out

    def _put(self, p, c1, c2, branch, out):
        name = out or self.fresh("p")
        if name in self.values:
            raise ValueError(f"name defined twice: {name}")
        self.values[name] = p
        self._raw.append(("m", name, c1, c2, branch))
        return name

    def meet_by(self, c1, c2, key, out=None):
        """Take the meet minimising key(point); the choice is recorded as a
        fixed branch."""
        left, right = intersect_both(self.values[c1], self.values[c2], self.tol)
        if key(left) <= key(right):
            return self._put(left, c1, c2, Branch.LEFT, out)
        return self._put(right, c1, c2, Branch.RIGHT, out)

    def meet_other(self, c1, c2, avoid, out=None):
        a = self.values[avoid]
        return self.meet_by(c1, c2, lambda p: -distance(p, a), out)

    def meet_near(self, c1, c2, target, out=None):
        t = self.values[target] if isinstance(target, str) else target
        return self.meet_by(c1, c2, lambda p: distance(p, t), out)

    def meet_side(self, c1, c2, frm, to, side, out=None):
        """Take the meet lying on the given side of the directed line frm -> to."""
        a, b = self.values[frm], self.values[to]
        sign = 1.0 if side is Branch.LEFT else -1.0
        return self.meet_by(c1, c2, lambda p: -sign * cross(a, b, p), out)

    def mark(self, ca, ra, cb, rb, branch=Branch.LEFT, out=None):
        """Meet of circle(ca, |ra|) and circle(cb, |rb|); ra, rb are point pairs."""
        k1 = self.circle(ca, *ra)
        k2 = self.circle(cb, *rb)
        return self.meet(k1, k2, branch, out)

    # -- renaming --------------------------------------------------------
    def alias(self, src, dst):
        """Make the point src available under the name dst."""
        if src == dst:
            return dst
        raw = self._raw
        idx = next((i for i in range(len(raw) - 1, -1, -1)
                    if type(raw[i]) is tuple and raw[i][1] == src), None)
        if (src.startswith("_") and idx is not None and raw[idx][0] == "m"
                and not any(src in (r[2:] if type(r) is tuple else step_refs(r))
                            for r in raw[idx + 1:])):
            raw[idx] = ("m", dst) + raw[idx][2:]
            self._steps = None
            self.values[dst] = self.values.pop(src)
            return dst
        return self.copy(src, dst)

    def copy(self, src, dst=None):
        """Re-derive a point with two circles about other known points, taking
        the anchor pair that sees it under the widest angle."""
        p = self.values[src]
        far = 1e3 * self.tol.eps
        dirs = []
        for n, v in self.values.items():
            if type(v) is Point and n != src:
                dx, dy = v[0] - p[0], v[1] - p[1]
                r = math.hypot(dx, dy)
                if r > far:
                    dirs.append((n, dx / r, dy / r))
                    if len(dirs) == 16:
                        break
        best, anchors = 0.0, None
        for i, (a, ax, ay) in enumerate(dirs):
            for b, bx, by in dirs[i + 1:]:
                s = abs(ax * by - ay * bx)
                if s > best + 1e-12:
                    best, anchors = s, (a, b)
        if anchors is None:
            raise GeometryError(f"cannot copy {src}: no anchor points")
        a, b = anchors
        k1 = self.cc(a, src)
        k2 = self.cc(b, src)
        return self.meet_near(k1, k2, src, out=dst or self.fresh("p"))

    # -- ruler -----------------------------------------------------------
    def _ruler(self):
        if not self.ruler:
            raise PurityViolation("ruler step in a compass program")

    def line(self, p, q, out=None):
        self._ruler()
        name = out or self.fresh("l")
        return self._define(name, R.make_line(self.values[p], self.values[q], self.tol),
                            DrawLine(name, p, q))

    def meet_ll(self, l1, l2, out=None):
        self._ruler()
        name = out or self.fresh("p")
        return self._define(name, R.meet_ll(self.values[l1], self.values[l2], self.tol),
                            MeetLL(name, l1, l2))

    def meet_lc(self, line, circle, branch, out=None):
        self._ruler()
        name = out or self.fresh("p")
        v = R.meet_lc(self.values[line], self.values[circle], branch, self.tol)
        return self._define(name, v, MeetLC(name, line, circle, branch))

    def circle_diam(self, p, q, out=None):
        self._ruler()
        name = out or self.fresh("k")
        v = R.circle_on_diameter(self.values[p], self.values[q], self.tol)
        return self._define(name, v, CircleDiam(name, p, q))

    def circle_thru(self, p, q, r, out=None):
        self._ruler()
        name = out or self.fresh("k")
        v = R.circle_through(self.values[p], self.values[q], self.values[r], self.tol)
        return self._define(name, v, CircleThru(name, p, q, r))

    # -- output ----------------------------------------------------------
    def program(self, assertions=()):
        return Program(tuple(self.inputs), tuple(self.steps), tuple(assertions), self.ruler)
