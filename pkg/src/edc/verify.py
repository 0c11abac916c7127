"""Seeded randomized verification of the catalog and of the transpiler.

Every supported proposition is run on random instances drawn by its own
sampler; the constructed outputs are compared with the closed-form oracle.
One report per proposition covers all of its variants.
"""

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .geom import (Branch, Circle, GeometryError, Point, Tolerance, circle_circle_intersect,
                   distance)
from .program import executor as X
from .program.ir import (CircleDiam, CircleThru, DrawCircle, DrawLine, Given, Intersect,
                         MeetLC, MeetLL, Program, count_steps)
from .propositions import catalog as C
from .propositions.catalog import Unsupported

THRESHOLD = 1e-6
RNG_NAME = "numpy PCG64 via SeedSequence(seed, spawn_key=(part, number))"
TRANSPILER = "transpiler"
MAX_FAILURES = 10


@dataclass
class VerificationReport:
    prop: str
    samples: int
    passes: int
    max_rel_error: float
    step_metrics: dict
    seed: int
    failures: list = field(default_factory=list)   # (input, expected, got, error)
    rng: str = RNG_NAME

    @property
    def ok(self):
        return self.passes == self.samples

    def record(self):
        """One line of JSON; a pure function of the report."""
        d = asdict(self)
        d["ok"] = self.ok
        return json.dumps(d, sort_keys=True, default=_plain)


def _plain(v):
    if isinstance(v, Point):
        return [v.x, v.y]
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return str(v)


def rel_error(got, exp, scale):
    """|got - exp| / max(1, |exp|, scale) for points or lengths."""
    if isinstance(exp, tuple):
        g = math.hypot(got[0] - exp[0], got[1] - exp[1])
        m = max(1.0, math.hypot(exp[0], exp[1]), scale)
    else:
        g = abs(got - exp)
        m = max(1.0, abs(exp), scale)
    return g / m


def _scale(pts):
    return max([abs(c) for p in pts.values() for c in p] + [1.0])


def sample_instance(pid, rng):
    """(points, hints) for one random instance of a supported proposition."""
    e, _ = C.resolve(pid)
    return e.split_sample(rng)


def oracle(pid, inputs, hints=None):
    e, _ = C.resolve(pid)
    return e.expected(inputs, hints)


def _variants(pid):
    e, v = C.resolve(pid)
    if C.parse_id(pid)[1] is not None:
        return e, (v,)
    return e, tuple(x for x in e.variants if x not in e.unsupported_variants)


def check_instance(e, variant, pts, hints, eps_rel=1e-9):
    """(expected, got, worst relative error) of one variant on one instance;
    got is an error string when the construction fails."""
    exp = e.expected(pts, hints)
    tol = Tolerance.for_points(pts.values(), eps_rel)
    try:
        _, outs = C.construct(f"{e.id}.{variant}", pts, hints, tol)
    except GeometryError as ex:
        return exp, f"{type(ex).__name__}: {ex}", math.inf
    got = e.measured(pts, outs)
    scale = _scale(pts)
    worst = max(rel_error(got[k], exp[k], scale) for k in exp)
    return exp, got, worst


def metrics_for(e, variants):
    pts, hints = e.reference()
    out = {}
    for v in variants:
        b, _ = C.construct(f"{e.id}.{v}", pts, hints)
        out[str(v)] = count_steps(b.steps).as_dict()
    return out


def verify(pid, n=1000, seed=0, tol=THRESHOLD, eps_rel=1e-9):
    """Run n sampled instances of every supported variant of pid (or only the
    named variant) and compare with the oracle at relative error tol."""
    e, variants = _variants(pid)
    passes, worst, failures = 0, 0.0, []
    for i in range(n):
        pts, hints = e.split_sample(C.rng_for(e, seed, i))
        ok = True
        for v in variants:
            exp, got, err = check_instance(e, v, pts, hints, eps_rel)
            if err > tol or not math.isfinite(err):
                ok = False
                if len(failures) < MAX_FAILURES:
                    failures.append(({"sample": i, "variant": v, **pts}, exp, got,
                                     err if math.isfinite(err) else None))
            if math.isfinite(err):
                worst = max(worst, err)
            else:
                worst = math.inf
        passes += ok
    name = e.id if len(variants) > 1 or C.parse_id(pid)[1] is None else f"{e.id}.{variants[0]}"
    return VerificationReport(name, n, passes, worst, metrics_for(e, variants), seed, failures)


# -- transpiler differential suite ---------------------------------------------

class _Gen:
    """Random well-conditioned ruler program built one step at a time."""

    BOX = 10.0

    def __init__(self, rng):
        self.rng = rng
        self.pts = {}        # name -> Point
        self.circles = {}    # name -> (center Point, radius)
        self.lines = {}      # name -> (p name, q name)
        self.inputs, self.steps = [], []
        self.k = 0

    def name(self, tag):
        self.k += 1
        return f"{tag}{self.k}"

    def pick(self, d, n=1):
        keys = sorted(d)
        idx = self.rng.choice(len(keys), size=n, replace=False)
        return [keys[i] for i in idx]

    def fits(self, p, others=None):
        if max(abs(p.x), abs(p.y)) > self.BOX:
            return False
        return all(distance(p, q) >= 0.3 for q in (others or self.pts).values())

    def given(self):
        while True:
            p = Point(*np.round(self.rng.uniform(-5, 5, 2), 6))
            if self.fits(p):
                n = self.name("P")
                self.pts[n] = p
                self.inputs.append(Given(n, p))
                return

    def oriented(self, a, b):
        """(a, b) as an existing line through them is directed, if there is one;
        meet branches follow the line's own direction."""
        for p, q in self.lines.values():
            if {p, q} == {a, b}:
                return p, q
        return a, b

    def line(self, a, b):
        for name, (p, q) in self.lines.items():
            if {p, q} == {a, b}:
                return name
        n = self.name("l")
        self.lines[n] = (a, b)
        self.steps.append(DrawLine(n, a, b))
        return n

    def circle(self):
        r = self.rng.random()
        if r < 0.4:
            c, a, b = self.pick(self.pts, 3)
            rad = distance(self.pts[a], self.pts[b])
            if rad < 0.5:
                return None
            n = self.name("k")
            self.steps.append(DrawCircle(n, c, a, b))
            self.circles[n] = (self.pts[c], rad)
        elif r < 0.7:
            a, b = self.pick(self.pts, 2)
            pa, pb = self.pts[a], self.pts[b]
            n = self.name("k")
            self.steps.append(CircleDiam(n, a, b))
            self.circles[n] = (Point((pa.x + pb.x) / 2, (pa.y + pb.y) / 2), distance(pa, pb) / 2)
        else:
            a, b, c = self.pick(self.pts, 3)
            pa, pb, pc = (self.pts[x] for x in (a, b, c))
            area2 = abs((pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x))
            if area2 < 0.3 * max(distance(pa, pb), distance(pa, pc), distance(pb, pc)) ** 2:
                return None
            d = 2 * ((pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x))
            b2 = (pb.x - pa.x) ** 2 + (pb.y - pa.y) ** 2
            c2 = (pc.x - pa.x) ** 2 + (pc.y - pa.y) ** 2
            ux = ((pc.y - pa.y) * b2 - (pb.y - pa.y) * c2) / d
            uy = ((pb.x - pa.x) * c2 - (pc.x - pa.x) * b2) / d
            if math.hypot(ux, uy) > self.BOX:
                return None
            n = self.name("k")
            self.steps.append(CircleThru(n, a, b, c))
            self.circles[n] = (Point(pa.x + ux, pa.y + uy), math.hypot(ux, uy))
        return n

    def add_point(self, name, p):
        self.pts[name] = p

    def meet_ll(self):
        a, b, c, d = self.pick(self.pts, 4)
        P = [self.pts[x] for x in (a, b, c, d)]
        u = (P[1].x - P[0].x, P[1].y - P[0].y)
        v = (P[3].x - P[2].x, P[3].y - P[2].y)
        den = u[0] * v[1] - u[1] * v[0]
        if abs(den) < 0.3 * math.hypot(*u) * math.hypot(*v):
            return False
        t = ((P[2].x - P[0].x) * v[1] - (P[2].y - P[0].y) * v[0]) / den
        x = Point(P[0].x + t * u[0], P[0].y + t * u[1])
        if not self.fits(x):
            return False
        l1, l2 = self.line(a, b), self.line(c, d)
        n = self.name("X")
        self.steps.append(MeetLL(n, l1, l2))
        self.add_point(n, x)
        return True

    def meet_lc(self, central):
        if not self.circles:
            return False
        k = self.pick(self.circles)[0]
        ctr, r = self.circles[k]
        if central:
            # a line through the circle's center: its center must be a named point
            cands = [n for n, p in self.pts.items() if distance(p, ctr) <= 1e-12 * max(1, r)]
            step = next((s for s in self.steps if getattr(s, "out", None) == k), None)
            if isinstance(step, DrawCircle):
                cands.append(step.center)
            if not cands:
                return False
            a = cands[0]
            b = self.pick({n: 0 for n in self.pts if n != a})[0]
        else:
            a, b = self.pick(self.pts, 2)
        a, b = self.oriented(a, b)
        pa, pb = self.pts[a], self.pts[b]
        if distance(pa, pb) < 0.5:
            return False
        ux, uy = (pb.x - pa.x) / distance(pa, pb), (pb.y - pa.y) / distance(pa, pb)
        t0 = (ctr.x - pa.x) * ux + (ctr.y - pa.y) * uy
        fx, fy = pa.x + t0 * ux, pa.y + t0 * uy
        off = math.hypot(ctr.x - fx, ctr.y - fy)
        if not central and (off < 0.2 * r or off > 0.85 * r):
            return False
        h = math.sqrt(max(0.0, r * r - off * off))
        left = bool(self.rng.random() < 0.5)
        x = Point(fx + h * ux, fy + h * uy) if left else Point(fx - h * ux, fy - h * uy)
        if not self.fits(x):
            return False
        ln = self.line(a, b)
        n = self.name("X")
        self.steps.append(MeetLC(n, ln, k, Branch.LEFT if left else Branch.RIGHT))
        self.add_point(n, x)
        return True

    def meet_cc(self):
        if len(self.circles) < 2:
            return False
        k1, k2 = self.pick(self.circles, 2)
        (c1, r1), (c2, r2) = self.circles[k1], self.circles[k2]
        d = distance(c1, c2)
        if d < 0.3 or not (abs(r1 - r2) + 0.2 * min(r1, r2) < d < r1 + r2 - 0.2 * min(r1, r2)):
            return False
        br = Branch.LEFT if self.rng.random() < 0.5 else Branch.RIGHT
        x = circle_circle_intersect(Circle(c1, r1), Circle(c2, r2), br)
        if not self.fits(x):
            return False
        n = self.name("X")
        self.steps.append(Intersect(n, k1, k2, br))
        self.add_point(n, x)
        return True


def random_ruler_program(rng, depth=10):
    """A ruler program with up to depth point-producing steps, mixing
    line-line, line-circle (central and not), diameter and three-point
    circles with plain circle meets."""
    g = _Gen(rng)
    for _ in range(int(rng.integers(4, 7))):
        g.given()
    made, tries = 0, 0
    target = int(rng.integers(1, depth + 1))
    while made < target and tries < 400:
        tries += 1
        kind = rng.choice(["ll", "lc", "lcc", "cc", "circle"], p=[0.3, 0.2, 0.15, 0.15, 0.2])
        if kind == "circle" or (kind in ("lc", "lcc", "cc") and len(g.circles) < 2):
            g.circle()
            continue
        ok = {"ll": g.meet_ll, "cc": g.meet_cc,
              "lc": lambda: g.meet_lc(False), "lcc": lambda: g.meet_lc(True)}[kind]()
        made += bool(ok)
    return Program(tuple(g.inputs), tuple(g.steps), (), True)


def differential(rp, tol=THRESHOLD):
    """(worst relative error over named points, compiled program)."""
    from .transpiler import compile as compile_rc
    cp = compile_rc(rp)
    t1, t2 = X.execute(rp), X.execute(cp)
    scale = _scale(rp.defaults())
    worst = 0.0
    for n, v in t1.points().items():
        worst = max(worst, rel_error(t2.values[n], tuple(v), scale))
    return worst, cp


def verify_transpiler(n=100, seed=0, tol=THRESHOLD, depth=10):
    passes, worst, failures = 0, 0.0, []
    totals = {"ruler_steps_in": 0, "circles": 0, "intersections": 0, "ruler_steps": 0}
    for i in range(n):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(0, i))))
        rp = random_ruler_program(rng, depth)
        try:
            err, cp = differential(rp, tol)
            m = count_steps(cp.steps)
            totals["ruler_steps_in"] += rp.ruler_step_count()
            for k, v in m.as_dict().items():
                totals[k] += v
        except (GeometryError, X.StepError) as ex:
            err, cp = math.inf, None
            if len(failures) < MAX_FAILURES:
                failures.append(({"sample": i}, None, f"{type(ex).__name__}: {ex}", None))
        if err <= tol:
            passes += 1
        elif math.isfinite(err) and len(failures) < MAX_FAILURES:
            failures.append(({"sample": i}, None, None, err))
        worst = max(worst, err)
    return VerificationReport(TRANSPILER, n, passes, worst, totals, seed, failures)


# -- whole catalog ---------------------------------------------------------------

def supported_ids():
    return [e.id for e in C.entries() if e.status != C.UNSUPPORTED]


def _job(args):
    pid, n, seed, tol, eps_rel = args
    if pid == TRANSPILER:
        return verify_transpiler(min(n, 100), seed, tol)
    return verify(pid, n, seed, tol, eps_rel)


def default_jobs():
    return os.cpu_count() or 1


def verify_all(n=1000, seed=0, tol=THRESHOLD, eps_rel=1e-9, jobs=None, props=None):
    """Reports for every supported entry (in catalog order) and the
    transpiler suite, plus a summary dict.  Work may run in several
    processes; the order of reports never depends on scheduling."""
    ids = list(props) if props is not None else supported_ids() + [TRANSPILER]
    work = [(pid, n, seed, tol, eps_rel) for pid in ids]
    jobs = jobs or default_jobs()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_job, work, chunksize=1))
    else:
        reports = [_job(w) for w in work]
    return reports, summarize(reports)


def summarize(reports):
    unsupported = []
    for e in C.entries():
        if e.status == C.UNSUPPORTED:
            unsupported.append((e.id, e.reason))
        for v, why in sorted(e.unsupported_variants.items()):
            unsupported.append((f"{e.id}.{v}", why))
    failed = [r.prop for r in reports if not r.ok]
    return {"reports": len(reports), "passed": len(reports) - len(failed), "failed": failed,
            "unsupported": unsupported, "ok": not failed}


def table(reports, summary):
    """Human-readable lines (each starting with '#')."""
    out = [f"# {'prop':<12}{'pass':>12}  {'max rel err':>12}"]
    for r in reports:
        out.append(f"# {r.prop:<12}{r.passes:>6}/{r.samples:<5}  {r.max_rel_error:>12.3e}"
                   f"{'' if r.ok else '  FAIL'}")
    out.append(f"# {summary['passed']}/{summary['reports']} reports passed")
    for pid, why in summary["unsupported"]:
        out.append(f"# unsupported {pid}: {why}")
    return out


__all__ = ["VerificationReport", "sample_instance", "oracle", "verify", "verify_all",
           "verify_transpiler", "random_ruler_program", "differential", "rel_error",
           "summarize", "table", "Unsupported"]
