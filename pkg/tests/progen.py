"""Random well-formed DSL programs for round-trip tests.  They only need to
be structurally valid; nothing here is executed."""

from edc.geom import Branch, Point
from edc.program.ir import (CircleDiam, CircleThru, Collinear, DistEqual, DrawCircle, DrawLine,
                            Given, Intersect, MacroCall, MeetLC, MeetLL, OnCircle, Program)

MACROS = (("P1.1", 2, 1), ("P1.15", 2, 1), ("P1.17", 4, 1), ("P1.39", 2, 1))


def random_program(rng, ruler=False, max_steps=25):
    pts, circles, lines = [], [], []
    n = 0

    def name(tag):
        nonlocal n
        n += 1
        return f"{tag}{n}"

    def coord():
        # mix of integers and arbitrary doubles, both signs
        if rng.random() < 0.4:
            return float(rng.integers(-50, 50))
        return float(rng.normal(0, 10.0 ** int(rng.integers(-3, 4))))

    inputs = []
    for _ in range(int(rng.integers(2, 6))):
        g = name("G")
        inputs.append(Given(g, Point(coord(), coord()) if rng.random() < 0.9 else None))
        pts.append(g)
    pick = lambda xs: xs[int(rng.integers(len(xs)))]
    steps = []
    for _ in range(int(rng.integers(0, max_steps))):
        kinds = ["circle"] * 3 + (["meet"] * 3 if len(circles) >= 2 else []) + ["use"]
        if ruler:
            kinds += ["line", "diam", "thru"] + (["meetll"] if len(lines) >= 2 else [])
            kinds += ["meetlc"] if lines and circles else []
        kind = pick(kinds)
        if kind == "circle":
            s = DrawCircle(name("k"), pick(pts), pick(pts), pick(pts))
            circles.append(s.out)
        elif kind == "meet":
            s = Intersect(name("P"), pick(circles), pick(circles), pick(list(Branch)))
            pts.append(s.out)
        elif kind == "use":
            prop, nin, nout = MACROS[int(rng.integers(len(MACROS)))]
            outs = tuple(name("M") for _ in range(nout))
            s = MacroCall(prop, tuple(pick(pts) for _ in range(nin)), outs)
            pts.extend(outs)
        elif kind == "line":
            s = DrawLine(name("l"), pick(pts), pick(pts))
            lines.append(s.out)
        elif kind == "diam":
            s = CircleDiam(name("k"), pick(pts), pick(pts))
            circles.append(s.out)
        elif kind == "thru":
            s = CircleThru(name("k"), pick(pts), pick(pts), pick(pts))
            circles.append(s.out)
        elif kind == "meetll":
            s = MeetLL(name("X"), pick(lines), pick(lines))
            pts.append(s.out)
        else:
            s = MeetLC(name("X"), pick(lines), pick(circles), pick(list(Branch)))
            pts.append(s.out)
        steps.append(s)
    asserts = []
    for _ in range(int(rng.integers(0, 3))):
        r = rng.random()
        if r < 0.4:
            asserts.append(Collinear(pick(pts), pick(pts), pick(pts)))
        elif r < 0.8 or not circles:
            asserts.append(DistEqual(pick(pts), pick(pts), pick(pts), pick(pts)))
        else:
            asserts.append(OnCircle(pick(pts), pick(circles)))
    return Program(tuple(inputs), tuple(steps), tuple(asserts), ruler)
