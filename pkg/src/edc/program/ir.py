"""Step-based intermediate representation for construction programs."""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..geom import Branch, Point


class PurityViolation(Exception):
    """A ruler step reached a compass-only program."""


class CatalogError(Exception):
    """Unknown, unsupported or mis-called proposition macro."""


@dataclass(frozen=True)
class Given:
    name: str
    at: Optional[Point] = None


# compass steps
@dataclass(frozen=True)
class DrawCircle:
    out: str
    center: str
    r1: str
    r2: str


@dataclass(frozen=True)
class Intersect:
    out: str
    c1: str
    c2: str
    branch: Branch


@dataclass(frozen=True)
class MacroCall:
    prop: str
    args: Tuple[str, ...]
    outs: Tuple[str, ...]


# ruler steps (legal only in ruler programs)
@dataclass(frozen=True)
class DrawLine:
    out: str
    p: str
    q: str


@dataclass(frozen=True)
class MeetLL:
    out: str
    l1: str
    l2: str


@dataclass(frozen=True)
class MeetLC:
    out: str
    line: str
    circle: str
    branch: Branch


@dataclass(frozen=True)
class CircleDiam:
    out: str
    p: str
    q: str


@dataclass(frozen=True)
class CircleThru:
    out: str
    p: str
    q: str
    r: str


# assertions
@dataclass(frozen=True)
class Collinear:
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class DistEqual:
    a: str
    b: str
    c: str
    d: str


@dataclass(frozen=True)
class OnCircle:
    p: str
    k: str


COMPASS_STEPS = (DrawCircle, Intersect, MacroCall)
RULER_STEPS = (DrawLine, MeetLL, MeetLC, CircleDiam, CircleThru)


def is_ruler_step(step):
    return isinstance(step, RULER_STEPS)


def step_outputs(step):
    if isinstance(step, MacroCall):
        return step.outs
    return (step.out,)


def step_refs(step):
    """Names a step reads, in order."""
    if isinstance(step, DrawCircle):
        return (step.center, step.r1, step.r2)
    if isinstance(step, Intersect):
        return (step.c1, step.c2)
    if isinstance(step, MacroCall):
        return step.args
    if isinstance(step, DrawLine):
        return (step.p, step.q)
    if isinstance(step, MeetLL):
        return (step.l1, step.l2)
    if isinstance(step, MeetLC):
        return (step.line, step.circle)
    if isinstance(step, CircleDiam):
        return (step.p, step.q)
    if isinstance(step, CircleThru):
        return (step.p, step.q, step.r)
    raise TypeError(f"not a step: {step!r}")


def assertion_refs(a):
    if isinstance(a, Collinear):
        return (a.a, a.b, a.c)
    if isinstance(a, DistEqual):
        return (a.a, a.b, a.c, a.d)
    return (a.p, a.k)


@dataclass(frozen=True)
class Program:
    inputs: Tuple[Given, ...] = ()
    steps: tuple = ()
    assertions: tuple = ()
    ruler: bool = False

    @property
    def input_names(self):
        return tuple(g.name for g in self.inputs)

    def defaults(self):
        return {g.name: g.at for g in self.inputs if g.at is not None}

    def ruler_step_count(self):
        return sum(1 for s in self.steps if is_ruler_step(s))

    def is_compass(self):
        return self.ruler_step_count() == 0

    def outputs(self):
        """Named points the program defines: everything except inputs and
        auxiliaries (names starting with an underscore) and non-points."""
        outs = []
        for s in self.steps:
            if isinstance(s, (DrawCircle, DrawLine, CircleDiam, CircleThru)):
                continue
            for n in step_outputs(s):
                if not n.startswith("_"):
                    outs.append(n)
        return tuple(outs)


@dataclass
class Metrics:
    circles: int = 0
    intersections: int = 0
    ruler_steps: int = 0

    def __add__(self, o):
        return Metrics(self.circles + o.circles, self.intersections + o.intersections,
                       self.ruler_steps + o.ruler_steps)

    def as_dict(self):
        return {"circles": self.circles, "intersections": self.intersections,
                "ruler_steps": self.ruler_steps}


def count_steps(steps):
    m = Metrics()
    for s in steps:
        if isinstance(s, DrawCircle):
            m.circles += 1
        elif isinstance(s, Intersect):
            m.intersections += 1
        elif is_ruler_step(s):
            m.ruler_steps += 1
    return m
