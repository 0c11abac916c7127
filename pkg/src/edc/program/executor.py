"""Program execution: macro expansion through the catalog, step evaluation,
assertion checks and static step counts."""

import math
from dataclasses import dataclass

from ..geom import (Circle, GeometryError, Point, Tolerance, ZeroRadius,
                    circle_circle_intersect, cross, distance)
from .ir import (CatalogError, CircleDiam, CircleThru, Collinear, DistEqual, DrawCircle,
                 DrawLine, Intersect, MacroCall, MeetLC, MeetLL, Program, PurityViolation,
                 count_steps, is_ruler_step, step_outputs)


class UnboundInput(Exception):
    def __init__(self, name):
        super().__init__(f"input {name!r} has no binding")
        self.name = name


class StepError(Exception):
    def __init__(self, index, cause):
        super().__init__(f"step {index}: {type(cause).__name__}: {cause}")
        self.index = index
        self.cause = cause


class AssertionFailed(Exception):
    def __init__(self, predicate, error):
        super().__init__(f"assertion failed ({predicate}): measured error {error!r}")
        self.predicate = predicate
        self.error = error


@dataclass(frozen=True)
class Trace:
    values: dict        # name -> Point | Circle | Line
    log: tuple          # ((step, value), ...) in execution order, macros inlined
    program: Program    # the expanded program that produced the log
    tol: Tolerance

    def points(self):
        return {n: v for n, v in self.values.items() if isinstance(v, Point)}

    def circles(self):
        return {n: v for n, v in self.values.items() if isinstance(v, Circle)}

    def __len__(self):
        return len(self.values)


def _env_tol():
    import os
    v = os.environ.get("EDC_TOL")
    return float(v) if v else 1e-9


def resolve_bindings(program, bindings=None):
    vals = program.defaults()
    for k, v in (bindings or {}).items():
        vals[k] = Point(float(v[0]), float(v[1]))
    for g in program.inputs:
        if g.name not in vals:
            raise UnboundInput(g.name)
        if not all(math.isfinite(c) for c in vals[g.name]):
            raise ValueError(f"input {g.name} is not finite")
    return {g.name: vals[g.name] for g in program.inputs}


def _eval(step, values, tol, ruler):
    if is_ruler_step(step):
        if not ruler:
            raise PurityViolation(f"ruler step {type(step).__name__} in a compass program")
        from . import ruler as R
        if isinstance(step, DrawLine):
            return R.make_line(values[step.p], values[step.q], tol)
        if isinstance(step, MeetLL):
            return R.meet_ll(values[step.l1], values[step.l2], tol)
        if isinstance(step, MeetLC):
            return R.meet_lc(values[step.line], values[step.circle], step.branch, tol)
        if isinstance(step, CircleDiam):
            return R.circle_on_diameter(values[step.p], values[step.q], tol)
        if isinstance(step, CircleThru):
            return R.circle_through(values[step.p], values[step.q], values[step.r], tol)
    if isinstance(step, DrawCircle):
        r = distance(values[step.r1], values[step.r2])
        if r <= tol.eps:
            raise ZeroRadius(f"radius {step.r1}{step.r2} vanishes")
        return Circle(values[step.center], r)
    if isinstance(step, Intersect):
        return circle_circle_intersect(values[step.c1], values[step.c2], step.branch, tol)
    raise TypeError(f"cannot evaluate {step!r}")


def expand_macro(call, arg_points, tol, taken, tag):
    """Inline one macro call: returns the compass steps defining call.outs,
    with auxiliary names made unique against `taken`."""
    from ..propositions.catalog import expand_call
    sub_steps, params, outs = expand_call(call.prop, arg_points, tol)
    if len(outs) != len(call.outs):
        raise CatalogError(f"{call.prop} defines {len(outs)} outputs, "
                           f"{len(call.outs)} names given")
    mapping = dict(zip(params, call.args))
    mapping.update(zip(outs, call.outs))
    for s in sub_steps:
        for n in step_outputs(s):
            if n in mapping:
                continue
            new = f"_{tag}{n.lstrip('_')}"
            while new in taken:
                new = "_" + new
            mapping[n] = new
            taken.add(new)
    out = []
    for s in sub_steps:
        if isinstance(s, DrawCircle):
            out.append(DrawCircle(mapping[s.out], mapping[s.center], mapping[s.r1], mapping[s.r2]))
        elif isinstance(s, Intersect):
            out.append(Intersect(mapping[s.out], mapping[s.c1], mapping[s.c2], s.branch))
        else:
            raise PurityViolation(f"macro {call.prop} expanded to a non-compass step")
    return out


def run(program, bindings=None, tol=None):
    """Execute step by step; errors carry the index of the source step."""
    vals = resolve_bindings(program, bindings)
    if tol is None:
        tol = Tolerance.for_points(vals.values(), _env_tol())
    values = dict(vals)
    taken = set(values)
    for s in program.steps:
        taken.update(step_outputs(s))
    log, flat = [], []
    for i, step in enumerate(program.steps):
        try:
            if isinstance(step, MacroCall):
                args = [values[a] for a in step.args]
                subs = expand_macro(step, args, tol, taken, f"m{i}_")
            else:
                subs = [step]
            for s in subs:
                v = _eval(s, values, tol, program.ruler)
                values[s.out] = v
                log.append((s, v))
                flat.append(s)
        except (GeometryError, CatalogError) as e:
            raise StepError(i, e) from e
    expanded = Program(program.inputs, tuple(flat), program.assertions, program.ruler)
    trace = Trace(values, tuple(log), expanded, tol)
    check_assertions(program, values, tol)
    return trace


def check_assertions(program, values, tol):
    for a in program.assertions:
        if isinstance(a, Collinear):
            p, q, r = values[a.a], values[a.b], values[a.c]
            span = max(distance(p, q), distance(p, r), distance(q, r))
            err = 0.0 if span <= tol.eps else abs(cross(p, q, r)) / span
            pred = f"collinear {a.a} {a.b} {a.c}"
        elif isinstance(a, DistEqual):
            err = abs(distance(values[a.a], values[a.b]) - distance(values[a.c], values[a.d]))
            pred = f"dist {a.a} {a.b} == dist {a.c} {a.d}"
        else:
            k = values[a.k]
            err = abs(distance(values[a.p], k.center) - k.radius)
            pred = f"on {a.p} {a.k}"
        if err > tol.eps:
            raise AssertionFailed(pred, err)


def execute(program, bindings=None, tol=None):
    """Run a program on bindings (defaults from its given lines) and return the Trace."""
    return run(program, bindings, tol)


def expand(program, bindings=None, tol=None):
    """The program with every macro call inlined as circle/meet steps."""
    return execute(program, bindings, tol).program


def step_metrics(program, bindings=None, tol=None):
    """Static counts after macro expansion.  Macro expansions depend on the
    configuration, so they are expanded at the program's default coordinates
    (or the catalog's reference instance for unbound macro inputs)."""
    if not any(isinstance(s, MacroCall) for s in program.steps):
        return count_steps(program.steps).as_dict()
    try:
        resolve_bindings(program, bindings)
    except UnboundInput:
        from ..propositions.catalog import reference_bindings
        bindings = reference_bindings(program, bindings)
    return count_steps(expand(program, bindings, tol).steps).as_dict()

