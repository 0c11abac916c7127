"""Registry of the catalog propositions as compass-only constructions.

Each entry knows how to build itself on a Builder, how to sample a random
well-conditioned instance, and how to compute the expected result in closed
form (see oracles.py).  Entries are registered by part1.py and part2.py.
"""

import re
from dataclasses import dataclass, field

import numpy as np

from ..geom import Point, Tolerance
from ..program.builder import Builder
from ..program.ir import CatalogError


class UnknownProposition(CatalogError):
    pass


class Unsupported(CatalogError):
    pass


SUPPORTED, PARTIAL, UNSUPPORTED = "supported", "partial", "unsupported"


@dataclass(frozen=True)
class Entry:
    id: str
    title: str
    inputs: tuple
    outputs: tuple
    build: object = None           # build(b, variant, hints) -> output point names
    sample: object = None          # sample(rng) -> {name: Point} (may add hint keys)
    oracle: object = None          # oracle(inputs, hints) -> {label: Point | float}
    measure: object = None         # measure(inputs, outputs) -> {label: Point | float}
    variants: tuple = (1,)
    status: str = SUPPORTED
    reason: str = ""
    reconstructed: bool = False
    hints: dict = field(default_factory=dict)
    unsupported_variants: dict = field(default_factory=dict)
    note: str = ""

    @property
    def part(self):
        return int(self.id[1])

    @property
    def number(self):
        return int(self.id.split(".")[1])

    def split_sample(self, rng):
        """(points, hints) for one random instance."""
        raw = self.sample(rng)
        pts = {k: v for k, v in raw.items() if k in self.inputs}
        hints = dict(self.hints)
        hints.update({k: v for k, v in raw.items() if k not in self.inputs})
        return pts, hints

    def reference(self):
        """Deterministic instance used for static step counts."""
        return self.split_sample(rng_for(self, 0))

    def expected(self, pts, hints=None):
        h = dict(self.hints)
        h.update(hints or {})
        return self.oracle(pts, h)

    def measured(self, pts, outs):
        if self.measure is None:
            return dict(outs)
        return self.measure(pts, outs)


REGISTRY = {}


def register(entry):
    if entry.id in REGISTRY:
        raise ValueError(f"duplicate entry {entry.id}")
    REGISTRY[entry.id] = entry
    return entry


def prop(pid, title, inputs, outputs, **kw):
    """Decorator registering a build function as a catalog entry."""
    def deco(fn):
        register(Entry(pid, title, tuple(inputs.split()), tuple(outputs.split()),
                       build=fn, **kw))
        return fn
    return deco


def unsupported(pid, title, reason, inputs="", outputs=""):
    register(Entry(pid, title, tuple(inputs.split()), tuple(outputs.split()),
                   status=UNSUPPORTED, reason=reason, variants=()))


def _load():
    if not REGISTRY:
        from . import part1, part2  # noqa: F401  (registration side effects)


def _sort_key(pid):
    return tuple(int(x) for x in pid[1:].split("."))


def entries():
    _load()
    return [REGISTRY[k] for k in sorted(REGISTRY, key=_sort_key)]


_ID = re.compile(r"^P([12])\.(\d+)(?:\.(\d+))?$")


def parse_id(pid):
    """'P1.15' -> ('P1.15', None); 'P1.15.2' -> ('P1.15', 2)."""
    m = _ID.match(pid)
    if not m:
        raise UnknownProposition(f"malformed proposition id {pid!r}")
    base = f"P{m.group(1)}.{int(m.group(2))}"
    return base, (int(m.group(3)) if m.group(3) else None)


def get(pid):
    _load()
    base, _ = parse_id(pid)
    if base not in REGISTRY:
        raise UnknownProposition(f"no proposition {pid}")
    return REGISTRY[base]


def resolve(pid):
    """(entry, variant) for a possibly variant-qualified id; raises
    Unsupported for entries or variants outside the compass catalog."""
    e = get(pid)
    _, v = parse_id(pid)
    if e.status == UNSUPPORTED:
        raise Unsupported(f"{e.id} is not supported: {e.reason}")
    if v is None:
        v = e.variants[0]
    if v in e.unsupported_variants:
        raise Unsupported(f"{e.id} variant {v} is not supported: {e.unsupported_variants[v]}")
    if v not in e.variants:
        raise UnknownProposition(f"{e.id} has no variant {v}")
    return e, v


def rng_for(entry, seed, *extra):
    ss = np.random.SeedSequence(seed, spawn_key=(entry.part, entry.number) + tuple(extra))
    return np.random.Generator(np.random.PCG64(ss))


def construct(pid, pts, hints=None, tol=None):
    """Build one proposition on named input points.  Returns (builder,
    {output name: point})."""
    e, v = resolve(pid)
    missing = [n for n in e.inputs if n not in pts]
    if missing:
        raise CatalogError(f"{e.id} needs inputs {', '.join(missing)}")
    h = dict(e.hints)
    h.update(hints or {})
    if tol is None:
        tol = Tolerance.for_points([pts[n] for n in e.inputs])
    b = Builder(tol)
    for n in e.inputs:
        b.given(n, pts[n])
    names = e.build(b, v, h)
    if isinstance(names, str):
        names = (names,)
    if len(names) != len(e.outputs):
        raise CatalogError(f"{e.id} built {len(names)} outputs, expected {len(e.outputs)}")
    renamed = {}
    for src, dst in zip(names, e.outputs):
        cur = renamed.get(src, src)
        if cur == dst:
            continue
        if cur in e.inputs or cur in e.outputs:
            b.copy(cur, dst)
        else:
            b.alias(cur, dst)
            renamed[src] = dst
    return b, {n: b.pt(n) for n in e.outputs}


def expand_call(pid, arg_points, tol):
    """Steps of one macro call: (steps, input names, output names)."""
    e, _ = resolve(pid)
    if len(arg_points) != len(e.inputs):
        raise CatalogError(f"{e.id} takes {len(e.inputs)} points "
                           f"({' '.join(e.inputs)}), got {len(arg_points)}")
    pts = dict(zip(e.inputs, (Point(*p) for p in arg_points)))
    b, _ = construct(pid, pts, tol=tol)
    return list(b.steps), e.inputs, e.outputs


def reference_bindings(program, bindings=None):
    """Bind a program's unbound inputs from the reference instances of the
    macros that consume them."""
    from ..program.ir import MacroCall
    vals = dict(program.defaults())
    vals.update(bindings or {})
    for s in program.steps:
        if not isinstance(s, MacroCall):
            continue
        e = get(s.prop)
        ref, _ = e.reference()
        for arg, param in zip(s.args, e.inputs):
            if arg not in vals:
                vals[arg] = ref[param]
    return vals
