"""Text form of construction programs (.edc, and .edc-rc for ruler programs).

One statement per line:

    given A (0, 0)
    circle k1 = A rad A B
    point C = meet k1 k2 left
    use P1.15(A, B) -> M
    assert collinear A B C

Ruler files additionally accept ``line l = A B``, ``point X = meetll l m``,
``point X = meetlc l k left``, ``circle k = diam A B`` and
``circle k = thru A B C``.
"""

import re

from ..geom import Branch, Point
from .ir import (CircleDiam, CircleThru, Collinear, DistEqual, DrawCircle, DrawLine, Given,
                 Intersect, MacroCall, MeetLC, MeetLL, OnCircle, Program)


class DslError(Exception):
    def __init__(self, line, col, message):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class DslSyntaxError(DslError):
    def __init__(self, line, col, expected, found=None):
        exp = sorted(expected)
        msg = "expected " + " or ".join(exp)
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(line, col, msg)
        self.expected = frozenset(expected)


class DuplicateName(DslError):
    pass


class ForwardReference(DslError):
    pass


class KindMismatch(DslError):
    pass


class RulerNotAllowed(DslError):
    pass


_TOKEN = re.compile(r"""
    (?P<ws>[ \t]+)
  | (?P<comment>\#.*)
  | (?P<prop>P[12]\.\d+(?:\.\d+)?)(?![\w.])
  | (?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>==|->|[(),=])
""", re.VERBOSE)

KEYWORDS = {"given", "circle", "point", "line", "use", "assert", "rad", "meet", "meetll",
            "meetlc", "diam", "thru", "left", "right", "collinear", "dist", "on"}
RULER_KEYWORDS = {"line", "meetll", "meetlc", "diam", "thru"}


def _tokenize(text, lineno):
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslSyntaxError(lineno, pos + 1, {"token"}, text[pos])
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append((kind, m.group(), pos + 1))
        pos = m.end()
    return toks


class _Line:
    """Cursor over the tokens of one line."""

    def __init__(self, toks, lineno, width):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.end_col = width + 1

    def _col(self):
        return self.toks[self.i][2] if self.i < len(self.toks) else self.end_col

    def _found(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else None

    def fail(self, expected):
        raise DslSyntaxError(self.lineno, self._col(), expected, self._found())

    def word(self, *choices):
        if self.i < len(self.toks) and self.toks[self.i][0] == "ident" \
                and self.toks[self.i][1] in choices:
            self.i += 1
            return self.toks[self.i - 1][1]
        self.fail({repr(c) for c in choices})

    def op(self, sym):
        if self.i < len(self.toks) and self.toks[self.i][0] == "op" and self.toks[self.i][1] == sym:
            self.i += 1
            return
        self.fail({repr(sym)})

    def ident(self):
        if self.i < len(self.toks) and self.toks[self.i][0] == "ident" \
                and self.toks[self.i][1] not in KEYWORDS:
            self.i += 1
            return self.toks[self.i - 1][1], self.toks[self.i - 1][2]
        self.fail({"identifier"})

    def num(self):
        if self.i < len(self.toks) and self.toks[self.i][0] == "num":
            self.i += 1
            return float(self.toks[self.i - 1][1])
        self.fail({"number"})

    def prop(self):
        if self.i < len(self.toks) and self.toks[self.i][0] == "prop":
            self.i += 1
            return self.toks[self.i - 1][1]
        self.fail({"proposition id"})

    def peek(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else None

    def done(self):
        if self.i < len(self.toks):
            self.fail({"end of line"})


class _Scope:
    def __init__(self):
        self.kinds = {}

    def define(self, name, kind, ln, col):
        if name in self.kinds:
            raise DuplicateName(ln, col, f"name {name!r} already defined")
        self.kinds[name] = kind

    def use(self, name, kind, ln, col):
        if name not in self.kinds:
            raise ForwardReference(ln, col, f"{name!r} is not defined before use")
        if self.kinds[name] != kind:
            raise KindMismatch(ln, col, f"{name!r} is a {self.kinds[name]}, not a {kind}")


def parse(text, ruler=False):
    """Parse DSL text into a Program.  Ruler statements are accepted only when
    ruler is true (the .edc-rc dialect)."""
    inputs, steps, asserts = [], [], []
    scope = _Scope()
    phase = 0   # 0 givens, 1 steps, 2 assertions

    def order(ln, col, want):
        nonlocal phase
        if want < phase:
            section = ("given", "construction", "assert")[want]
            raise DslSyntaxError(ln, col, {"assert"} if phase == 2 else {"step or assert"},
                                 f"{section} statement out of order")
        phase = want

    for ln, raw in enumerate(text.splitlines(), 1):
        toks = _tokenize(raw, ln)
        if not toks:
            continue
        c = _Line(toks, ln, len(raw))
        col0 = toks[0][2]
        kw = c.word("given", "circle", "point", "line", "use", "assert")
        if kw in RULER_KEYWORDS and not ruler:
            raise RulerNotAllowed(ln, col0, "ruler statement in a compass program")

        def ref(kind):
            name, col = c.ident()
            scope.use(name, kind, ln, col)
            return name

        if kw == "given":
            order(ln, col0, 0)
            name, col = c.ident()
            at = None
            if c.peek() == "(":
                c.op("(")
                x = c.num()
                c.op(",")
                y = c.num()
                c.op(")")
                at = Point(x, y)
            c.done()
            scope.define(name, "point", ln, col)
            inputs.append(Given(name, at))
            continue
        if kw == "assert":
            order(ln, col0, 2)
            what = c.word("collinear", "dist", "on")
            if what == "collinear":
                a = Collinear(ref("point"), ref("point"), ref("point"))
            elif what == "dist":
                p, q = ref("point"), ref("point")
                c.op("==")
                c.word("dist")
                a = DistEqual(p, q, ref("point"), ref("point"))
            else:
                a = OnCircle(ref("point"), ref("circle"))
            c.done()
            asserts.append(a)
            continue

        order(ln, col0, 1)
        if kw == "use":
            prop = c.prop()
            c.op("(")
            args = [ref("point")]
            while c.peek() == ",":
                c.op(",")
                args.append(ref("point"))
            c.op(")")
            c.op("->")
            outs = [c.ident()]
            while c.peek() == ",":
                c.op(",")
                outs.append(c.ident())
            c.done()
            for name, col in outs:
                scope.define(name, "point", ln, col)
            steps.append(MacroCall(prop, tuple(args), tuple(n for n, _ in outs)))
            continue

        name, col = c.ident()
        c.op("=")
        if kw == "circle":
            forms = ("diam", "thru") if ruler else ()
            if c.peek() in forms:
                form = c.word(*forms)
                if form == "diam":
                    st = CircleDiam(name, ref("point"), ref("point"))
                else:
                    st = CircleThru(name, ref("point"), ref("point"), ref("point"))
            else:
                center = ref("point")
                c.word("rad")
                st = DrawCircle(name, center, ref("point"), ref("point"))
            kind = "circle"
        elif kw == "line":
            st = DrawLine(name, ref("point"), ref("point"))
            kind = "line"
        else:
            forms = ("meet", "meetll", "meetlc") if ruler else ("meet",)
            form = c.word(*forms)
            if form == "meet":
                c1, c2 = ref("circle"), ref("circle")
                st = Intersect(name, c1, c2, Branch(c.word("left", "right")))
            elif form == "meetll":
                st = MeetLL(name, ref("line"), ref("line"))
            else:
                l, k = ref("line"), ref("circle")
                st = MeetLC(name, l, k, Branch(c.word("left", "right")))
            kind = "point"
        c.done()
        scope.define(name, kind, ln, col)
        steps.append(st)
    return Program(tuple(inputs), tuple(steps), tuple(asserts), ruler)


def _num(v):
    v = float(v)
    if v.is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def format_step(s):
    if isinstance(s, DrawCircle):
        return f"circle {s.out} = {s.center} rad {s.r1} {s.r2}"
    if isinstance(s, Intersect):
        return f"point {s.out} = meet {s.c1} {s.c2} {s.branch.value}"
    if isinstance(s, MacroCall):
        return f"use {s.prop}({', '.join(s.args)}) -> {', '.join(s.outs)}"
    if isinstance(s, DrawLine):
        return f"line {s.out} = {s.p} {s.q}"
    if isinstance(s, MeetLL):
        return f"point {s.out} = meetll {s.l1} {s.l2}"
    if isinstance(s, MeetLC):
        return f"point {s.out} = meetlc {s.line} {s.circle} {s.branch.value}"
    if isinstance(s, CircleDiam):
        return f"circle {s.out} = diam {s.p} {s.q}"
    if isinstance(s, CircleThru):
        return f"circle {s.out} = thru {s.p} {s.q} {s.r}"
    raise TypeError(f"not a step: {s!r}")


def format_assertion(a):
    if isinstance(a, Collinear):
        return f"assert collinear {a.a} {a.b} {a.c}"
    if isinstance(a, DistEqual):
        return f"assert dist {a.a} {a.b} == dist {a.c} {a.d}"
    return f"assert on {a.p} {a.k}"


def format_program(p, header=()):
    """Canonical text: givens, then steps, then assertions."""
    lines = [f"# {h}" if h else "#" for h in header]
    for g in p.inputs:
        lines.append(f"given {g.name}" if g.at is None
                     else f"given {g.name} ({_num(g.at[0])}, {_num(g.at[1])})")
    lines += [format_step(s) for s in p.steps]
    lines += [format_assertion(a) for a in p.assertions]
    return "\n".join(lines) + "\n"


# the operation is named format in the program module's interface
format = format_program
