"""The shipped program corpus: every supported catalog variant written out as
a pure compass program at its reference instance, plus a few ruler programs
for the transpiler."""

import os

from ..program.dsl import format_program
from ..program.ir import Collinear, DistEqual, Program
from . import catalog as C

# postconditions that hold for the named outputs whatever the instance
ASSERTIONS = {
    "P1.1": (DistEqual("A", "B", "A", "C"), DistEqual("A", "B", "B", "C")),
    "P1.4": (Collinear("A", "B", "E"), DistEqual("A", "B", "A", "E")),
    "P1.15": (Collinear("A", "B", "M"), DistEqual("A", "M", "M", "B")),
    "P1.19": (Collinear("B", "C", "F"),),
    "P1.22": (Collinear("A", "B", "N"), DistEqual("A", "N", "A", "C")),
    "P1.23": (Collinear("A", "B", "M"), DistEqual("A", "M", "A", "C")),
    "P1.33": (DistEqual("E", "A", "E", "B"), DistEqual("E", "B", "E", "C")),
    "P1.46": (DistEqual("A", "D", "B", "C"), DistEqual("B", "D", "A", "C")),
}

RULER_PROGRAMS = {
    "square_diagonals.edc-rc": """\
# diagonals of the unit square meet at its center
given A (0, 0)
given B (1, 0)
given C (1, 1)
given D (0, 1)
line l1 = A C
line l2 = B D
point X = meetll l1 l2
""",
    "chord_at_half.edc-rc": """\
# a line off the center meets the unit circle
given O (0, 0)
given R (1, 0)
given P (-2, 0.5)
given Q (2, 0.5)
circle k = O rad O R
line l = P Q
point X = meetlc l k left
point Y = meetlc l k right
""",
    "diameter_ends.edc-rc": """\
# a line through the center meets the circle at the ends of a diameter
given O (1, 2)
given R (3, 2)
given P (4, 6)
circle k = O rad O R
line l = O P
point X = meetlc l k left
point Y = meetlc l k right
assert on X k
""",
    "circles_by_points.edc-rc": """\
# a circle on a diameter and a circle through three points
given A (0, 0)
given B (4, 0)
given C (1, 3)
circle k = diam A B
circle m = thru A B C
point X = meet k m left
line l = A C
point Y = meetlc l k left
""",
}

EXTRA_PROGRAMS = {
    "prop1.edc": """\
# equilateral triangle on AB, apex on the left of A -> B
given A (0, 0)
given B (1, 0)
circle k1 = A rad A B
circle k2 = B rad A B
point C = meet k1 k2 left
""",
    "macro_midpoint.edc": """\
# a macro call expands to the catalog construction when executed
given A (0, 0)
given B (2, 0)
use P1.15(A, B) -> M
use P1.1(A, M) -> C
assert collinear A M B
""",
}


def variant_program(e, v):
    pts, hints = e.reference()
    b, _ = C.construct(f"{e.id}.{v}", pts, hints)
    p = b.program(ASSERTIONS.get(e.id, ()))
    return Program(p.inputs, p.steps, p.assertions, False)


def corpus_files():
    """{file name: text} for the whole corpus, in catalog order."""
    files = {}
    for e in C.entries():
        if e.status == C.UNSUPPORTED:
            continue
        for v in e.variants:
            if v in e.unsupported_variants:
                continue
            p = variant_program(e, v)
            head = [f"{e.id} variant {v}: {e.title}",
                    f"inputs {' '.join(e.inputs)}; outputs {' '.join(e.outputs)}",
                    "branches fixed for the coordinates below"]
            if e.reconstructed:
                head.append("reconstructed: no original procedure; this construction is our own")
            files[f"{e.id}.{v}.edc"] = format_program(p, head)
    files.update(EXTRA_PROGRAMS)
    files.update(RULER_PROGRAMS)
    return files


def write_corpus(directory):
    os.makedirs(directory, exist_ok=True)
    for name, text in corpus_files().items():
        with open(os.path.join(directory, name), "w", encoding="utf-8") as fh:
            fh.write(text)
    return sorted(corpus_files())


if __name__ == "__main__":
    import sys
    names = write_corpus(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    print(f"wrote {len(names)} files")
