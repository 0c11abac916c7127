import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from edc.geom import Branch, Concentric, Point, Tolerance
from edc.program import dsl
from edc.program import executor as X
from edc.program.builder import Builder
from edc.program.ir import Program, PurityViolation, count_steps
from edc.program.render import EmptyTrace, Style, render_svg

from progen import random_program

PROP1 = "given A (0,0)\ngiven B (1,0)\ncircle k1 = A rad A B\ncircle k2 = B rad A B\npoint C = meet k1 k2 left"


def test_parse_prop1():
    p = dsl.parse(PROP1)
    assert len(p.steps) == 3 and p.is_compass()
    assert p.input_names == ("A", "B")


def test_format_prop1_is_five_canonical_lines():
    text = dsl.format(dsl.parse(PROP1))
    assert text.splitlines() == ["given A (0, 0)", "given B (1, 0)",
                                 "circle k1 = A rad A B", "circle k2 = B rad A B",
                                 "point C = meet k1 k2 left"]


def test_assertions_serialized_last():
    p = dsl.parse("given A (0,0)\ngiven B (2,0)\nuse P1.15(A, B) -> M\n"
                  "assert dist A B == dist B A\nassert collinear A M B")
    p = Program(p.inputs, p.steps, p.assertions, False)
    lines = dsl.format(p).splitlines()
    assert lines[-2:] == ["assert dist A B == dist B A", "assert collinear A M B"]


@pytest.mark.parametrize("text,err,line,col", [
    ("point C = meet k1 k2 left", dsl.ForwardReference, 1, 16),
    ("given A (0,0)\ngiven A (1,1)", dsl.DuplicateName, 2, 7),
    ("given A (0,0)\ngiven B (1,0)\ncircle k = A rad A", dsl.DslSyntaxError, 3, 19),
    ("given A (0 0)", dsl.DslSyntaxError, 1, 12),
    ("given A (0,0)\ngiven B (1,0)\nline l = A B", dsl.RulerNotAllowed, 3, 1),
    ("given A (0,0)\ngiven B (1,0)\npoint C = meet A B left", dsl.KindMismatch, 3, 16),
])
def test_diagnostics_carry_position(text, err, line, col):
    with pytest.raises(err) as e:
        dsl.parse(text)
    assert (e.value.line, e.value.col) == (line, col)
    assert str(e.value).startswith(f"{line}:{col}:")


def test_statement_after_assertion_rejected():
    with pytest.raises(dsl.DslSyntaxError) as e:
        dsl.parse("given A (0,0)\ngiven B (2,0)\nassert dist A B == dist B A\n"
                  "use P1.15(A, B) -> M")
    assert (e.value.line, e.value.col) == (4, 1)


def test_syntax_error_lists_expected():
    with pytest.raises(dsl.DslSyntaxError) as e:
        dsl.parse("given A (0,0)\ngiven B (1,0)\ncircle k1 = A rad A B\ncircle k2 = B rad A B\n"
                  "point C = meet k1 k2 up")
    assert e.value.expected == {"'left'", "'right'"}


@pytest.mark.parametrize("ruler", [False, True])
def test_random_round_trip(ruler):
    rng = np.random.default_rng(11 + ruler)
    for _ in range(300):
        p = random_program(rng, ruler)
        assert dsl.parse(dsl.format(p), ruler=ruler) == p


def test_execute_prop1():
    t = X.execute(dsl.parse(PROP1))
    assert t.points()["C"] == pytest.approx((0.5, math.sqrt(3) / 2), abs=1e-12)


def test_execute_bindings_override_defaults():
    t = X.execute(dsl.parse(PROP1), {"B": (2, 0)})
    assert t.points()["C"] == pytest.approx((1.0, math.sqrt(3)), abs=1e-12)


def test_concentric_step_error():
    p = dsl.parse("given A (0,0)\ngiven B (1,0)\ngiven C (2,0)\ncircle k1 = A rad A B\n"
                  "circle k2 = A rad A C\npoint X = meet k1 k2 left")
    with pytest.raises(X.StepError) as e:
        X.execute(p)
    assert e.value.index == 2 and isinstance(e.value.cause, Concentric)


def test_empty_program_identity():
    t = X.execute(dsl.parse("given A (1,2)"))
    assert t.values == {"A": Point(1.0, 2.0)}


def test_unbound_and_failed_assertion():
    with pytest.raises(X.UnboundInput):
        X.execute(dsl.parse("given A\ngiven B (1,0)"))
    with pytest.raises(X.AssertionFailed):
        X.execute(dsl.parse(PROP1 + "\nassert collinear A B C"))


def test_macro_expands_to_compass_steps():
    p = dsl.parse("given A (0,0)\ngiven B (2,0)\nuse P1.15(A, B) -> M\nassert collinear A M B")
    t = X.execute(p)
    assert t.points()["M"] == pytest.approx((1.0, 0.0), abs=1e-9)
    assert t.program.is_compass()
    assert X.step_metrics(p)["ruler_steps"] == 0


def test_step_metrics_prop1():
    assert X.step_metrics(dsl.parse(PROP1)) == {"circles": 2, "intersections": 1,
                                                "ruler_steps": 0}
    macro = dsl.parse("given A (0,0)\ngiven B (1,0)\nuse P1.1(A, B) -> C")
    assert X.step_metrics(macro) == {"circles": 2, "intersections": 1, "ruler_steps": 0}


def test_step_metrics_add_under_concatenation():
    a = dsl.parse(PROP1)
    b = dsl.parse("given A (0,0)\ngiven B (1,0)\ncircle k3 = A rad A B\ncircle k4 = B rad B A\n"
                  "point D = meet k3 k4 right")
    both = Program(a.inputs, a.steps + b.steps, (), False)
    total = count_steps(a.steps) + count_steps(b.steps)
    assert X.step_metrics(both) == total.as_dict()


def test_ruler_steps_refused_in_compass_program():
    rp = dsl.parse("given A (0,0)\ngiven B (1,0)\ngiven C (0,1)\nline l = A B\nline m = A C\n"
                   "point X = meetll l m", ruler=True)
    assert X.execute(rp).points()["X"] == (0.0, 0.0)
    with pytest.raises(PurityViolation):
        X.execute(Program(rp.inputs, rp.steps, (), False))


def test_rigid_motion_equivariance_and_reflection_flips_branches():
    p = dsl.parse(PROP1)
    base = X.execute(p).points()["C"]
    th, tx, ty = 0.7, 3.0, -2.0
    rot = lambda q: (math.cos(th) * q[0] - math.sin(th) * q[1] + tx,
                     math.sin(th) * q[0] + math.cos(th) * q[1] + ty)
    moved = X.execute(p, {"A": rot((0, 0)), "B": rot((1, 0))}).points()["C"]
    assert moved == pytest.approx(rot(base), abs=1e-9)
    flipped = Program(p.inputs, p.steps[:2] + (p.steps[2].__class__(
        "C", "k1", "k2", Branch.RIGHT),), (), False)
    mirrored = X.execute(flipped, {"A": (0, 0), "B": (1, 0)}).points()["C"]
    assert mirrored == pytest.approx((base[0], -base[1]), abs=1e-12)


def test_execute_is_bitwise_deterministic():
    p = dsl.parse("given A (0.3,0.1)\ngiven B (2.7,-1.3)\nuse P1.39(A, B) -> G")
    assert X.execute(p).values == X.execute(p).values


def test_render_prop1():
    svg = render_svg(X.execute(dsl.parse(PROP1)))
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
    tags = [el.tag.split("}")[1] for el in root.iter()]
    assert tags.count("circle") == 2 and tags.count("text") == 3
    svg = svg.decode()
    for label in ("A", "B", "C"):
        assert f">{label}</text>" in svg


def test_render_deterministic_and_empty():
    t = X.execute(dsl.parse(PROP1))
    assert render_svg(t) == render_svg(t)
    assert render_svg(t, Style(width=300)) != render_svg(t)
    empty = X.Trace({}, (), Program(), Tolerance())
    with pytest.raises(EmptyTrace):
        render_svg(empty)


def test_builder_records_replayable_program():
    b = Builder(Tolerance())
    b.given("A", (0, 0))
    b.given("B", (3, 1))
    k1, k2 = b.cc("A", "B"), b.cc("B", "A")
    c = b.meet(k1, k2, Branch.LEFT, out="C")
    t = X.execute(b.program())
    assert t.points()[c] == b.pt(c)
