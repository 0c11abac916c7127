import json
import os

import pytest

from edc.cli import main

HERE = os.path.dirname(__file__)
CORPUS = os.path.join(HERE, "..", "corpus")


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_run_prop1(capsys):
    code, out, _ = run(["run", os.path.join(CORPUS, "prop1.edc"), "--bind", "A=0,0",
                        "--bind", "B=1,0"], capsys)
    assert code == 0
    assert "C = (0.5, 0.866025403784" in out


def test_run_bind_changes_result(capsys):
    code, out, _ = run(["run", os.path.join(CORPUS, "prop1.edc"), "--bind", "B=2,0"], capsys)
    assert code == 0 and "C = (1.0, 1.73205080756" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(["verify", "--prop", "P1.38", "--n", "50", "--seed", "7"], capsys)
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["prop"] == "P1.38" and rec["ok"] and rec["seed"] == 7
    code, _, err = run(["verify", "--prop", "P1.29.4", "--n", "5"], capsys)
    assert code == 1 and "Unsupported" in err
    code, out, _ = run(["verify", "--prop", "P1.1", "--n", "5", "--tol", "0"], capsys)
    assert code in (0, 1)


def test_verify_output_is_deterministic(capsys):
    argv = ["verify", "--prop", "P1.15", "--prop", "P2.5", "--n", "30", "--seed", "9"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_transpile_and_render(tmp_path, capsys):
    out = tmp_path / "x.edc"
    code, _, err = run(["transpile", os.path.join(CORPUS, "square_diagonals.edc-rc"),
                        "-o", str(out)], capsys)
    assert code == 0 and "ruler steps 3 -> 0" in err
    code, text, _ = run(["run", str(out)], capsys)
    line = next(t for t in text.splitlines() if t.startswith("X = "))
    x, y = map(float, line[5:-1].split(","))
    assert code == 0 and abs(x - 0.5) < 1e-9 and abs(y - 0.5) < 1e-9
    svg1, svg2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", str(out), "-o", str(svg1)]) == 0
    assert main(["render", str(out), "-o", str(svg2)]) == 0
    assert svg1.read_bytes() == svg2.read_bytes()


def test_catalog(capsys):
    code, out, _ = run(["catalog"], capsys)
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 78
    assert sum(r["status"] == "unsupported" for r in recs) == 2
    p29 = next(r for r in recs if r["id"] == "P1.29")
    assert "4" in p29["unsupported_variants"]
    p1 = next(r for r in recs if r["id"] == "P1.1")
    assert p1["step_metrics"]["1"] == {"circles": 2, "intersections": 1, "ruler_steps": 0}


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["verify", "--n", "0"],
                                  ["run", "/nonexistent.edc"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.edc"
    bad.write_text("given A (0,0)\npoint C = meet k1 k2 left\n")
    code, _, err = run(["run", str(bad)], capsys)
    assert code == 2 and "2:16" in err


def test_geometry_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.edc"
    bad.write_text("given A (0,0)\ngiven B (1,0)\ngiven C (5,0)\ncircle k1 = A rad A B\n"
                   "circle k2 = C rad A B\npoint X = meet k1 k2 left\n")
    code, _, err = run(["run", str(bad)], capsys)
    assert code == 1 and "Disjoint" in err
