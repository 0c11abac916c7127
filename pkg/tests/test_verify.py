import math

import numpy as np
import pytest

from edc import verify as V
from edc.geom import Point
from edc.propositions import catalog as C


def test_sample_guards():
    rng = np.random.default_rng(0)
    for _ in range(200):
        pts, _ = V.sample_instance("P1.15", rng)
        assert math.dist(pts["A"], pts["B"]) >= 1e-3
        pts, _ = V.sample_instance("P1.33", rng)
        A, B, Cc = pts["A"], pts["B"], pts["C"]
        area = abs((B[0] - A[0]) * (Cc[1] - A[1]) - (B[1] - A[1]) * (Cc[0] - A[0])) / 2
        assert area >= 1e-3


def _circumcenter(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
          + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
          + (cx * cx + cy * cy) * (bx - ax)) / d
    return ux, uy


def test_resection_samples_stay_off_the_danger_circle():
    rng = np.random.default_rng(1)
    for _ in range(100):
        pts, hints = V.sample_instance("P2.18", rng)
        E = V.oracle("P2.18", pts, hints)["E"]
        o = _circumcenter(pts["A"], pts["B"], pts["C"])
        r = math.dist(o, pts["A"])
        assert abs(math.dist(o, E) - r) > 1e-3 * r


def test_oracles():
    A, B = Point(1, 2), Point(4, -2)
    assert V.oracle("P1.15", {"A": A, "B": B})["M"] == pytest.approx((2.5, 0.0))
    pts = {"A": Point(0, 0), "B": Point(2, 0), "C": Point(0, 0), "D": Point(3, 0),
           "E": Point(0, 1), "F": Point(0, 5)}
    # a : b = c : d with a = 2, b = 3, c = 4
    assert V.oracle("P1.31", pts)["M"] == pytest.approx((6.0, 0.0))
    G = V.oracle("P1.39", {"A": Point(0, 0), "C": Point(1, 0)})["G"]
    assert math.dist(G, (1, 0)) == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-12)


def test_verify_midpoint():
    r = V.verify("P1.15", 1000, seed=42)
    assert r.samples == r.passes == 1000 and r.max_rel_error <= 1e-6
    assert set(r.step_metrics) == {"1", "2", "3"}
    assert all(m["ruler_steps"] == 0 for m in r.step_metrics.values())


def test_verify_single_variant_name():
    assert V.verify("P1.15.2", 5).prop == "P1.15.2"


def test_unsupported_and_unknown():
    with pytest.raises(C.Unsupported):
        V.verify("P1.29.4", 10)
    with pytest.raises(C.Unsupported):
        V.verify("P2.23", 10)
    with pytest.raises(C.UnknownProposition):
        V.verify("P1.99", 10)


def test_verify_is_deterministic():
    a, b = V.verify("P1.24", 50, seed=3), V.verify("P1.24", 50, seed=3)
    assert a.record() == b.record()
    assert V.verify("P1.24", 50, seed=4).record() != a.record()


def test_failures_are_recorded():
    r = V.verify("P1.1", 20, tol=0.0)
    assert not r.ok or r.max_rel_error == 0.0
    if not r.ok:
        assert 0 < len(r.failures) <= V.MAX_FAILURES


def test_verify_all_subset_and_summary():
    props = ["P1.1", "P1.15", V.TRANSPILER]
    r1, s1 = V.verify_all(20, seed=5, jobs=1, props=props)
    r2, s2 = V.verify_all(20, seed=5, jobs=2, props=props)
    assert [r.record() for r in r1] == [r.record() for r in r2]
    assert V.table(r1, s1) == V.table(r2, s2)
    assert s1["ok"] and s1["reports"] == 3
    assert [u[0] for u in s1["unsupported"]] == ["P1.29.4", "P2.23", "P2.24"]
    assert all(why for _, why in s1["unsupported"])


def test_catalog_counts():
    es = C.entries()
    assert len(es) == 78
    assert sum(e.status == C.UNSUPPORTED for e in es) == 2
    assert len(V.supported_ids()) == 76


def test_transpiler_report():
    r = V.verify_transpiler(10, seed=1)
    assert r.prop == V.TRANSPILER and r.ok and r.samples == 10


def test_rel_error():
    assert V.rel_error((1.0, 0.0), (1.0, 1e-7), 1.0) == pytest.approx(1e-7)
    assert V.rel_error(201.0, 200.0, 1.0) == pytest.approx(1 / 200)
    assert V.rel_error((0.0, 1e-6), (0.0, 0.0), 5.0) == pytest.approx(2e-7)
