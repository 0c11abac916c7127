"""Part one: constructions with the compass alone (54 propositions)."""

import math

from ..geom import Branch, Point, Side, cross, side_of
from . import kernel as K
from . import oracles as O
from .catalog import prop
from .sampling import (along, angle, angle_triple, angles_ok, dist, polar, pt, retry, seg,
                       side, triangle, turn, u)

L, R = K.L, K.R


def _br(h, key="side"):
    return Branch(h.get(key, "left"))


def _flip(br):
    return br.flip()


def _toward(b, X, frm, to):
    """Branch that lands on X's side of frm -> to."""
    s = side_of(b.pt(X), b.pt(frm), b.pt(to), b.tol)
    return R if s is Side.RIGHT else L


# -- samplers shared by several entries ---------------------------------

def s_seg(rng):
    A, B = seg(rng, 0.5, 8.0)
    return {"A": A, "B": B, "side": side(rng)}


def s_center(rng):
    A = pt(rng, 4.0)
    return {"A": A, "B": polar(A, u(rng, 1.0, 5.0), angle(rng)), "side": side(rng)}


def s_triangle(rng):
    A, B, C = triangle(rng)
    return {"A": A, "B": B, "C": C}


def s_circle_AP(rng):
    A = pt(rng, 4.0)
    return {"A": A, "P": polar(A, u(rng, 1.0, 5.0), angle(rng)), "side": side(rng)}


def convex(poly, margin=0.2):
    """Counterclockwise polygon with every turn comfortably convex."""
    n = len(poly)
    for k in range(n):
        p, q, r = poly[k], poly[(k + 1) % n], poly[(k + 2) % n]
        if cross(p, q, r) < margin * dist(p, q) * dist(q, r):
            return False
    return True


# -- reusable constructions ---------------------------------------------

def halfer(b, X, Y):
    """Point at distance |XY|/2 from X: E = 2X - Y, F on the arc from Y
    through E with EF = XY, then the arc about Y through X cut with EF' = FX."""
    E = K.antipode(b, X, Y)
    F = b.mark(Y, (Y, E), E, (X, Y), L)
    return b.mark(Y, (Y, X), E, (F, X), L)


def divide(b, A, B, n, variant=1):
    """Points X1 .. X(n-1) dividing AB into n equal parts."""
    if n < 2:
        raise ValueError("n must be at least 2")
    K._check_distinct(b, A, B)
    if variant == 1:
        E = K.extend_n(b, B, A, n)
        P = K.inverse(b, B, A, E)               # |BP| = |AB| / n
        xs = {n - 1: P}
        for k in range(2, n):
            xs[n - k] = K.extend_n(b, B, P, k)
        return [xs[k] for k in range(1, n)]
    if variant == 2:
        D = K.apex(b, A, B)
        gs = [D] + [K.extend_n(b, A, D, k) for k in range(2, n + 1)]
        _, kt = K.thales(b, A, gs[-1])
        Bs = b.meet(kt, b.cc(A, B), L)          # AB marked in the semicircle
        out = []
        for k in range(1, n):
            e = K.foot(b, gs[k - 1], A, Bs)
            out.append(b.mark(A, (A, e), B, (Bs, e), L))
        return out
    Q = K.extend_n(b, A, B, n)
    E2 = K.antipode(b, B, A)                     # |A E2| = 2|AB|
    r1 = b.mark(A, (A, Q), Q, (A, E2), L)
    r2 = b.mark(A, (A, Q), Q, (A, E2), R)
    _, k1 = K.thales(b, Q, r1)
    _, k2 = K.thales(b, Q, r2)
    S = b.meet_other(k1, k2, Q)                  # |SQ| = 2|AB| / n
    T = B if n == 2 else K.cut_off(b, A, B, (S, Q))
    X1 = K.halve(b, A, T)
    return [X1] + [K.extend_n(b, A, X1, k) for k in range(2, n)]


def golden(b, A, C, br=L):
    """G on CA with |GC|^2 = |CA| |GA|."""
    D = K.rot90(b, C, A, br)
    E = K.halve(b, C, D)
    F = K.place(b, E, C, (A, E))
    return K.place(b, C, A, (C, F))


def inscribe_v1(b, D, E, A, B, C):
    """Images of A and C when triangle ABC is inscribed in circle(D, E) with B
    sent to E: the circumcircle is laid about D and its points pulled out."""
    Oc = K.circumcenter(b, A, B, C)
    B1 = K.place(b, D, E, (Oc, B))
    out = []
    for X in (A, C):
        br = L if cross(b.pt(Oc), b.pt(B), b.pt(X)) > 0 else R
        X1 = b.meet_side(b.circle(D, Oc, B), b.circle(B1, B, X), D, B1, br)
        out.append(K.place(b, D, X1, (D, E)))
    return out


def inscribe_v2(b, D, E, A, B, C):
    """The same with tangent-chord angles at E."""
    ccw = cross(b.pt(B), b.pt(A), b.pt(C)) > 0
    N = K.rot90(b, E, D, R if ccw else L)      # tangent direction
    Mt = K.antipode(b, E, N)

    def chord(vertex_angle, tangent):
        X, V, Y = vertex_angle
        br = _toward(b, D, E, tangent)
        k = K.copy_angle(b, X, V, Y, E, tangent, br)
        f = K.foot(b, k, E, D)
        q0, q1 = K.fourth(b, (E, k), (E, f), (E, D))
        q2 = K.extend_n(b, q0, q1, 2)
        return K.place(b, E, k, (q0, q2))
    F = chord((B, C, A), N)
    G = chord((B, A, C), Mt)
    return [F, G]


def pentagon(b, A, P, br=L):
    """Vertices of the regular pentagon in circle(A, P), stepping from P
    (counterclockwise for Left)."""
    Cg = golden(b, P, A)
    D40 = b.meet(b.cc(A, P), b.circle(P, A, Cg), L)
    F, G = inscribe_v1(b, A, P, P, A, D40)
    k0 = b.cc(A, P)
    kside = b.circle(P, F, G)
    v1 = b.meet_side(k0, kside, A, P, br)
    v4 = b.meet_side(k0, kside, A, P, _flip(br))
    want = L if br is L else R
    v2, v3 = (F, G) if _toward(b, F, A, P) is want else (G, F)
    return [v1, v2, v3, v4]


def apply_area(b, A, B, bd, H, I, Kk, br):
    """Parallelogram B P Q A on AB with angle HIK at B, whose height is bd,
    on side br of A -> B."""
    inner = _flip(br)
    Dp = K.erect(b, B, A, bd, inner)
    Cp = K.parallel_through(b, Dp, A, B)
    N = K.copy_angle(b, H, I, Kk, B, A, inner)
    Of = K.foot(b, N, B, Dp)
    if b.d(Of, N) <= b.eps:
        Pp = Dp
    else:
        n, a0, b0 = b.pt(N), b.pt(A), b.pt(B)
        acute = (n[0] - b0[0]) * (a0[0] - b0[0]) + (n[1] - b0[1]) * (a0[1] - b0[1]) > 0
        dp = K.fourth(b, (B, Of), (Of, N), (B, Dp))
        Pp = K.place(b, Dp, Cp, dp, acute)
    return Pp, K.parallel_through(b, Pp, A, B)


# -- 1 .. 14 -------------------------------------------------------------

@prop("P1.1", "Equilateral triangle on a segment", "A B", "C",
      sample=s_seg, oracle=O.p1_1, hints={"side": "left"})
def p1_1(b, v, h):
    return K.apex(b, "A", "B", _br(h)),


@prop("P1.2", "Hexagon marks around a circle", "A B", "C D E F G",
      sample=s_center, oracle=O.p1_2)
def p1_2(b, v, h):
    return tuple(K.hexagon(b, "A", "B", 5))


@prop("P1.3", "Equilateral triangle in a circle", "A B", "D F",
      sample=s_center, oracle=O.p1_3)
def p1_3(b, v, h):
    m = K.hexagon(b, "A", "B", 4)
    return m[1], m[3]


@prop("P1.4", "Double a segment", "A B", "E", sample=s_seg, oracle=O.p1_4)
def p1_4(b, v, h):
    return K.antipode(b, "A", "B"),


@prop("P1.5", "Multiply a segment", "A B", "H", sample=s_seg, oracle=O.p1_5,
      hints={"n": 3})
def p1_5(b, v, h):
    return K.extend_n(b, "B", "A", int(h.get("n", 3))),


@retry
def s_p1_6(rng):
    B, A, C = angle_triple(rng)
    E = pt(rng, 5.0)
    return {"A": A, "B": B, "C": C, "E": E, "D": polar(E, u(rng, 1.0, 4.0), angle(rng)),
            "side": side(rng)}


@prop("P1.6", "Copy an angle", "B A C E D", "F", sample=s_p1_6, oracle=O.p1_6,
      hints={"side": "left"})
def p1_6(b, v, h):
    return K.copy_angle(b, "B", "A", "C", "E", "D", _br(h)),


@retry
def s_p1_7(rng):
    A, B = seg(rng, 2.0, 8.0)
    C = pt(rng, 6.0)
    if not angles_ok(A, B, C, 0.3):
        return None
    U1, V1 = pt(rng), pt(rng)
    s = "left" if cross(A, B, C) > 0 else "right"
    return {"A": A, "B": B, "U1": U1, "U2": polar(U1, dist(A, C), angle(rng)),
            "V1": V1, "V2": polar(V1, dist(B, C), angle(rng)), "side": s}


@prop("P1.7", "Triangle from three sides", "A B U1 U2 V1 V2", "C",
      sample=s_p1_7, oracle=O.p1_7, hints={"side": "left"})
def p1_7(b, v, h):
    return b.mark("A", ("U1", "U2"), "B", ("V1", "V2"), _br(h)),


@retry
def s_p1_8(rng):
    A, B, C = triangle(rng)
    D = pt(rng, 5.0)
    return {"A": A, "B": B, "C": C, "D": D, "X": polar(D, u(rng, 1.0, 5.0), angle(rng)),
            "orient": "direct" if rng.random() < 0.5 else "mirror"}


@prop("P1.8", "Copy a triangle onto a ray", "A B C D X", "E F",
      sample=s_p1_8, oracle=O.p1_8, hints={"orient": "direct"})
def p1_8(b, v, h):
    E = K.place(b, "D", "X", ("A", "C"))
    left = cross(b.pt("A"), b.pt("C"), b.pt("B")) > 0
    if h.get("orient", "direct") != "direct":
        left = not left
    F = b.meet_side(b.circle("D", "A", "B"), b.circle(E, "C", "B"), "D", E, L if left else R)
    return E, F


def s_p1_9(rng):
    A, B = seg(rng, 1.0, 8.0)
    C = pt(rng)
    return {"A": A, "B": B, "C": C, "D": polar(C, dist(A, B) / 2, angle(rng))}


@prop("P1.9", "Circle on a segment with a given radius", "A B C D", "M",
      sample=s_p1_9, oracle=O.p1_9)
def p1_9(b, v, h):
    M = K.halve(b, "A", "B")
    b.cc(M, "A")
    return M,


@prop("P1.10", "Perpendicular at the end of a segment", "A B", "E",
      sample=s_seg, oracle=O.p1_10, hints={"side": "left"})
def p1_10(b, v, h):
    br = _br(h)
    Cm, Dm = K.hexagon(b, "B", "A", 2, br)
    return K.apex(b, Cm, Dm, _flip(br)),


def s_radius(rng):
    B = pt(rng, 4.0)
    return {"B": B, "A": polar(B, u(rng, 1.0, 5.0), angle(rng)), "side": side(rng)}


def _square_marks(b):
    q1, q2, c = K.hexagon(b, "B", "A", 3)
    hh = b.mark("A", ("A", q2), c, (c, q1), L)
    k0 = b.cc("B", "A")
    ka = b.circle("A", "B", hh)
    return q1, c, k0, ka


@prop("P1.11", "Square in a circle", "A B", "I C G", sample=s_radius, oracle=O.p1_11)
def p1_11(b, v, h):
    _, c, k0, ka = _square_marks(b)
    return b.meet(k0, ka, L), c, b.meet(k0, ka, R)


def _m_p1_12(i, o):
    return {"E": o["E"], "I": o["I"], "side": dist(o["E"], o["I"])}


@prop("P1.12", "Dodecagon side in a circle", "A B", "E I", sample=s_radius,
      oracle=O.p1_12, measure=_m_p1_12)
def p1_12(b, v, h):
    q1, _, k0, ka = _square_marks(b)
    return q1, b.meet(k0, ka, L)


@prop("P1.13", "Square on a segment", "A B", "I K", sample=s_radius, oracle=O.p1_13,
      hints={"side": "left"})
def p1_13(b, v, h):
    I = K.rot90(b, "B", "A", _br(h))
    Kc = b.meet_other(b.circle(I, "B", "A"), b.cc("A", "B"), "B")
    return I, Kc


@prop("P1.14", "Square about a circle", "A B", "K L M N", sample=s_radius, oracle=O.p1_14)
def p1_14(b, v, h):
    I = K.rot90(b, "B", "A", L)
    C = K.antipode(b, "B", "A")
    G = K.antipode(b, "B", I)
    out = []
    for X, Y in (("A", I), (I, C), (C, G), (G, "A")):
        out.append(b.meet_other(b.circle(X, "B", "A"), b.circle(Y, "B", "A"), "B"))
    return tuple(out)


# -- 15 .. 28 ------------------------------------------------------------

@prop("P1.15", "Midpoint of a segment", "A B", "M", sample=s_seg,
      oracle=O.midpoint_AB, variants=(1, 2, 3))
def p1_15(b, v, h):
    A, B = "A", "B"
    K._check_distinct(b, A, B)
    if v == 1:
        C = K.antipode(b, A, B)
        D = K.antipode(b, B, A)
        E = b.mark(C, (C, B), D, (D, A), L)
        _, k1 = K.thales(b, C, E)
        _, k2 = K.thales(b, D, E)
        return b.meet_other(k1, k2, E),
    C = K.apex(b, A, B, L)
    D = K.apex(b, A, B, R)
    if v == 2:
        Lh = halfer(b, A, B)
        Kh = halfer(b, D, C)
        return b.meet_near(b.circle(A, A, Lh), b.circle(D, D, Kh), B),
    E = K.antipode(b, A, B)
    P = b.mark(C, (E, B), D, (E, B), L)
    _, k1 = K.thales(b, C, P)
    _, k2 = K.thales(b, D, P)
    return b.meet_other(k1, k2, P),


@prop("P1.16", "Circle on a given diameter", "A C", "G",
      sample=lambda rng: dict(zip("AC", seg(rng, 0.5, 8.0))), oracle=O.p1_16)
def p1_16(b, v, h):
    G = K.halve(b, "A", "C")
    b.cc(G, "A")
    return G,


def s_square(rng):
    A, B = seg(rng, 1.0, 7.0, half=4.0)
    D = turn(A, B, math.pi / 2 if rng.random() < 0.5 else -math.pi / 2)
    return {"A": A, "B": B, "C": Point(B.x + D.x - A.x, B.y + D.y - A.y), "D": D}


@prop("P1.17", "Circle in a square", "A B C D", "G", sample=s_square, oracle=O.p1_16)
def p1_17(b, v, h):
    E = K.halve(b, "A", "B")
    G = K.rot90(b, E, "A", _toward(b, "D", E, "A"))
    b.cc(G, E)
    return G,


@prop("P1.18", "Circle about a square", "A B C D", "G", sample=s_square, oracle=O.p1_16)
def p1_18(b, v, h):
    G = K.halve(b, "A", "C")
    b.cc(G, "A")
    return G,


@prop("P1.19", "Perpendicular from a point to a line", "A B C", "F",
      sample=s_triangle, oracle=O.p1_19)
def p1_19(b, v, h):
    return K.foot(b, "A", "B", "C"),


def s_p1_20(rng):
    C = pt(rng, 4.0)
    r = u(rng, 0.5, 3.0)
    return {"C": C, "K": polar(C, r, angle(rng)), "A": polar(C, r * u(rng, 1.5, 3.0), angle(rng)),
            "side": side(rng)}


@prop("P1.20", "Tangent from a point to a circle", "A C K", "B", sample=s_p1_20,
      oracle=O.p1_20, hints={"side": "left"})
def p1_20(b, v, h):
    return K.tangent_point(b, "A", "C", "K", _br(h)),


def s_short(lo, hi):
    def s(rng):
        A, B = seg(rng, 1.0, 8.0)
        return {"A": A, "B": B, "C": polar(A, dist(A, B) * u(rng, lo, hi), angle(rng)),
                "side": side(rng)}
    return s


@prop("P1.21", "Perpendicular of given length at an endpoint", "A B C", "K",
      sample=s_short(0.1, 0.95), oracle=O.p1_21, variants=(1, 2), hints={"side": "left"})
def p1_21(b, v, h):
    return K.erect(b, "A", "B", ("A", "C"), _br(h), variant=v),


@prop("P1.22", "Add two segments", "A B C", "N", sample=s_short(0.05, 2.0), oracle=O.p1_22)
def p1_22(b, v, h):
    return K.extend_by(b, "A", "B", ("A", "C")),


@prop("P1.23", "Cut a shorter segment from a longer", "A B C", "M",
      sample=s_short(0.05, 0.95), oracle=O.p1_23)
def p1_23(b, v, h):
    return K.cut_off(b, "A", "B", ("A", "C")),


@prop("P1.24", "Divide a segment into equal parts", "A B", "X1 X2", sample=s_seg,
      oracle=O.p1_24, variants=(1, 2, 3), hints={"n": 3})
def p1_24(b, v, h):
    return tuple(divide(b, "A", "B", 3, v))


@prop("P1.25", "Cut off a third", "A B", "G", sample=s_seg, oracle=O.p1_25)
def p1_25(b, v, h):
    return divide(b, "A", "B", 3, 2)[0],


def divide_ratio(b, A, D, B, C):
    """E on AD with AE : AD = AB : AC (B on segment AC): AD marked in the
    semicircle over AC and the perpendicular from B dropped on it."""
    k = 1
    if b.d(A, D) >= 0.9 * b.d(A, C):
        k = math.ceil(b.d(A, D) / (0.9 * b.d(A, C)))
        C, B = K.extend_n(b, A, C, k), K.extend_n(b, A, B, k)
    _, kt = K.thales(b, A, C)
    Ds = b.meet(kt, b.cc(A, D), L)
    Es = K.foot(b, B, A, Ds)
    if b.d(Ds, D) <= b.eps:
        return Es
    return b.mark(A, (A, Es), D, (Es, Ds), L)


@retry
def s_p1_26(rng):
    A, C = seg(rng, 2.0, 8.0)
    B = along(A, C, u(rng, 0.1, 0.9))
    D = polar(A, u(rng, 1.0, 6.0), angle(rng))
    return {"A": A, "D": D, "B": B, "C": C}


@prop("P1.26", "Divide a segment in a given ratio", "A D B C", "E",
      sample=s_p1_26, oracle=O.p1_26)
def p1_26(b, v, h):
    return divide_ratio(b, "A", "D", "B", "C"),


def s_p1_27(rng):
    C = pt(rng, 4.0)
    a = angle(rng)
    return {"C": C, "D": polar(C, u(rng, 0.3, 5.0), a + math.pi), "B": polar(C, u(rng, 0.3, 5.0), a),
            "side": side(rng)}


@prop("P1.27", "Mean proportional of two segments in line", "D C B", "H",
      sample=s_p1_27, oracle=O.p1_27, hints={"side": "left"})
def p1_27(b, v, h):
    return K.mean_on_line(b, "D", "C", "B", _br(h)),


def s_two_segs(rng):
    P1, P2 = seg(rng, 0.5, 6.0)
    Q1, Q2 = seg(rng, 0.5, 6.0)
    return {"P1": P1, "P2": P2, "Q1": Q1, "Q2": Q2}


@prop("P1.28", "Mean proportional of two segments", "P1 P2 Q1 Q2", "H",
      sample=s_two_segs, oracle=O.p1_28)
def p1_28(b, v, h):
    return K.place(b, "P1", "P2", K.mean(b, ("P1", "P2"), ("Q1", "Q2"))),


# -- 29 .. 38 ------------------------------------------------------------

def s_p1_29(rng):
    A, B = seg(rng, 1.5, 8.0)
    return {"A": A, "B": B, "D": polar(B, dist(A, B) * u(rng, 0.2, 0.95), angle(rng))}


@prop("P1.29", "Side of a rectangle equal to a square", "A B D", "C",
      sample=s_p1_29, oracle=O.p1_29, variants=(1, 2, 3),
      unsupported_variants={4: "the fourth variant needs a ruler to draw its secant"})
def p1_29(b, v, h):
    A, B, D = "A", "B", "D"
    if v == 1:
        N2 = K.extend_n(b, B, A, 2)
        N = K.cut_off(b, B, N2, (B, D))
        _, kt = K.thales(b, B, N2)
        P = b.meet(kt, b.cc(B, D), L)
        O_ = K.foot(b, N, B, P)
        return K.place(b, B, A, (B, K.extend_n(b, B, O_, 2))),
    if v == 2:
        _, kt = K.thales(b, B, A)
        if b.d(B, D) >= b.d(B, A) - b.eps:
            return A,
        N = K.cut_off(b, B, A, (B, D))
        P = b.meet(kt, b.cc(B, D), L)
        return K.place(b, B, A, (B, K.foot(b, N, B, P))),
    N2 = K.extend_n(b, B, A, 2)
    D2 = K.extend_n(b, B, D, 2)
    Pq = K.place(b, B, N2, (B, D2))
    _, kt = K.thales(b, B, N2)
    O_ = b.meet(kt, b.cc(B, D), L)
    return K.place(b, B, A, (B, K.foot(b, Pq, B, O_))),


def s_p1_30(rng):
    A, B = seg(rng, 1.0, 6.0)
    C = pt(rng)
    return {"A": A, "B": B, "C": C, "D": polar(C, dist(A, B) * u(rng, 0.2, 2.5), angle(rng))}


@prop("P1.30", "Third proportional", "A B C D", "M", sample=s_p1_30, oracle=O.p1_30)
def p1_30(b, v, h):
    return K.place(b, "A", "B", K.third(b, ("A", "B"), ("C", "D"))),


def s_p1_31(rng):
    A, B = seg(rng, 1.0, 6.0)
    C, D = seg(rng, 0.5, 5.0)
    E, F = seg(rng, 0.5, 5.0)
    return dict(A=A, B=B, C=C, D=D, E=E, F=F)


@prop("P1.31", "Fourth proportional", "A B C D E F", "M", sample=s_p1_31,
      oracle=O.p1_31, variants=(1, 2))
def p1_31(b, v, h):
    if v == 1:
        s = K.mean(b, ("C", "D"), ("E", "F"))
        return K.place(b, "A", "B", K.third(b, ("A", "B"), s)),
    return K.place(b, "A", "B", K.fourth(b, ("A", "B"), ("C", "D"), ("E", "F"))),


def s_sector(rng):
    A = pt(rng, 4.0)
    r = u(rng, 1.0, 5.0)
    a0 = angle(rng)
    th = u(rng, 0.3, math.pi - 0.3) * (1 if rng.random() < 0.5 else -1)
    return {"A": A, "B": polar(A, r, a0), "D": polar(A, r, a0 + th)}


@prop("P1.32", "Bisect an angle", "A B D", "C", sample=s_sector, oracle=O.p1_32,
      variants=(1, 2))
def p1_32(b, v, h):
    return K.bisect_sector(b, "A", "B", "D", v),


@prop("P1.33", "Circle through three points", "A B C", "E", sample=s_triangle,
      oracle=O.p1_33)
def p1_33(b, v, h):
    E = K.circumcenter(b, "A", "B", "C")
    b.cc(E, "A")
    return E,


@retry
def s_arc(rng):
    O_ = pt(rng, 3.0)
    r = u(rng, 1.0, 5.0)
    a = sorted(u(rng, 0.0, 5.0) for _ in range(3))
    if min(a[1] - a[0], a[2] - a[1]) < 0.4:
        return None
    A, C, B = (polar(O_, r, t) for t in a)
    return {"A": A, "B": B, "C": C}


@prop("P1.34", "Center of an arc", "A B C", "E", sample=s_arc, oracle=O.p1_33)
def p1_34(b, v, h):
    return K.circumcenter(b, "A", "B", "C"),


@retry
def s_p1_35(rng):
    O_ = pt(rng, 3.0)
    r = u(rng, 1.0, 5.0)
    a0 = angle(rng)
    span = u(rng, 0.4, 2 * math.pi - 0.4)
    if abs(span - math.pi) < 0.3:
        return None
    tc = u(rng, 0.0, 2 * math.pi)
    # keep C away from both ends
    if min(tc, abs(tc - span), 2 * math.pi - tc) < 0.3 or abs(tc - span) < 0.3:
        return None
    return {"A": polar(O_, r, a0), "B": polar(O_, r, a0 + span), "C": polar(O_, r, a0 + tc)}


@prop("P1.35", "Bisect an arc", "A B C", "M", sample=s_p1_35, oracle=O.p1_35)
def p1_35(b, v, h):
    E = K.circumcenter(b, "A", "C", "B")
    X = K.bisect_sector(b, E, "A", "B", 1)
    a, c, x = b.pt("A"), b.pt("C"), b.pt(X)
    bb = b.pt("B")
    if cross(a, bb, c) * cross(a, bb, x) < 0:
        X = K.antipode(b, E, X)
    return X,


@retry
def s_p1_36(rng):
    D = pt(rng, 3.0)
    A, B, C = triangle(rng, 0.35)
    return {"D": D, "E": polar(D, u(rng, 1.5, 5.0), angle(rng)), "A": A, "B": B, "C": C}


@prop("P1.36", "Inscribe a similar triangle", "D E A B C", "F G", sample=s_p1_36,
      oracle=O.p1_36, variants=(1, 2))
def p1_36(b, v, h):
    f = inscribe_v1 if v == 1 else inscribe_v2
    return tuple(f(b, "D", "E", "A", "B", "C"))


def s_p1_37(rng):
    H = pt(rng, 2.0)
    A, B, C = triangle(rng, 0.45)
    return {"H": H, "M": polar(H, u(rng, 0.8, 2.5), angle(rng)), "A": A, "B": B, "C": C}


def circumscribe(b, H, M, A, B, C):
    ccw = cross(b.pt(A), b.pt(B), b.pt(C)) > 0
    br = L if ccw else R
    A2 = K.antipode(b, A, C)
    O_ = K.place(b, H, K.copy_angle(b, B, A, A2, H, M, br), (H, M))
    B2 = K.antipode(b, B, A)
    N = K.place(b, H, K.copy_angle(b, C, B, B2, H, O_, br), (H, M))

    def vertex(T1, T2):
        Pm = K.bisect_sector(b, H, T1, T2, 1)
        W = K.foot(b, Pm, H, T2)
        ov = K.fourth(b, (H, W), (W, Pm), (H, T2))
        return b.meet_other(b.circle(T2, *ov), b.circle(T1, *ov), H)
    return vertex(M, O_), vertex(O_, N), vertex(N, M)


@prop("P1.37", "Circumscribe a similar triangle", "H M A B C", "V X Y",
      sample=s_p1_37, oracle=O.p1_37)
def p1_37(b, v, h):
    return circumscribe(b, "H", "M", "A", "B", "C")


def incenter(b, A, B, C, variant=1):
    if variant == 1:
        N = K.extend_by(b, A, B, (A, C))
        T = K.cut_off(b, N, B, (B, C))
        Hh = K.halve(b, T, B)
        E = K.cut_off(b, A, B, (Hh, B))
        Pp = K.extend_by(b, N, B, (B, C))
        Sm = K.halve(b, Pp, B)
        Mab = K.halve(b, A, B)
        D = K.foot(b, C, A, B)
        r = K.fourth(b, (Sm, B), (A, Mab), (C, D))
        return K.erect(b, E, B, r, _toward(b, C, E, B))
    I = K.place(b, B, A, (B, C))
    Hc = K.place(b, C, A, (C, B))
    Lb = K.bisect_sector(b, B, I, C, 1)
    Kc = K.bisect_sector(b, C, Hc, B, 1)
    return K.ll_meet(b, B, Lb, C, Kc, along="q")


@prop("P1.38", "Circle in a triangle", "A B C", "G", sample=s_triangle, oracle=O.p1_38,
      variants=(1, 2))
def p1_38(b, v, h):
    return incenter(b, "A", "B", "C", v),


# -- 39 .. 46 ------------------------------------------------------------

def s_AC(rng):
    A, C = seg(rng, 0.5, 8.0)
    return {"A": A, "C": C, "side": side(rng)}


@prop("P1.39", "Golden section", "A C", "G", sample=s_AC, oracle=O.p1_39,
      hints={"side": "left"})
def p1_39(b, v, h):
    return golden(b, "A", "C", _br(h)),


@prop("P1.40", "Isosceles triangle with base angles double the apex", "A B", "C D",
      sample=s_seg, oracle=O.p1_40, hints={"side": "left"})
def p1_40(b, v, h):
    Cg = golden(b, "B", "A")
    return Cg, b.meet(b.cc("A", "B"), b.circle("B", "A", Cg), _br(h))


@prop("P1.41", "Pentagon in a circle", "A P", "V1 V2 V3 V4", sample=s_circle_AP,
      oracle=O.p1_41, hints={"side": "left"})
def p1_41(b, v, h):
    return tuple(pentagon(b, "A", "P", _br(h)))


@prop("P1.42", "Pentagon about a circle", "A P", "E G", sample=s_circle_AP,
      oracle=O.p1_42, hints={"side": "left"})
def p1_42(b, v, h):
    V1 = pentagon(b, "A", "P", _br(h))[0]
    D = K.bisect_sector(b, "A", "P", V1, 1)
    Fm = K.halve(b, "P", V1)
    ed = K.fourth(b, ("A", Fm), (Fm, "P"), ("A", D))
    E = K.erect(b, D, "A", ed, _toward(b, "P", D, "A"))
    return E, K.antipode(b, D, E)


def s_pentagon(rng):
    c = pt(rng, 3.0)
    r = u(rng, 1.5, 5.0)
    a0 = angle(rng)
    s = 1 if rng.random() < 0.5 else -1
    return {f"V{k}": polar(c, r, a0 + s * 2 * math.pi * k / 5) for k in range(5)}


def _pentagon_center(b):
    Ec = K.bisect_sector(b, "V2", "V3", "V1", 1)
    Fd = K.bisect_sector(b, "V3", "V2", "V4", 1)
    return K.ll_meet(b, "V2", Ec, "V3", Fd, along="q")


@prop("P1.43", "Circle in a regular pentagon", "V0 V1 V2 V3 V4", "I M",
      sample=s_pentagon, oracle=O.p1_43)
def p1_43(b, v, h):
    I = _pentagon_center(b)
    M = K.halve(b, "V0", "V1")
    b.cc(I, M)
    return I, M


@prop("P1.44", "Circle about a regular pentagon", "V0 V1 V2 V3 V4", "I",
      sample=s_pentagon, oracle=O.p1_44)
def p1_44(b, v, h):
    I = _pentagon_center(b)
    b.cc(I, "V0")
    return I,


def _m_p1_45(i, o):
    return {"B": o["B"], "K": o["K"], "side": dist(o["B"], o["K"])}


@prop("P1.45", "Pentadecagon in a circle", "A L", "B K",
      sample=lambda rng: {k: v for k, v in zip("AL", (lambda a: (a, polar(a, u(rng, 1.0, 5.0), angle(rng))))(pt(rng, 4.0)))},
      oracle=O.p1_45, measure=_m_p1_45)
def p1_45(b, v, h):
    Bt = K.hexagon(b, "A", "L", 2)[1]
    Kp = pentagon(b, "A", "L", L)[1]
    return Bt, Kp


@retry
def s_p1_46(rng):
    A, B, C = triangle(rng, 0.2)
    return {"A": A, "B": B, "C": C}


@prop("P1.46", "Parallel through a point", "A B C", "D", sample=s_p1_46, oracle=O.p1_46)
def p1_46(b, v, h):
    return K.parallel_through(b, "A", "B", "C"),


# -- 47 .. 54 ------------------------------------------------------------

@retry
def s_p1_47(rng):
    A, B, C = triangle(rng, 0.3)
    E, D, F = angle_triple(rng, 0.3, math.pi - 0.3)
    return {"A": A, "B": B, "C": C, "D": D, "E": E, "F": F}


@prop("P1.47", "Parallelogram equal to a triangle with a given angle", "A B C D E F",
      "G L M", sample=s_p1_47, oracle=O.p1_47)
def p1_47(b, v, h):
    Hh = K.parallel_through(b, "C", "A", "B")
    I = K.copy_angle(b, "E", "D", "F", "B", "A", _toward(b, "C", "B", "A"))
    Kf = K.foot(b, "B", "C", Hh)
    N = K.foot(b, I, "B", Kf)
    if b.d(N, I) <= b.eps:
        Lp = Kf
    else:
        i, a0, b0 = b.pt(I), b.pt("A"), b.pt("B")
        acute = (i[0] - b0[0]) * (a0[0] - b0[0]) + (i[1] - b0[1]) * (a0[1] - b0[1]) > 0
        kl = K.fourth(b, ("B", N), (N, I), ("B", Kf))
        Kp = K.parallel_through(b, Kf, "A", "B")
        Lp = K.place(b, Kf, Kp, kl, acute)
    G = K.halve(b, "A", "B")
    return G, Lp, K.parallel_through(b, G, Lp, "B")


@retry
def s_p1_48(rng):
    A, B, C = triangle(rng, 0.3)
    D = O.foot(C, A, B)
    if min(abs(D - complex(*A)), abs(D - complex(*B))) < 0.3:
        return None
    return {"A": A, "B": B, "C": C}


@prop("P1.48", "Rectangle equal to a triangle", "A B C", "E G", sample=s_p1_48,
      oracle=O.p1_48)
def p1_48(b, v, h):
    D = K.foot(b, "C", "A", "B")
    F = K.halve(b, "C", D)
    return K.parallel_through(b, F, "A", D), K.parallel_through(b, F, "B", D)


@retry
def s_p1_49(rng):
    A, B = seg(rng, 2.0, 7.0, half=4.0)
    E, F, G = triangle(rng, 0.3)
    H, I, Kk = angle_triple(rng, 0.3, math.pi - 0.3)
    return {"A": A, "B": B, "E": E, "F": F, "G": G, "H": H, "I": I, "K": Kk,
            "side": side(rng)}


@prop("P1.49", "Parallelogram on a segment equal to a triangle", "A B E F G H I K",
      "P Q", sample=s_p1_49, oracle=O.p1_49, hints={"side": "left"})
def p1_49(b, v, h):
    Df = K.foot(b, "F", "E", "G")
    Mh = K.halve(b, "F", Df)
    bd = K.fourth(b, ("A", "B"), ("E", "G"), (Mh, Df))
    return apply_area(b, "A", "B", bd, "H", "I", "K", _br(h))


@retry
def s_p1_50(rng):
    c = pt(rng, 3.0)
    a = sorted(u(rng, 0.0, 2 * math.pi) for _ in range(4))
    gaps = [a[1] - a[0], a[2] - a[1], a[3] - a[2], 2 * math.pi - a[3] + a[0]]
    if min(gaps) < 0.6 or max(gaps) > math.pi - 0.3:
        return None
    A, B, C, D = (polar(c, u(rng, 1.5, 4.0), t) for t in a)
    if not (angles_ok(A, B, C, 0.2) and angles_ok(A, C, D, 0.2) and convex([A, B, C, D])):
        return None
    H, I, Kk = angle_triple(rng, 0.3, math.pi - 0.3)
    return {"A": A, "B": B, "C": C, "D": D, "H": H, "I": I, "K": Kk, "side": side(rng)}


@prop("P1.50", "Parallelogram equal to a quadrilateral", "A B C D H I K", "P Q",
      sample=s_p1_50, oracle=O.p1_50, hints={"side": "left"})
def p1_50(b, v, h):
    s1 = K.triangle_square(b, "A", "C", "D")
    s2 = K.triangle_square(b, "A", "C", "B")
    bd = K.third(b, ("A", "B"), K.pythag(b, s1, s2))
    return apply_area(b, "A", "B", bd, "H", "I", "K", _br(h))


@retry
def s_p1_51(rng):
    A, C = seg(rng, 1.5, 5.0, half=3.0)
    t = u(rng, 0.3, 1.8)
    if abs(t - 1) < 0.05:
        return None
    D = polar(A, u(rng, 1.0, 4.0), angle(rng))
    E = polar(A, u(rng, 1.0, 4.0), angle(rng))
    return {"A": A, "C": C, "D": D, "E": E, "B": along(A, C, t)}


@prop("P1.51", "Similar figure on a given side", "A C D E B", "G F", sample=s_p1_51,
      oracle=O.p1_51)
def p1_51(b, v, h):
    G = K.place(b, "A", "D", K.fourth(b, ("A", "C"), ("A", "D"), ("A", "B")))
    F = K.place(b, "A", "E", K.fourth(b, ("A", "D"), ("A", "E"), ("A", G)))
    return G, F


@retry
def s_p1_52(rng):
    c = pt(rng, 2.0)
    a = sorted(u(rng, 0.0, 2 * math.pi) for _ in range(5))
    gaps = [a[i + 1] - a[i] for i in range(4)] + [2 * math.pi - a[4] + a[0]]
    if min(gaps) < 0.5 or max(gaps) > math.pi - 0.3:
        return None
    pts_ = [polar(c, u(rng, 1.5, 4.0), t) for t in a]
    if not convex(pts_):
        return None
    for i in range(5):
        if not angles_ok(pts_[i], pts_[(i + 1) % 5], pts_[(i + 2) % 5], 0.2):
            return None
    Q1, Q2, Q3 = triangle(rng, 0.3)
    return dict(zip(["B", "E", "D", "C", "A"], pts_)) | {"Q1": Q1, "Q2": Q2, "Q3": Q3}


@prop("P1.52", "Figure similar to one and equal to another", "B E D C A Q1 Q2 Q3",
      "M N O P", sample=s_p1_52, oracle=O.p1_52)
def p1_52(b, v, h):
    s1 = K.triangle_square(b, "B", "E", "D")
    s2 = K.triangle_square(b, "B", "D", "C")
    s3 = K.triangle_square(b, "B", "C", "A")
    bf = K.pythag(b, K.pythag(b, s1, s2), s3)
    bl = K.triangle_square(b, "Q1", "Q2", "Q3")
    return tuple(K.place(b, "B", X, K.fourth(b, bf, ("B", X), bl)) for X in "EDCA")


def _shape_sample(rng, names):
    c1 = pt(rng, 5.0)
    a0 = angle(rng)
    al = u(rng, 0.4, math.pi - 0.4) * (1 if rng.random() < 0.5 else -1)
    return dict(zip(names, (c1, polar(c1, u(rng, 1.0, 4.0), a0), polar(c1, u(rng, 1.0, 4.0), a0 + al))))


def _triangle_of_area(rng, names, area):
    p1 = pt(rng, 5.0)
    base = u(rng, 1.5, 4.0)
    a0 = angle(rng)
    p2 = polar(p1, base, a0)
    foot_ = along(p1, p2, u(rng, 0.2, 0.8))
    p3 = polar(foot_, 2 * area / base, a0 + math.pi / 2)
    return dict(zip(names, (p1, p2, p3)))


@retry
def s_p1_53(rng):
    B, A = seg(rng, 2.0, 7.0, half=4.0)
    out = {"B": B, "A": A} | _shape_sample(rng, ("C1", "C2", "C3"))
    sig = O.height(out["C3"], out["C1"], out["C2"]) / dist(out["C1"], out["C2"])
    top = dist(A, B) ** 2 / 4 * sig
    out |= _triangle_of_area(rng, ("D1", "D2", "D3"), top * u(rng, 0.1, 0.85))
    if not angles_ok(out["D1"], out["D2"], out["D3"], 0.15):
        return None
    return out


@prop("P1.53", "Apply a parallelogram falling short by a similar one",
      "B A C1 C2 C3 D1 D2 D3", "F G E", sample=s_p1_53, oracle=O.p1_53)
def p1_53(b, v, h):
    Mm = K.halve(b, "B", "A")
    Cf = K.foot(b, "C3", "C1", "C2")
    t1 = K.fourth(b, ("C1", "C2"), (Mm, "B"), ("C3", Cf))
    s1 = K.mean(b, (Mm, "B"), t1)
    sD = K.triangle_square(b, "D1", "D2", "D3")
    t = K.fourth(b, s1, (Mm, "B"), K.leg(b, s1, sD))
    F = K.cut_off(b, Mm, "B", t)
    w = K.fourth(b, ("C1", "C2"), ("C1", "C3"), ("B", F))
    br = L if cross(b.pt("C1"), b.pt("C2"), b.pt("C3")) > 0 else R
    E = K.place(b, "B", K.copy_angle(b, "C2", "C1", "C3", "B", "A", br), w)
    return F, K.parallel_through(b, F, E, "B"), E


@retry
def s_p1_54(rng):
    B, A = seg(rng, 2.0, 6.0, half=4.0)
    out = {"B": B, "A": A} | _shape_sample(rng, ("R1", "R2", "R3"))
    sig = O.height(out["R3"], out["R1"], out["R2"]) / dist(out["R1"], out["R2"])
    out |= _triangle_of_area(rng, ("S1", "S2", "S3"), dist(A, B) ** 2 * sig * u(rng, 0.1, 1.5))
    if not angles_ok(out["S1"], out["S2"], out["S3"], 0.15):
        return None
    return out


@prop("P1.54", "Apply a parallelogram exceeding by a similar one",
      "B A R1 R2 R3 S1 S2 S3", "G L H", sample=s_p1_54, oracle=O.p1_54)
def p1_54(b, v, h):
    Cm = K.halve(b, "B", "A")
    Rf = K.foot(b, "R3", "R1", "R2")
    t1 = K.fourth(b, ("R1", "R2"), (Cm, "A"), ("R3", Rf))
    s1 = K.mean(b, (Cm, "A"), t1)
    hyp = K.pythag(b, s1, K.triangle_square(b, "S1", "S2", "S3"))
    G = K.place(b, Cm, "A", K.fourth(b, s1, (Cm, "A"), hyp))
    w = K.fourth(b, ("R1", "R2"), ("R1", "R3"), ("A", G))
    br = L if cross(b.pt("R1"), b.pt("R2"), b.pt("R3")) > 0 else R
    Lp = K.place(b, "B", K.copy_angle(b, "R2", "R1", "R3", "B", "A", br), w)
    return G, Lp, K.parallel_through(b, G, Lp, "B")
