"""Part two: intersections, tangencies, partitions, a centre of gravity,
resection and perspective, all with the compass alone."""

import math

from ..geom import (Branch, DangerCircle, NoSolution, ObserverOnGlass, Point, cross)
from . import kernel as K
from . import oracles as O
from .catalog import prop, unsupported
from .part1 import _br, _flip, divide_ratio
from .sampling import (along, angle, dist, polar, pt, retry, seg, side, triangle, turn, u)

L, R = K.L, K.R


def _mean_less_half(b, m_pair, a_pair):
    """Pair of length sqrt((m/4 + a) m) - m/2."""
    M0, M1 = m_pair
    h = K.halve(b, M0, M1)
    q = K.halve(b, h, M1)
    s = K.sum_pair(b, (q, M1), a_pair)
    g = K.mean(b, s, m_pair)
    return K.diff_pair(b, g, (h, M1))


def _offside(rng, A, B, lo, hi, sign):
    """Point at distance in [lo, hi] from line AB on the given side."""
    t = u(rng, -0.3, 1.3)
    base = along(A, B, t)
    e = turn(Point(0.0, 0.0), Point(B.x - A.x, B.y - A.y), sign * math.pi / 2)
    n = math.hypot(e.x, e.y)
    d = u(rng, lo, hi)
    return Point(base.x + d * e.x / n, base.y + d * e.y / n)


# -- 1 .. 6: intersections ------------------------------------------------

@retry
def s_outside(rng):
    A, B = seg(rng, 2.0, 8.0, half=4.0)
    r = dist(A, B) / 2
    c = r * u(rng, 0.15, 0.95)
    C = along(A, B, -c / dist(A, B))
    return {"A": A, "B": B, "C": C, "side": side(rng)}


def _second_meet(b, G, A, C, E):
    """Other meet of line CE with circle(G, A): G mirrored in CE gives a
    circle through both meets."""
    Hm = K.reflect(b, G, C, E)
    return b.meet_other(b.cc(Hm, E), b.cc(G, A), E)


@prop("P2.1", "Secant from an outside point with chord twice a given length", "A B C",
      "E F", sample=s_outside, oracle=O.p2_1, variants=(1, 2), hints={"side": "left"})
def p2_1(b, v, h):
    A, B, C = "A", "B", "C"
    br = _br(h)
    G = K.halve(b, A, B)
    if v == 1:
        X = K.extend_by(b, B, C, (A, C))          # |CX| = diameter + 2 AC
        ce = K.diff_pair(b, K.mean(b, (C, A), (C, X)), (A, C))
        E = b.meet_side(b.circle(C, *ce), b.cc(G, A), C, G, br)
        return E, _second_meet(b, G, A, C, E)
    Q = b.meet(b.cc(G, A), b.circle(A, A, K.antipode(b, C, A)), L)   # chord 2 AC
    f = K.foot(b, G, A, Q)
    T = K.tangent_point(b, C, G, f, _flip(br))
    return K.cut_off(b, T, C, (A, C)), K.extend_by(b, T, C, (A, C))


@prop("P2.2", "Secant whose outer part times chord equals AC times the radius", "A B C",
      "E F", sample=s_outside, oracle=O.p2_2, hints={"side": "left"})
def p2_2(b, v, h):
    A, B, C = "A", "B", "C"
    G = K.halve(b, A, B)
    ce = K.mean(b, (C, G), (C, A))
    E = b.meet_side(b.circle(C, *ce), b.cc(G, A), C, G, _br(h))
    return E, _second_meet(b, G, A, C, E)


def s_p2_3(rng):
    A, B = seg(rng, 2.0, 6.0, half=4.0)
    C = turn(A, B, math.pi / 3 if rng.random() < 0.5 else -math.pi / 3)
    S1 = pt(rng)
    return {"C": C, "A": A, "B": B, "S1": S1,
            "S2": polar(S1, dist(A, B) * u(rng, 0.2, 2.5), angle(rng))}


@prop("P2.3", "Line through a triangle vertex cut to a given length", "C A B S1 S2",
      "F E", sample=s_p2_3, oracle=O.p2_3)
def p2_3(b, v, h):
    C, A, B = "C", "A", "B"
    G = K.halve(b, B, C)
    Lp = K.erect(b, G, B, ("S1", "S2"), L)
    m = (K.cut_off(b, B, Lp, (B, G)), Lp)        # |BL| - |BG|
    F = K.place(b, A, C, _mean_less_half(b, m, (B, C)))
    return F, K.extend_by(b, F, B, ("S1", "S2"))


def s_p2_4(rng):
    A, B = seg(rng, 1.5, 6.0, half=4.0)
    sgn = 1 if rng.random() < 0.5 else -1
    D = turn(A, B, sgn * math.pi / 2)
    C = Point(B.x + D.x - A.x, B.y + D.y - A.y)
    R1 = pt(rng)
    return {"A": A, "B": B, "C": C, "D": D, "R1": R1,
            "R2": polar(R1, dist(A, B) * u(rng, 0.2, 2.5), angle(rng))}


@prop("P2.4", "Line through a square corner cut to a given length", "A B C D R1 R2",
      "K I", sample=s_p2_4, oracle=O.p2_4)
def p2_4(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    E = K.erect(b, A, D, ("R1", "R2"), L)
    f = (K.cut_off(b, D, E, (D, A)), E)           # |ED| - |AD|
    Kk = K.place(b, D, C, _mean_less_half(b, f, (A, D)))
    return Kk, K.extend_by(b, Kk, B, ("R1", "R2"))


def s_p2_5(rng):
    A = pt(rng, 4.0)
    a = angle(rng)
    return {"A": A, "E": polar(A, u(rng, 0.5, 5.0), a + math.pi),
            "I": polar(A, u(rng, 0.5, 5.0), a), "side": side(rng)}


@prop("P2.5", "Point whose square relates to a rectangle in a given ratio", "E A I", "O",
      sample=s_p2_5, oracle=O.p2_5, variants=(1, 2))
def p2_5(b, v, h):
    E, A, I = "E", "A", "I"
    if v == 2:
        Kk = K.mean_on_line(b, E, A, I)
        M = K.halve(b, I, A)
        return K.cut_off(b, M, E, (M, Kk)),
    Y = K.erect(b, A, I, (A, E), L)
    Rr = K.erect(b, I, A, (I, A), L)              # the other side of AI
    S = K.halve(b, Y, Rr)
    T = K.foot(b, S, I, A)
    if b.d(S, T) <= b.eps:
        return K.place(b, T, E, (S, Rr)),
    W = K.extend_by(b, S, T, (S, Rr))             # TW = ST + SR
    X = K.lay(b, S, T, (S, Rr))                   # TX = SR - ST
    Hh = K.mean_on_line(b, W, T, X)
    return K.place(b, T, E, (T, Hh)),


def s_p2_6(rng):
    A, B = seg(rng, 2.0, 8.0, half=4.0)
    return {"A": A, "B": B, "E": along(A, B, u(rng, 0.1, 0.9)), "side": side(rng)}


@prop("P2.6", "Chord through the arc midpoint dividing the diameter harmonically",
      "A B E", "C D", sample=s_p2_6, oracle=O.p2_6, hints={"side": "left"})
def p2_6(b, v, h):
    A, B, E = "A", "B", "E"
    G = K.halve(b, A, B)
    C = K.rot90(b, G, B, _br(h))
    return C, K.extend_by(b, E, C, K.fourth(b, (C, E), (A, E), (E, B)))


# -- 7 .. 10: tangency ----------------------------------------------------

@retry
def s_p2_7(rng):
    B = pt(rng, 4.0)
    r1 = u(rng, 1.0, 3.0)
    r2 = r1 * u(rng, 0.2, 0.8)
    C = polar(B, (r1 + r2) * u(rng, 1.3, 2.5), angle(rng))
    return {"A": polar(B, r1, angle(rng)), "B": B, "C": C, "D": polar(C, r2, angle(rng)),
            "side": side(rng)}


@prop("P2.7", "Common tangents of two circles", "A B C D", "F G H I K L",
      sample=s_p2_7, oracle=O.p2_7, hints={"side": "left"})
def p2_7(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    br = _br(h)
    P = K.cut_off(b, B, A, (C, D))                # AB - CD
    F = K.extend_by(b, C, B, K.fourth(b, (P, A), (B, C), (C, D)))
    Q = K.extend_by(b, B, A, (C, D))              # AB + CD
    I = K.cut_off(b, C, B, K.fourth(b, (Q, A), (B, C), (C, D)))
    return (F, K.tangent_point(b, F, B, A, br), K.tangent_point(b, F, C, D, br),
            I, K.tangent_point(b, I, B, A, br), K.tangent_point(b, I, C, D, br))


def s_p2_8(rng):
    B, D = seg(rng, 1.5, 6.0, half=4.0)
    sgn = 1 if rng.random() < 0.5 else -1
    A = turn(B, D, sgn * math.pi / 2)
    return {"A": A, "B": B, "C": Point(A.x + D.x - B.x, A.y + D.y - B.y), "D": D}


def _m_p2_8(i, o):
    return {"Q": o["Q"], "H": o["H"], "rq": dist(o["Q"], o["M"]), "rh": dist(o["H"], o["G"])}


@prop("P2.8", "Circles touching a square and its quarter circle", "A B C D", "Q M H G",
      sample=s_p2_8, oracle=O.p2_8, measure=_m_p2_8)
def p2_8(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    E = K.cut_off(b, B, C, (B, D))                # EC: radius of the larger circle
    M = K.cut_off(b, B, D, (E, C))
    N = K.cut_off(b, B, A, (E, C))
    Q = K.parallel_through(b, M, N, B)
    F = K.foot(b, E, C, D)
    S = K.extend_by(b, E, C, (E, F))              # CE + EF
    cg = K.fourth(b, (S, C), (C, E), (E, F))
    return Q, M, K.extend_by(b, E, B, cg), K.cut_off(b, C, D, cg)


def s_p2_9(rng):
    A, C = seg(rng, 3.0, 9.0, half=4.0)
    return {"A": A, "C": C, "D": along(A, C, u(rng, 0.2, 0.8)), "side": side(rng)}


def _m_p2_9(i, o):
    return {"E": o["E"], "H": o["H"], "rho": dist(o["E"], o["P"])}


@prop("P2.9", "Circles in the arbelos touching the dividing perpendicular", "A C D",
      "E H P O", sample=s_p2_9, oracle=O.p2_9, measure=_m_p2_9, hints={"side": "left"})
def p2_9(b, v, h):
    A, C, D = "A", "C", "D"
    br = _br(h)
    Bc = K.halve(b, A, C)
    F = K.halve(b, A, D)
    G = K.halve(b, D, C)
    rho = K.diff_pair(b, (A, F), K.third(b, (A, Bc), (A, F)))
    big = (K.cut_off(b, Bc, A, rho), A)           # R - rho
    E = b.meet_side(b.circle(F, A, K.extend_by(b, F, A, rho)), b.circle(Bc, *big), F, Bc, br)
    Hh = b.meet_side(b.circle(G, C, K.extend_by(b, G, C, rho)), b.circle(Bc, *big), G, Bc,
                     _flip(br))
    Kd = K.mean_on_line(b, A, D, C, br)
    return E, Hh, K.foot(b, E, D, Kd), K.foot(b, Hh, D, Kd)


@retry
def s_p2_10(rng):
    C, D = seg(rng, 3.0, 8.0, half=4.0)
    A = _offside(rng, C, D, 0.5, 4.0, 1)
    B = _offside(rng, C, D, 0.5, 4.0, 1)
    if dist(A, B) < 1.0:
        return None
    hA, hB = O.height(A, C, D), O.height(B, C, D)
    if abs(hA - hB) < 0.3 * dist(A, B):
        return None
    g = O.z(A) + hA / (hA - hB) * (O.z(B) - O.z(A))
    if abs(g) > 9.0 or abs(g - O.z(D)) < 0.5:
        return None
    return {"A": A, "B": B, "C": C, "D": D}


@prop("P2.10", "Circle through two points touching a line", "A B C D", "K O",
      sample=s_p2_10, oracle=O.p2_10)
def p2_10(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    E = K.foot(b, B, C, D)
    F = K.foot(b, A, B, E)
    if b.d(A, F) <= b.eps:
        G = E
    else:
        eg = K.fourth(b, (B, F), (A, F), (B, E))
        toward = b.d(F, E) < b.d(B, E)            # A nearer the line: G lies past A
        G = K.place(b, E, K.parallel_through(b, E, A, F), eg, toward)
    Kk = K.place(b, G, D, K.mean(b, (G, A), (G, B)))
    return Kk, K.circumcenter(b, Kk, A, B)


# -- 11 .. 16: partitions -------------------------------------------------

@prop("P2.11", "Divide a segment so a triangle on one part equals a square on the other",
      "A B", "C", sample=lambda rng: dict(zip("AB", seg(rng, 1.0, 8.0))), oracle=O.p2_11)
def p2_11(b, v, h):
    A, B = "A", "B"
    Fq = K.apex(b, B, A)
    Hm = K.halve(b, B, A)
    X = K.extend_by(b, A, B, K.mean(b, (Hm, B), (Hm, Fq)))
    return divide_ratio(b, B, A, A, X),


@retry
def s_p2_12(rng):
    A, B, C = triangle(rng, 0.3)
    a, bb, c = dist(B, C), dist(A, C), dist(A, B)
    p4 = (a + bb + c) / 4
    disc = p4 * p4 - a * bb / 2
    if disc < 0.05 * p4 * p4:
        return None
    w = math.sqrt(disc)
    ec, ck = (p4 + w, p4 - w) if a >= bb else (p4 - w, p4 + w)
    if ec > 0.95 * a or ck > 0.95 * bb:
        return None
    return {"A": A, "B": B, "C": C}


@prop("P2.12", "Line halving a triangle's area and perimeter", "A B C", "E K",
      sample=s_p2_12, oracle=O.p2_12)
def p2_12(b, v, h):
    A, B, C = "A", "B", "C"
    g = K.mean(b, (B, C), (K.halve(b, A, C), C))
    per = K.sum_pair(b, K.sum_pair(b, (B, C), (A, C)), (A, B))
    h1 = K.halve(b, *per)
    q = (K.halve(b, h1, per[1]), per[1])
    w = K.leg(b, q, g)
    big, small = K.sum_pair(b, q, w), K.diff_pair(b, q, w)
    ec, ck = (big, small) if b.d(B, C) >= b.d(A, C) else (small, big)
    return K.place(b, C, B, ec), K.place(b, C, A, ck)


def s_p2_13(rng):
    A, e = seg(rng, 1.0, 1.0, half=4.0)
    ts = sorted(u(rng, 1.0, 8.0) for _ in range(3))
    if ts[1] - ts[0] < 0.5 or ts[2] - ts[1] < 0.5:
        ts = [ts[0], ts[0] + 0.5 + ts[1] - ts[0], ts[0] + 1.5 + ts[2] - ts[0]]
    Bp, Cp, Dp = (along(A, e, t) for t in ts)
    return {"A": A, "B": Bp, "C": Cp, "D": Dp, "side": side(rng)}


@prop("P2.13", "Shortest segment between two semicircles in line with a corner",
      "A B C D", "E F", sample=s_p2_13, oracle=O.p2_13, hints={"side": "left"})
def p2_13(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    E = K.tangent_point(b, A, K.halve(b, C, D), C, _flip(_br(h)))
    S = K.foot(b, K.halve(b, A, B), A, E)
    return E, K.extend_n(b, A, S, 2)


def _m_p2_14(i, o):
    return {"D": o["D"], "side": dist(i["A"], o["D"])}


@prop("P2.14", "Largest square in a semicircle", "A B", "D",
      sample=lambda rng: dict(zip("AB", seg(rng, 1.0, 8.0))), oracle=O.p2_14,
      measure=_m_p2_14)
def p2_14(b, v, h):
    A, B = "A", "B"
    fifth = K.inverse(b, A, B, K.extend_n(b, A, B, 5))
    return K.place(b, A, B, K.mean(b, (A, B), (A, fifth))),


def s_p2_15(rng):
    A, B = seg(rng, 1.0, 6.0, half=4.0)
    S1, R1 = pt(rng), pt(rng)
    s = u(rng, 0.3, 1.5)
    return {"A": A, "B": B, "S1": S1, "S2": polar(S1, s, angle(rng)),
            "R1": R1, "R2": polar(R1, s * u(rng, 4.0, 8.0), angle(rng)), "side": side(rng)}


def _m_p2_15(i, o):
    return {"F": o["F"], "radius": dist(o["F"], o["C"])}


@prop("P2.15", "Locus where the squares on two sides relate to the triangle", "A B R1 R2 S1 S2",
      "F C", sample=s_p2_15, oracle=O.p2_15, measure=_m_p2_15, hints={"side": "left"})
def p2_15(b, v, h):
    A, B = "A", "B"
    E = K.halve(b, A, B)
    quarter = (K.halve(b, E, B), B)
    F = K.erect(b, E, B, K.fourth(b, ("S1", "S2"), ("R1", "R2"), quarter), _br(h))
    _, kt = K.thales(b, E, F)
    return F, b.meet(kt, b.cc(E, B), L)


@retry
def s_p2_16(rng):
    D, C = seg(rng, 2.0, 6.0, half=3.0)
    sgn = 1 if rng.random() < 0.5 else -1
    h0 = u(rng, 1.0, 3.0)
    e = Point((C.x - D.x) / dist(C, D), (C.y - D.y) / dist(C, D))
    n = Point(-sgn * e.y, sgn * e.x)
    t = u(rng, -2.0, 2.0)
    A = Point(D.x + t * e.x + h0 * n.x, D.y + t * e.y + h0 * n.y)
    Bp = polar(A, u(rng, 1.5, 4.0), math.atan2(e.y, e.x))
    fa, ga = u(rng, 0.5, 1.3), u(rng, 0.5, 1.3)
    F2, G2 = pt(rng, 5.0), pt(rng, 5.0)
    a1, a2 = angle(rng), angle(rng)
    P1, Q1 = pt(rng), pt(rng)
    return {"A": A, "B": Bp, "C": C, "D": D,
            "F1": polar(F2, u(rng, 1.0, 3.0), a1), "F2": F2, "F3": polar(F2, u(rng, 1.0, 3.0), a1 + fa),
            "G1": polar(G2, u(rng, 1.0, 3.0), a2), "G2": G2, "G3": polar(G2, u(rng, 1.0, 3.0), a2 - ga),
            "P1": P1, "P2": polar(P1, u(rng, 0.5, 3.0), angle(rng)),
            "Q1": Q1, "Q2": polar(Q1, u(rng, 0.5, 3.0), angle(rng))}


@prop("P2.16", "Parallelogram of given area and angles between two parallels",
      "A B C D F1 F2 F3 G1 G2 G3 P1 P2 Q1 Q2", "H I", sample=s_p2_16, oracle=O.p2_16,
      reconstructed=True)
def p2_16(b, v, h):
    A, B, C, D = "A", "B", "C", "D"
    toward_ab = L if cross(b.pt(D), b.pt(C), b.pt(A)) > 0 else R
    Gp = K.copy_angle(b, "G1", "G2", "G3", D, C, _flip(toward_ab))
    Fp = K.copy_angle(b, "F1", "F2", "F3", D, C, toward_ab)
    Z = K.ll_meet(b, D, Gp, A, B)
    I0 = K.ll_meet(b, D, Fp, A, B)
    h0 = (D, K.foot(b, D, A, B))
    uu = K.fourth(b, h0, ("P1", "P2"), ("Q1", "Q2"))
    vv = K.fourth(b, (Z, I0), uu, (Z, D))
    root = K.mean(b, vv, (Z, D))
    Kp = K.erect(b, D, Z, root, L)
    Mz = K.halve(b, D, Z)
    Hh = K.place(b, Mz, D, (Mz, Kp))
    return Hh, K.ll_meet(b, Hh, K.parallel_through(b, Hh, I0, D), A, B)


# -- 17: centre of gravity -----------------------------------------------

@retry
def s_p2_17(rng):
    E = pt(rng, 3.0)
    big = u(rng, 2.0, 5.0)
    r = big * u(rng, 0.2, 0.7)
    off = u(rng, 0.3, big - r - 0.1) if big - r - 0.1 > 0.3 else None
    if off is None:
        return None
    Kc = polar(E, off, angle(rng))
    return {"E": E, "A": polar(E, big, angle(rng)), "K": Kc, "H": polar(Kc, r, angle(rng))}


@prop("P2.17", "Centre of gravity of a circle with a circular hole", "E A K H", "M",
      sample=s_p2_17, oracle=O.p2_17)
def p2_17(b, v, h):
    E, A, Kc, H = "E", "A", "K", "H"
    C = K.extend_by(b, E, Kc, (E, A))
    Af = K.antipode(b, E, C)
    D = b.meet(b.cc(E, C), b.circle(C, H, K.antipode(b, Kc, H)), L)
    dl = K.third(b, (Af, D), (D, C))
    return K.extend_by(b, E, Kc, K.fourth(b, (Af, D), dl, (E, Kc))),


# -- 18: resection ---------------------------------------------------------

def capacity_center(b, X, Y, arm, vertex, arm2, pivot, br):
    """Centre of the circle over XY from which XY is seen under the angle
    arm-vertex-arm2, on side br of X -> Y (for an acute angle)."""
    Kk = K.copy_angle(b, arm, vertex, arm2, pivot, Y if pivot == X else X, L)
    Lp = K.erect(b, pivot, Kk, (pivot, Kk), L)
    other = Y if pivot == X else X
    Mf = K.foot(b, Lp, pivot, other)
    half = K.halve(b, X, Y)
    rad = K.fourth(b, (pivot, Mf), (pivot, Lp), (pivot, half))
    a, vv, c = b.pt(arm), b.pt(vertex), b.pt(arm2)
    obtuse = (a[0] - vv[0]) * (c[0] - vv[0]) + (a[1] - vv[1]) * (c[1] - vv[1]) < 0
    return b.meet_side(b.circle(X, *rad), b.circle(Y, *rad), X, Y, _flip(br) if obtuse else br)


def resect(b, A, B, C, F, G, H, br1, br2):
    Ec = K.circumcenter(b, F, G, H)
    W = capacity_center(b, A, B, F, Ec, G, A, br1)
    S = capacity_center(b, B, C, G, Ec, H, C, br2)
    if b.d(W, S) <= 1e3 * b.eps:
        raise DangerCircle("the two capacity circles coincide")
    E = b.meet_other(b.cc(W, B), b.cc(S, B), B)
    if b.d(E, B) <= 1e3 * b.eps:
        raise NoSolution("capacity circles meet only at B")
    return E


def _ang(a, v, c):
    return abs(math.atan2(cross(v, a, c), (a.x - v.x) * (c.x - v.x) + (a.y - v.y) * (c.y - v.y)))


@retry
def s_p2_18(rng):
    A, B, C = triangle(rng, 0.3, half=5.0)
    E = pt(rng, 6.0)
    if min(dist(E, A), dist(E, B), dist(E, C)) < 1.0:
        return None
    al, be = _ang(A, E, B), _ang(B, E, C)
    if min(al, be) < 0.3 or max(al, be) > math.pi - 0.3:
        return None
    if abs(al - math.pi / 2) < 0.1 or abs(be - math.pi / 2) < 0.1:
        return None
    W, S = O.circumcenter(A, B, E), O.circumcenter(B, C, E)
    if abs(W - S) < 0.5 or abs(O.circumcenter(A, B, C) - O.circumcenter(A, B, E)) < 0.5:
        return None
    Oc = pt(rng, 3.0)
    r = u(rng, 1.0, 4.0)
    th = angle(rng)
    s = 1 if rng.random() < 0.5 else -1
    out = {"A": A, "B": B, "C": C, "F": polar(Oc, r, th - s * al), "G": polar(Oc, r, th),
           "H": polar(Oc, r, th + s * be)}
    out["side"] = "left" if cross(A, B, E) > 0 else "right"
    out["side2"] = "left" if cross(B, C, E) > 0 else "right"
    return out


@prop("P2.18", "Resection from two observed angles", "A B C F G H", "E",
      sample=s_p2_18, oracle=O.p2_18, hints={"side": "left", "side2": "left"})
def p2_18(b, v, h):
    return resect(b, "A", "B", "C", "F", "G", "H", _br(h), _br(h, "side2")),


# -- 19 .. 22: perspective -------------------------------------------------

def image(b, A, V, T, S, Z):
    """(H, I, X, W): H the foot of the image of floor point A on the glass
    base, I the image; X with |XS| = SW + AG and W the observer's foot."""
    G = K.foot(b, A, V, T)
    W = K.foot(b, S, V, T)
    if b.d(S, W) <= b.eps:
        raise ObserverOnGlass("observer stands on the glass base")
    if b.d(A, G) <= b.eps:
        return G, G, None, W
    X = K.extend_by(b, W, S, (A, G))
    Hh = G if b.d(G, W) <= b.eps else K.place(b, G, W, K.fourth(b, (X, S), (A, G), (G, W)))
    hi = K.fourth(b, (X, S), (A, G), (S, Z))
    far, br = (T, L) if b.d(Hh, T) >= b.d(Hh, V) else (V, R)
    return Hh, K.erect(b, Hh, far, hi, br), X, W


def raise_image(b, I, Hh, X, S, W, height):
    """Point above image I for a floor point lifted by |height|."""
    ip = K.fourth(b, (X, S), (S, W), height)
    return K.extend_by(b, I, Hh, ip)


def s_persp(rng, names="A"):
    V, T = seg(rng, 3.0, 8.0, half=4.0)
    S = _offside(rng, V, T, 1.0, 4.0, -1)
    out = {"V": V, "T": T, "S": S, "Z": polar(S, u(rng, 0.5, 4.0), angle(rng))}
    for n in names:
        out[n] = _offside(rng, V, T, 0.3, 4.0, 1)
    return out


@prop("P2.19", "Perspective image of a floor point", "A V T S Z", "H I",
      sample=s_persp, oracle=O.p2_19)
def p2_19(b, v, h):
    Hh, I, _, _ = image(b, "A", "V", "T", "S", "Z")
    return Hh, I


@prop("P2.20", "Perspective image of a triangle", "A B C V T S Z", "I M F",
      sample=lambda rng: s_persp(rng, "ABC"), oracle=O.p2_20)
def p2_20(b, v, h):
    return tuple(image(b, n, "V", "T", "S", "Z")[1] for n in "ABC")


def s_p2_21(rng):
    out = s_persp(rng)
    out["B"] = polar(out["A"], u(rng, 0.5, 4.0), angle(rng))
    return out


@prop("P2.21", "Perspective image of a raised point", "A B V T S Z", "I P",
      sample=s_p2_21, oracle=O.p2_21)
def p2_21(b, v, h):
    Hh, I, X, W = image(b, "A", "V", "T", "S", "Z")
    return I, raise_image(b, I, Hh, X, "S", W, ("A", "B"))


@retry
def s_p2_22(rng):
    C, D = seg(rng, 1.5, 5.0, half=4.0)
    e = Point(D.x - C.x, D.y - C.y)
    n = Point(-e.y, e.x)                          # floor side: left of C -> D
    A = Point(D.x + n.x, D.y + n.y)
    B = Point(C.x + n.x, C.y + n.y)
    S = _offside(rng, C, D, 1.0, 4.0, -1)
    return {"A": A, "B": B, "C": C, "D": D, "S": S,
            "Z": polar(S, u(rng, 0.5, 4.0), angle(rng))}


@prop("P2.22", "Perspective image of a cube standing on the glass base", "A B C D S Z",
      "I M P N Q R", sample=s_p2_22, oracle=O.p2_22)
def p2_22(b, v, h):
    C, D = "C", "D"
    Ha, I, Xa, Wa = image(b, "A", C, D, "S", "Z")
    Hb, M, Xb, Wb = image(b, "B", C, D, "S", "Z")
    P = raise_image(b, I, Ha, Xa, "S", Wa, (C, D))
    N = raise_image(b, M, Hb, Xb, "S", Wb, (C, D))
    return I, M, P, N, K.erect(b, C, D, (C, D), L), K.erect(b, D, C, (C, D), R)


unsupported("P2.23", "Horizontal sundial",
            "the hour lines are drawn lines through the pole, not constructed points")
unsupported("P2.24", "Vertical declining sundial",
            "the hour lines are drawn lines through the pole, not constructed points")
