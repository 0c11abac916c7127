"""Closed-form answers for the catalog, written with complex arithmetic and
independent of the compass kernel.  Each function takes the input points and
the hints and returns {label: Point | float}."""

import cmath
import math

from ..geom import Point

PHI = (math.sqrt(5.0) - 1.0) / 2.0


def z(p):
    if isinstance(p, complex):
        return p
    return complex(p[0], p[1])


def P(w):
    return Point(w.real, w.imag)


def unit(w):
    return w / abs(w)


def sgn(h, key="side"):
    return 1.0 if h.get(key, "left") == "left" else -1.0


def turn(w, ang):
    return w * cmath.exp(1j * ang)


def ang(b, a, c):
    """Unsigned angle bac."""
    return abs(cmath.phase((z(c) - z(a)) / (z(b) - z(a))))


def signed(b, a, c):
    return cmath.phase((z(c) - z(a)) / (z(b) - z(a)))


def foot(p, a, b):
    a, b, p = z(a), z(b), z(p)
    e = unit(b - a)
    return a + ((p - a) * e.conjugate()).real * e


def height(p, a, b):
    return abs(z(p) - foot(p, a, b))


def area3(a, b, c):
    return abs(((z(b) - z(a)).conjugate() * (z(c) - z(a))).imag) / 2.0


def area_poly(*pts):
    s = 0.0
    for i in range(len(pts)):
        p, q = pts[i], pts[(i + 1) % len(pts)]
        s += p[0] * q[1] - q[0] * p[1]
    return abs(s) / 2.0


def orient(a, b, c):
    return 1.0 if ((z(b) - z(a)).conjugate() * (z(c) - z(a))).imag > 0 else -1.0


def circumcenter(a, b, c):
    a, b, c = z(a), z(b), z(c)
    d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    ux = (abs(a) ** 2 * (b.imag - c.imag) + abs(b) ** 2 * (c.imag - a.imag)
          + abs(c) ** 2 * (a.imag - b.imag)) / d
    uy = (abs(a) ** 2 * (c.real - b.real) + abs(b) ** 2 * (a.real - c.real)
          + abs(c) ** 2 * (b.real - a.real)) / d
    return complex(ux, uy)


def d(p, q):
    return abs(z(p) - z(q))


def circles_meet(c1, r1, c2, r2, left=True):
    """Meet of two circles, left of c1 -> c2 (analytic)."""
    dd = abs(c2 - c1)
    x = (dd * dd + r1 * r1 - r2 * r2) / (2 * dd)
    y = math.sqrt(max(r1 * r1 - x * x, 0.0))
    e = unit(c2 - c1)
    return c1 + e * complex(x, y if left else -y)


# -- part 1 -------------------------------------------------------------

def p1_1(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"C": P(A + turn(B - A, sgn(h) * math.pi / 3))}


def p1_2(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {n: P(A + turn(B - A, k * math.pi / 3)) for k, n in enumerate("CDEFG", 1)}


def p1_3(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"D": P(A + turn(B - A, 2 * math.pi / 3)), "F": P(A + turn(B - A, 4 * math.pi / 3))}


def p1_4(i, h):
    return {"E": P(2 * z(i["A"]) - z(i["B"]))}


def p1_5(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"H": P(B + h.get("n", 3) * (A - B))}


def p1_6(i, h):
    th = ang(i["B"], i["A"], i["C"])
    E = z(i["E"])
    return {"F": P(E + d(i["A"], i["B"]) * turn(unit(z(i["D"]) - E), sgn(h) * th))}


def p1_7(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"C": P(circles_meet(A, d(i["U1"], i["U2"]), B, d(i["V1"], i["V2"]),
                                h.get("side", "left") == "left"))}


def p1_8(i, h):
    A, B, C, D, X = (z(i[k]) for k in "ABCDX")
    E = D + abs(C - A) * unit(X - D)
    rot = (E - D) / (C - A)
    if h.get("orient", "direct") == "direct":
        F = D + (B - A) * rot
    else:
        F = D + ((B - A) / (C - A)).conjugate() * (E - D)
    return {"E": P(E), "F": P(F)}


def p1_9(i, h):
    return {"M": P((z(i["A"]) + z(i["B"])) / 2)}


def p1_10(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"E": P(B + math.sqrt(3) * turn(A - B, sgn(h) * math.pi / 2))}


def p1_11(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"I": P(B + 1j * (A - B)), "C": P(2 * B - A), "G": P(B - 1j * (A - B))}


def p1_12(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"E": P(B + turn(A - B, math.pi / 3)), "I": P(B + 1j * (A - B)),
            "side": 2 * abs(A - B) * math.sin(math.pi / 12)}


def p1_13(i, h):
    A, B = z(i["A"]), z(i["B"])
    I = B + sgn(h) * 1j * (A - B)
    return {"I": P(I), "K": P(A + I - B)}


def p1_14(i, h):
    A, B = z(i["A"]), z(i["B"])
    u = A - B
    v = 1j * u
    return {"K": P(B + u + v), "L": P(B + v - u), "M": P(B - u - v), "N": P(B - v + u)}


def midpoint_AB(i, h):
    return {"M": P((z(i["A"]) + z(i["B"])) / 2)}


def p1_16(i, h):
    return {"G": P((z(i["A"]) + z(i["C"])) / 2)}


def p1_19(i, h):
    return {"F": P(foot(i["A"], i["B"], i["C"]))}


def p1_20(i, h):
    A, C = z(i["A"]), z(i["C"])
    r = d(i["C"], i["K"])
    phi = math.acos(r / abs(A - C))
    return {"B": P(C + r * turn(unit(A - C), sgn(h) * phi))}


def p1_21(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"K": P(A + d(i["A"], i["C"]) * sgn(h) * 1j * unit(B - A))}


def p1_22(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"N": P(A + d(i["A"], i["C"]) * unit(A - B))}


def p1_23(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"M": P(A + d(i["A"], i["C"]) * unit(B - A))}


def p1_24(i, h):
    A, B = z(i["A"]), z(i["B"])
    n = h.get("n", 3)
    return {f"X{k}": P(A + k / n * (B - A)) for k in range(1, n)}


def p1_25(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"G": P(A + (B - A) / 3)}


def p1_26(i, h):
    A, D = z(i["A"]), z(i["D"])
    return {"E": P(A + d(i["A"], i["B"]) / d(i["A"], i["C"]) * (D - A))}


def p1_27(i, h):
    D, C = z(i["D"]), z(i["C"])
    g = math.sqrt(d(i["D"], i["C"]) * d(i["C"], i["B"]))
    return {"H": P(C + g * sgn(h) * 1j * unit(C - D))}


def p1_28(i, h):
    P1, P2 = z(i["P1"]), z(i["P2"])
    g = math.sqrt(d(i["P1"], i["P2"]) * d(i["Q1"], i["Q2"]))
    return {"H": P(P1 + g * unit(P2 - P1))}


def p1_29(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"C": P(B + d(i["B"], i["D"]) ** 2 / abs(A - B) * unit(A - B))}


def p1_30(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"M": P(A + d(i["C"], i["D"]) ** 2 / abs(B - A) * unit(B - A))}


def p1_31(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"M": P(A + d(i["C"], i["D"]) * d(i["E"], i["F"]) / abs(B - A) * unit(B - A))}


def p1_32(i, h):
    A, B, D = z(i["A"]), z(i["B"]), z(i["D"])
    return {"C": P(A + abs(B - A) * unit(unit(B - A) + unit(D - A)))}


def p1_33(i, h):
    return {"E": P(circumcenter(i["A"], i["B"], i["C"]))}


def p1_35(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    O = circumcenter(A, B, C)
    r = abs(A - O)
    m = O + r * unit((A - O) + (B - O))
    # C on the minor arc iff C and m lie on the same side of chord AB
    same = ((B - A).conjugate() * (C - A)).imag * ((B - A).conjugate() * (m - A)).imag > 0
    return {"M": P(m if same else 2 * O - m)}


def p1_36(i, h):
    D, E = z(i["D"]), z(i["E"])
    O = circumcenter(i["A"], i["B"], i["C"])
    s = (E - D) / (z(i["B"]) - O)
    return {"F": P(D + (z(i["A"]) - O) * s), "G": P(D + (z(i["C"]) - O) * s)}


def p1_37(i, h):
    H, M = z(i["H"]), z(i["M"])
    r = abs(M - H)
    s = orient(i["A"], i["B"], i["C"])
    tA = math.pi - ang(i["B"], i["A"], i["C"])
    tB = math.pi - ang(i["A"], i["B"], i["C"])
    tC = 2 * math.pi - tA - tB
    O = H + turn(M - H, s * tA)
    N = H + turn(O - H, s * tB)

    def vertex(t0, th):
        return H + r / math.cos(th / 2) * turn(unit(t0 - H), s * th / 2)
    return {"V": P(vertex(M, tA)), "X": P(vertex(O, tB)), "Y": P(vertex(N, tC))}


def p1_38(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    a, b, c = abs(B - C), abs(A - C), abs(A - B)
    return {"G": P((a * A + b * B + c * C) / (a + b + c))}


def p1_39(i, h):
    A, C = z(i["A"]), z(i["C"])
    return {"G": P(C + PHI * (A - C))}


def p1_40(i, h):
    A, B = z(i["A"]), z(i["B"])
    return {"C": P(A + PHI * (B - A)), "D": P(A + turn(B - A, sgn(h) * math.pi / 5))}


def p1_41(i, h):
    A, Pp = z(i["A"]), z(i["P"])
    return {f"V{k}": P(A + turn(Pp - A, sgn(h) * k * 2 * math.pi / 5)) for k in range(1, 5)}


def p1_42(i, h):
    A, Pp = z(i["A"]), z(i["P"])
    R = abs(Pp - A) / math.cos(math.pi / 5)
    e = unit(Pp - A)
    return {"E": P(A + R * e), "G": P(A + R * turn(e, sgn(h) * 2 * math.pi / 5))}


def p1_43(i, h):
    vs = [z(i[f"V{k}"]) for k in range(5)]
    return {"I": P(sum(vs) / 5), "M": P((vs[0] + vs[1]) / 2)}


def p1_44(i, h):
    vs = [z(i[f"V{k}"]) for k in range(5)]
    return {"I": P(sum(vs) / 5)}


def p1_45(i, h):
    A, Lp = z(i["A"]), z(i["L"])
    return {"B": P(A + turn(Lp - A, 2 * math.pi / 3)), "K": P(A + turn(Lp - A, 4 * math.pi / 5)),
            "side": 2 * abs(Lp - A) * math.sin(math.pi / 15)}


def p1_46(i, h):
    return {"D": P(z(i["A"]) + z(i["B"]) - z(i["C"]))}


def p1_47(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    th = ang(i["E"], i["D"], i["F"])
    hh = height(C, A, B)
    s = orient(B, A, C)
    Lp = B + hh / math.sin(th) * turn(unit(A - B), s * th)
    G = (A + B) / 2
    return {"G": P(G), "L": P(Lp), "M": P(G + Lp - B)}


def p1_48(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    D = foot(C, A, B)
    F = (C + D) / 2
    return {"E": P(F + A - D), "G": P(F + B - D)}


def _applied(A, B, area, th, h):
    u = unit(A - B)
    s = -sgn(h)
    Pp = B + area / (abs(A - B) * math.sin(th)) * turn(u, s * th)
    return {"P": P(Pp), "Q": P(Pp + A - B)}


def p1_49(i, h):
    A, B = z(i["A"]), z(i["B"])
    return _applied(A, B, area3(i["E"], i["F"], i["G"]), ang(i["H"], i["I"], i["K"]), h)


def p1_50(i, h):
    A, B = z(i["A"]), z(i["B"])
    return _applied(A, B, area_poly(i["A"], i["B"], i["C"], i["D"]),
                    ang(i["H"], i["I"], i["K"]), h)


def p1_51(i, h):
    A = z(i["A"])
    k = d(i["A"], i["B"]) / d(i["A"], i["C"])
    return {"G": P(A + k * (z(i["D"]) - A)), "F": P(A + k * (z(i["E"]) - A))}


def p1_52(i, h):
    B = z(i["B"])
    fig = area_poly(i["B"], i["E"], i["D"], i["C"], i["A"])
    k = math.sqrt(area3(i["Q1"], i["Q2"], i["Q3"]) / fig)
    return {n: P(B + k * (z(i[m]) - B)) for n, m in zip("MNOP", "EDCA")}


def _shape(c1, c2, c3):
    """(sigma, side factor, signed angle) of a parallelogram given by a corner
    and its two neighbours."""
    c = d(c1, c2)
    return height(c3, c1, c2) / c, d(c1, c3) / c, signed(c2, c1, c3)


def p1_53(i, h):
    B, A = z(i["B"]), z(i["A"])
    a = abs(A - B)
    sig, f, al = _shape(i["C1"], i["C2"], i["C3"])
    D = area3(i["D1"], i["D2"], i["D3"])
    x = a / 2 - math.sqrt(a * a / 4 - D / sig)
    u = unit(A - B)
    F = B + x * u
    w = x * f * turn(u, al)
    return {"F": P(F), "G": P(F + w), "E": P(B + w)}


def p1_54(i, h):
    B, A = z(i["B"]), z(i["A"])
    a = abs(A - B)
    sig, f, al = _shape(i["R1"], i["R2"], i["R3"])
    S = area3(i["S1"], i["S2"], i["S3"])
    x = -a / 2 + math.sqrt(a * a / 4 + S / sig)
    u = unit(A - B)
    G = B + (a + x) * u
    w = x * f * turn(u, al)
    return {"G": P(G), "L": P(B + w), "H": P(G + w)}


# -- part 2 -------------------------------------------------------------



def p2_1(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    G = (A + B) / 2
    R = abs(A - G)
    c = abs(A - C)
    ce = math.sqrt(2 * c * (R + c)) - c
    E = circles_meet(C, ce, G, R, h.get("side", "left") == "left")
    F = E + 2 * c * unit(E - C)
    return {"E": P(E), "F": P(F)}


def p2_2(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    G = (A + B) / 2
    R = abs(A - G)
    c = abs(A - C)
    ce = math.sqrt((R + c) * c)
    E = circles_meet(C, ce, G, R, h.get("side", "left") == "left")
    # second meet of line CE with the circle
    e = unit(E - C)
    t = 2 * ((G - C) * e.conjugate()).real     # sum of the two meet distances
    return {"E": P(E), "F": P(C + (t - ce) * e)}


def _root(f, lo, hi, n=200):
    flo = f(lo)
    for _ in range(n):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def p2_3(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    S = d(i["S1"], i["S2"])
    par = C - B          # direction of the parallel through A

    def seg_len(t):
        F = A + t * (C - A)
        e = unit(F - B)
        # E on line A + s par, on line B + r e
        m = [[e.real, -par.real], [e.imag, -par.imag]]
        rhs = A - B
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        r = (rhs.real * m[1][1] - m[0][1] * rhs.imag) / det
        return abs(B + r * e - F) - S

    t = _root(seg_len, 1e-12, 1 - 1e-12)
    F = A + t * (C - A)
    return {"F": P(F), "E": P(F + S * unit(F - B))}


def p2_4(i, h):
    A, B, C, D = (z(i[k]) for k in "ABCD")
    Rl = d(i["R1"], i["R2"])

    def seg_len(t):
        K = D + t * (C - D)
        e = unit(K - B)
        ad = D - A
        m = [[e.real, -ad.real], [e.imag, -ad.imag]]
        rhs = A - B
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        r = (rhs.real * m[1][1] - m[0][1] * rhs.imag) / det
        return abs(B + r * e - K) - Rl

    t = _root(seg_len, 1e-12, 1 - 1e-12)
    K = D + t * (C - D)
    return {"K": P(K), "I": P(K + Rl * unit(K - B))}


def p2_5(i, h):
    E, A = z(i["E"]), z(i["A"])
    e, ii = abs(E - A), d(i["A"], i["I"])
    x = -ii / 2 + math.sqrt(ii * ii / 4 + e * ii)
    return {"O": P(A + x * unit(E - A))}


def p2_6(i, h):
    A, B, E = z(i["A"]), z(i["B"]), z(i["E"])
    G = (A + B) / 2
    C = G + sgn(h) * 1j * (B - G)
    e = unit(E - C)
    t = 2 * ((G - C) * e.conjugate()).real
    return {"C": P(C), "D": P(C + t * e)}


def _tangent(Pz, Cz, r, left):
    dd = abs(Pz - Cz)
    phi = math.acos(r / dd)
    return Cz + r * turn(unit(Pz - Cz), phi if left else -phi)


def p2_7(i, h):
    A, B, C, D = (z(i[k]) for k in "ABCD")
    R1, R2 = abs(A - B), abs(C - D)
    Fe = (R1 * C - R2 * B) / (R1 - R2)
    Fi = (R1 * C + R2 * B) / (R1 + R2)
    lf = h.get("side", "left") == "left"
    return {"F": P(Fe), "G": P(_tangent(Fe, B, R1, lf)), "H": P(_tangent(Fe, C, R2, lf)),
            "I": P(Fi), "K": P(_tangent(Fi, B, R1, lf)), "L": P(_tangent(Fi, C, R2, lf))}


def p2_8(i, h):
    B, C = z(i["B"]), z(i["C"])
    s = d(i["B"], i["D"])
    diag = unit(C - B)
    q = s * (math.sqrt(2) - 1)
    rho = s * (3 - 2 * math.sqrt(2))
    return {"Q": P(B + q * math.sqrt(2) * diag), "H": P(B + (s + rho) * diag),
            "rq": q, "rh": rho}


def p2_9(i, h):
    A, C, D = z(i["A"]), z(i["C"]), z(i["D"])
    Bc = (A + C) / 2
    R = abs(A - Bc)
    F, G = (A + D) / 2, (D + C) / 2
    r1, r2 = abs(F - A), abs(G - C)
    rho = r1 * r2 / (r1 + r2)
    lf = sgn(h) > 0
    # left of A -> C for both centers
    E = circles_meet(F, r1 + rho, Bc, R - rho, lf)
    H = circles_meet(G, r2 + rho, Bc, R - rho, not lf)
    return {"E": P(E), "H": P(H), "rho": rho}


def p2_10(i, h):
    A, B, C, D = (z(i[k]) for k in "ABCD")
    e = unit(D - C)
    # line frame: origin C, x along CD
    def loc(w):
        q = (w - C) * e.conjugate()
        return q.real, q.imag
    ax, ay = loc(A)
    bx, by = loc(B)
    # G = meet of AB with the line
    t = ay / (ay - by)
    gx = ax + t * (bx - ax)
    G = C + gx * e
    tl = math.sqrt(abs(A - G) * abs(B - G))
    dirn = 1.0 if ((D - G) * e.conjugate()).real > 0 else -1.0
    K = G + dirn * tl * e
    O = circumcenter(K, A, B)
    return {"K": P(K), "O": P(O)}


def p2_11(i, h):
    A, B = z(i["A"]), z(i["B"])
    k = 3 ** 0.25 / 2
    return {"C": P(A + k / (1 + k) * (B - A))}


def p2_12(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    a, b, c = abs(B - C), abs(A - C), abs(A - B)
    p4 = (a + b + c) / 4
    w = math.sqrt(p4 * p4 - a * b / 2)
    big, small = p4 + w, p4 - w
    ec, ck = (big, small) if a >= b else (small, big)
    return {"E": P(C + ec * unit(B - C)), "K": P(C + ck * unit(A - C))}


def p2_13(i, h):
    A, B, C, D = (z(i[k]) for k in "ABCD")
    Kc = (C + D) / 2
    r = abs(C - Kc)
    E = _tangent(A, Kc, r, h.get("side", "left") == "right")
    G = (A + B) / 2
    e = unit(E - A)
    t = 2 * ((G - A) * e.conjugate()).real
    return {"E": P(E), "F": P(A + t * e)}


def p2_14(i, h):
    A, B = z(i["A"]), z(i["B"])
    R = abs(B - A) / 2

    # a square standing on the diameter with half-base x has side
    # min(2x, sqrt(R^2 - x^2)); maximise it by ternary search
    def fit(x):
        return min(2 * x, math.sqrt(max(R * R - x * x, 0.0)))
    lo, hi = 0.0, R
    for _ in range(200):
        m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if fit(m1) < fit(m2):
            lo = m1
        else:
            hi = m2
    side = fit((lo + hi) / 2)
    return {"D": P(A + side * unit(B - A)), "side": side}


def p2_15(i, h):
    A, B = z(i["A"]), z(i["B"])
    E = (A + B) / 2
    ratio = d(i["R1"], i["R2"]) / d(i["S1"], i["S2"])
    ef = abs(B - A) / 4 * ratio
    F = E + ef * sgn(h) * 1j * unit(B - A)
    return {"F": P(F), "radius": math.sqrt(ef * ef - abs(B - E) ** 2)}


def p2_16(i, h):
    A, B, C, D = (z(i[k]) for k in "ABCD")
    Fa = ang(i["F1"], i["F2"], i["F3"])
    Ga = ang(i["G1"], i["G2"], i["G3"])
    pq = d(i["P1"], i["P2"]) * d(i["Q1"], i["Q2"])
    e = unit(C - D)
    h0 = height(A, C, D)
    # y axis away from line AB
    away = 1j if ((A - D) * e.conjugate()).imag < 0 else -1j
    uG = e * (math.cos(Ga) + away * math.sin(Ga))
    uF = e * (math.cos(Fa) - away * math.sin(Fa))
    a2, a1, a0 = math.sin(Ga), h0, -pq * math.sin(Fa) / math.sin(Fa + Ga)
    t = (-a1 + math.sqrt(a1 * a1 - 4 * a2 * a0)) / (2 * a2)
    H = D + t * uG
    I = H + (h0 + t * math.sin(Ga)) / math.sin(Fa) * uF
    return {"H": P(H), "I": P(I)}


def p2_17(i, h):
    E, K = z(i["E"]), z(i["K"])
    R, r = d(i["E"], i["A"]), d(i["K"], i["H"])
    return {"M": P(E + abs(E - K) * r * r / (R * R - r * r) * unit(E - K))}


def p2_18(i, h):
    A, B, C = z(i["A"]), z(i["B"]), z(i["C"])
    Oc = circumcenter(i["F"], i["G"], i["H"])
    al = ang(i["F"], P(Oc), i["G"])
    be = ang(i["G"], P(Oc), i["H"])

    def center(X, Y, a, left):
        m = (X + Y) / 2
        n = 1j * unit(Y - X) * (1 if left else -1)
        return m + abs(Y - X) / 2 / math.tan(a) * n

    W = center(A, B, al, h.get("side", "left") == "left")
    S = center(B, C, be, h.get("side2", h.get("side", "left")) == "left")
    # second meet of the two circles through B: reflect B in line WS
    e = unit(S - W)
    E = W + ((B - W) * e.conjugate()).conjugate() * e
    return {"E": P(E)}


def _persp(Az, V, T, S, hgt):
    e = unit(T - V)
    G = V + ((Az - V) * e.conjugate()).real * e
    W = V + ((S - V) * e.conjugate()).real * e
    ag, sw = abs(Az - G), abs(S - W)
    Hp = G + (W - G) * ag / (sw + ag)
    hi = hgt * ag / (sw + ag)
    return Hp, hi, sw / (sw + ag), 1j * e


def p2_19(i, h):
    V, T, S = z(i["V"]), z(i["T"]), z(i["S"])
    Hp, hi, _, up = _persp(z(i["A"]), V, T, S, d(i["S"], i["Z"]))
    return {"H": P(Hp), "I": P(Hp + hi * up)}


def p2_20(i, h):
    V, T, S = z(i["V"]), z(i["T"]), z(i["S"])
    out = {}
    for src, dst in (("A", "I"), ("B", "M"), ("C", "F")):
        Hp, hi, _, up = _persp(z(i[src]), V, T, S, d(i["S"], i["Z"]))
        out[dst] = P(Hp + hi * up)
    return out


def p2_21(i, h):
    V, T, S = z(i["V"]), z(i["T"]), z(i["S"])
    Hp, hi, k, up = _persp(z(i["A"]), V, T, S, d(i["S"], i["Z"]))
    I = Hp + hi * up
    return {"I": P(I), "P": P(I + k * d(i["A"], i["B"]) * up)}


def p2_22(i, h):
    A, B, C, D, S = (z(i[k]) for k in "ABCDS")
    s = abs(D - C)
    hgt = d(i["S"], i["Z"])
    out = {}
    for src, img, top in (("A", "I", "P"), ("B", "M", "N")):
        Hp, hi, k, up = _persp(z(i[src]), C, D, S, hgt)
        out[img] = P(Hp + hi * up)
        out[top] = P(Hp + hi * up + k * s * up)
    up = 1j * unit(D - C)
    out["Q"] = P(C + s * up)
    out["R"] = P(D + s * up)
    return out
