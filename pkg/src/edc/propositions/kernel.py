"""Compass-only toolbox shared by the catalog and the transpiler.

Every function takes a Builder and point names, appends circle/meet steps and
returns the name of the constructed point (or a pair of names standing for a
length).  Choices between the two meets of a circle pair are made from the
geometry at expansion time and recorded as fixed branches.
"""

import math

from ..geom import (Branch, CollinearPoints, DegenerateInput, LengthOutOfRange,
                    ParallelLines, Side, cross, side_of)

L, R = Branch.LEFT, Branch.RIGHT


def _check_distinct(b, p, q):
    if b.d(p, q) <= b.eps:
        raise DegenerateInput(f"{p} and {q} coincide")


def apex(b, A, B, br=L):
    """Third vertex of the equilateral triangle on AB (two arcs of opening AB)."""
    _check_distinct(b, A, B)
    return b.mark(A, (A, B), B, (A, B), br)


def hexagon(b, O, P, count, br=L):
    """Marks of opening OP stepped around circle(O, P) from P
    (counterclockwise for Left)."""
    k0 = b.cc(O, P)
    marks, q = [], P
    for _ in range(count):
        q = b.meet(k0, b.circle(q, O, P), br)
        marks.append(q)
    return marks


def antipode(b, O, P):
    """2O - P: three hexagon marks from P land opposite it."""
    _check_distinct(b, O, P)
    return hexagon(b, O, P, 3)[-1]


def extend_n(b, A, B, n):
    """A + n(B - A) by repeated antipodes."""
    _check_distinct(b, A, B)
    prev, cur = A, B
    for _ in range(n - 1):
        prev, cur = cur, antipode(b, cur, prev)
    return cur


def rot90(b, O, P, br=L):
    """P turned a quarter about O (Left = counterclockwise): the square mark
    found from the hexagon marks of circle(O, P)."""
    q1, q2, c = hexagon(b, O, P, 3)
    h = b.mark(P, (P, q2), c, (c, q1), L)   # |OH| = r*sqrt(2)
    return b.meet(b.cc(O, P), b.circle(P, O, h), br)


def inverse(b, O, Rp, X):
    """Inverse of X in circle(O, |O Rp|); needs |OX| > |O Rp| / 2."""
    k = b.cc(O, Rp)
    kx = b.cc(X, O)
    f1 = b.meet(k, kx, L)
    f2 = b.meet(k, kx, R)
    return b.meet_other(b.cc(f1, O), b.cc(f2, O), O)


def halve(b, A, B):
    """Midpoint of AB: the inverse of 2B - A in circle(A, AB)."""
    _check_distinct(b, A, B)
    return inverse(b, A, B, antipode(b, B, A))


def thales(b, A, B):
    """Circle on diameter AB; returns (center, circle)."""
    m = halve(b, A, B)
    return m, b.cc(m, A)


def on_line(b, P, A, B):
    return side_of(b.pt(P), b.pt(A), b.pt(B), b.tol) is Side.ON


def reflect(b, P, A, B):
    """Mirror of P in line AB: arcs about A and B through P meet again there."""
    _check_distinct(b, A, B)
    if on_line(b, P, A, B):
        return P
    return b.meet_other(b.cc(A, P), b.cc(B, P), P)


def foot(b, P, A, B):
    """Foot of the perpendicular from P on line AB (P itself if on the line)."""
    d = reflect(b, P, A, B)
    if d == P:
        return P
    return halve(b, P, d)


def erect(b, A, B, len_pair, br=L, variant=2):
    """K with AK perpendicular to AB and |AK| = |len_pair| on side br of A -> B."""
    _check_distinct(b, A, B)
    a = b.d(A, B)
    ln = b.d(*len_pair)
    if ln <= b.eps:
        raise LengthOutOfRange("length vanishes")
    limit = a if variant == 1 else 1.5 * a
    if ln > limit + b.eps:
        if variant == 1 and ln <= a * (1 + 1e-12):
            pass
        else:
            n = max(2, math.ceil(ln / (0.9 * limit)))
            B = extend_n(b, A, B, n)
            a = b.d(A, B)
    if variant == 1:
        return _erect_v1(b, A, B, len_pair, br)
    return _erect_v2(b, A, B, len_pair, br)


def _erect_v1(b, A, B, len_pair, br):
    g, kt = thales(b, A, B)
    ka = b.circle(A, *len_pair)
    c = b.meet(kt, ka, L)
    sq = rot90(b, g, A, L)                 # AL = BL
    d = antipode(b, sq, B)                 # |BD| = a sqrt 2
    if b.d(B, c) <= b.eps:
        f = d
    else:
        f = b.meet(b.cc(sq, B), b.circle(d, B, c), L)   # |DF| = |BC|
    return b.meet(ka, b.cc(B, f), br)      # |BK|^2 = a^2 + b^2


def _erect_v2(b, A, B, len_pair, br):
    k0 = b.cc(B, A)
    e = antipode(b, B, A)
    p = b.meet(k0, b.cc(A, B), L)          # |EP| = a sqrt 3
    _, kt = thales(b, e, p)
    ka = b.circle(A, *len_pair)
    q = b.meet(kt, b.circle(p, *len_pair), L)
    f = b.meet(k0, b.cc(e, q), L)          # |AF|^2 = a^2 + b^2
    return b.meet(ka, b.circle(B, A, f), br)


def lay(b, A, B, len_pair, toward=True):
    """Point on the ray A -> B (or its opposite) at distance |len_pair| from A.

    A point of circle(A, d) about 45 degrees off the line (picked among three
    hexagon marks) and its mirror in AB bound an arc whose midpoints lie on
    the line."""
    _check_distinct(b, A, B)
    d, a = b.d(*len_pair), b.d(A, B)
    if d <= b.eps:
        raise LengthOutOfRange("length vanishes")
    k = b.circle(A, *len_pair)
    guide = b.cc(B, A) if d <= 1.5 * a else b.circle(B, *len_pair)
    P = b.meet(k, guide, L)
    pa, pb = b.pt(A), b.pt(B)

    def off(n):
        # |sin 2 phi|, phi the angle of An to the line
        q = b.pt(n)
        return abs(2 * cross(pa, pb, q) * ((q[0] - pa[0]) * (pb[0] - pa[0])
                                         + (q[1] - pa[1]) * (pb[1] - pa[1]))) / (a * a * d * d)
    best, q = P, P
    for _ in range(2):
        if off(best) >= 0.8:
            break
        q = b.meet(k, b.circle(q, A, P), L)
        if off(q) > off(best):
            best = q
    Q = b.meet_other(k, b.cc(B, best), best)
    sign = 1.0 if toward else -1.0
    return arc_mid(b, A, best, Q, lambda p: sign * math.hypot(p[0] - pb[0], p[1] - pb[1]))


def extend_by(b, A, B, len_pair):
    """A + d (A - B)/|AB|: prolong BA beyond A by d."""
    return lay(b, A, B, len_pair, toward=False)


def cut_off(b, A, B, len_pair):
    """A + d (B - A)/|AB| for 0 < d < |AB|."""
    d, ab = b.d(*len_pair), b.d(A, B)
    if not (b.eps < d < ab - b.eps):
        raise LengthOutOfRange(f"cannot cut {d!r} from {ab!r}")
    return lay(b, A, B, len_pair, toward=True)


def _on_ray(b, Q, N, P):
    q, n, p = b.pt(Q), b.pt(N), b.pt(P)
    dq = b.d(Q, N)
    along = ((n[0] - q[0]) * (p[0] - q[0]) + (n[1] - q[1]) * (p[1] - q[1])) / dq
    return along > 0 and abs(cross(q, n, p)) / dq <= b.eps


def fourth(b, a_pair, b_pair, c_pair):
    """Pair (Q, M) with |QM| = b c / a, on a Thales circle over a."""
    Q, N = a_pair
    a, bl, cl = b.d(Q, N), b.d(*b_pair), b.d(*c_pair)
    if min(a, bl, cl) <= b.eps:
        raise LengthOutOfRange("fourth proportional of a vanishing length")
    k = 1
    if cl >= 0.9 * a:
        k = math.ceil(cl / (0.9 * a))
        N = extend_n(b, Q, N, k)
    _, kt = thales(b, Q, N)
    if b_pair[0] == Q and _on_ray(b, Q, N, b_pair[1]):
        P = b_pair[1]
    else:
        P = lay(b, Q, N, b_pair, toward=True)
    O = b.meet(kt, b.circle(Q, *c_pair), L)
    M = foot(b, P, Q, O)
    if k > 1:
        M = extend_n(b, Q, M, k)
    return Q, M


def third(b, a_pair, b_pair):
    """Pair with length b^2 / a."""
    return fourth(b, a_pair, b_pair, b_pair)


def mean_on_line(b, D, C, B, br=L):
    """Geometric mean of DC and CB with C between D and B: the half-chord at C.
    Returns the point H with |CH| = sqrt(|DC||CB|)."""
    f = halve(b, D, B)
    if b.d(f, C) <= 10 * b.eps:
        # C is the center: the half-chord is the radius turned a quarter
        return rot90(b, f, D, br)
    e = antipode(b, C, f)
    return b.meet_side(b.cc(f, D), b.circle(e, f, D), D, C, br)


def mean(b, p_pair, q_pair, br=L):
    """Pair (C, H) with |CH| = sqrt(p q)."""
    C, D = p_pair
    if min(b.d(*p_pair), b.d(*q_pair)) <= b.eps:
        raise LengthOutOfRange("geometric mean of a vanishing length")
    Bp = extend_by(b, C, D, q_pair)
    return C, mean_on_line(b, D, C, Bp, br)


def copy_angle(b, B, A, C, E, D, br=L):
    """F with angle DEF = angle BAC and |EF| = |AB|; Left turns counterclockwise
    from ray ED."""
    _check_distinct(b, A, B)
    _check_distinct(b, A, C)
    _check_distinct(b, E, D)
    arm = (A, B)
    c1 = C if abs(b.d(A, C) - b.d(A, B)) <= b.eps else lay(b, A, C, arm)
    if b.d(B, c1) <= 10 * b.eps:
        raise DegenerateInput("angle has no opening")
    d1 = D if abs(b.d(E, D) - b.d(A, B)) <= b.eps else lay(b, E, D, arm)
    return b.meet(b.circle(E, A, B), b.circle(d1, B, c1), br)


def bisect_sector(b, A, B, D, variant=1):
    """Point C on arc BD of the sector at A (|AB| = |AD|) halving the angle."""
    e = halve(b, B, D)
    if b.d(e, A) <= 10 * b.eps:
        raise DegenerateInput("straight sector")
    if variant == 1:
        g = cut_off(b, A, D, (A, e))
        away = side_of(b.pt(A), b.pt(e), b.pt(B), b.tol)
        br = R if away is Side.LEFT else L
        return erect(b, e, B, (g, D), br)
    s = extend_by(b, e, A, (A, D))
    ec = third(b, (A, s), (D, e))
    return extend_by(b, e, A, ec)


def arc_mid(b, O, A, B, key):
    """Midpoint of an arc AB of the circle about O (Mascheroni's four-circle
    method); key picks between the two arc midpoints."""
    def away(p, frm, to):
        return R if side_of(b.pt(p), b.pt(frm), b.pt(to), b.tol) is Side.LEFT else L
    # C = O + A - B and D = O + B - A: parallelograms on the chord
    c = b.meet_side(b.circle(O, A, B), b.circle(A, O, B), O, A, away(B, O, A))
    d = b.meet_side(b.circle(O, A, B), b.circle(B, O, A), O, B, away(A, O, B))
    e = b.meet(b.cc(c, B), b.cc(d, A), L)
    return b.meet_by(b.circle(c, O, e), b.circle(d, O, e), key)


def circumcenter(b, A, B, C):
    """Center of the circle through A, B, C: radius = AB BC / (2 BD), BD the
    altitude from B."""
    if abs(cross(b.pt(A), b.pt(B), b.pt(C))) <= b.eps * max(b.d(A, B), b.d(A, C), 1.0):
        raise CollinearPoints("points are collinear")
    d = foot(b, B, A, C)
    b2 = antipode(b, d, B)
    r = fourth(b, (B, b2), (A, B), (B, C))
    rl = b.d(*r)
    pb = b.pt(B)
    return b.meet_by(b.circle(A, *r), b.circle(C, *r),
                     lambda p: abs(math.hypot(p[0] - pb[0], p[1] - pb[1]) - rl))


def tangent_point(b, A, C, K, br=L):
    """Touch point on circle(C, |CK|) of a tangent from A; br is taken about
    the axis from the center toward A."""
    d = halve(b, A, C)
    return b.meet(b.cc(C, K), b.cc(d, A), br)


def ll_meet(b, P1, P2, Q1, Q2, along="p"):
    """Meet of lines P1P2 and Q1Q2 from the feet of P1, P2 on Q1Q2, a fourth
    proportional and a lay, measured along the P line (or the Q line)."""
    p1, p2, q1, q2 = (b.pt(n) for n in (P1, P2, Q1, Q2))
    _check_distinct(b, P1, P2)
    _check_distinct(b, Q1, Q2)
    dq = b.d(Q1, Q2)
    s1 = cross(q1, q2, p1) / dq
    s2 = cross(q1, q2, p2) / dq
    if abs(s1) <= b.eps:
        return P1
    if abs(s2) <= b.eps:
        return P2
    if abs(s1 - s2) <= b.tol.eps_rel * b.d(P1, P2):
        raise ParallelLines("lines are parallel")
    f1 = foot(b, P1, Q1, Q2)
    f2 = foot(b, P2, Q1, Q2)
    if (s1 > 0) != (s2 > 0):
        s = extend_by(b, f1, P1, (P2, f2))
        a_pair, toward = (P1, s), True
    elif abs(s1) > abs(s2):
        a_pair, toward = (cut_off(b, f1, P1, (P2, f2)), P1), True
    else:
        a_pair, toward = (cut_off(b, f2, P2, (P1, f1)), P2), False
    if along == "q":
        if b.d(f1, f2) <= b.eps:
            return f1
        base, seg = (f1, f2), (f1, f2)
    else:
        base, seg = (P1, P2), (P1, P2)
    h1 = (P1, f1)
    if b.d(*h1) <= b.d(*seg):
        dist = fourth(b, a_pair, seg, h1)
    else:
        dist = fourth(b, a_pair, h1, seg)
    return place(b, base[0], base[1], dist, toward)


def place(b, A, B, len_pair, toward=True):
    """Point on ray A -> B (or its opposite) at distance |len_pair|, reusing the
    pair's endpoint when it already lies there or a quarter turn away."""
    if len_pair[0] == A:
        a, tip, e = b.pt(A), b.pt(len_pair[1]), b.pt(B)
        ux, uy = e[0] - a[0], e[1] - a[1]
        n = math.hypot(ux, uy)
        vx, vy = tip[0] - a[0], tip[1] - a[1]
        along = (ux * vx + uy * vy) / n
        off = (ux * vy - uy * vx) / n
        sign = 1 if toward else -1
        if abs(off) <= b.eps and along * sign > 0:
            return len_pair[1]
        if abs(along) <= b.eps and abs(off) > b.eps:
            # tip is perpendicular: turn it back onto the ray
            want_left = (off > 0) != toward
            return rot90(b, A, len_pair[1], L if want_left else R)
    return lay(b, A, B, len_pair, toward)


def pythag(b, p_pair, q_pair):
    """Pair with length sqrt(p^2 + q^2) (a right angle erected on p)."""
    k = erect(b, p_pair[0], p_pair[1], q_pair, L)
    return p_pair[1], k


def leg(b, h_pair, p_pair):
    """Pair with length sqrt(h^2 - p^2): a chord of length p in the circle on h."""
    if b.d(*p_pair) >= b.d(*h_pair) - b.eps:
        raise LengthOutOfRange("leg longer than hypotenuse")
    X, Y = h_pair
    _, kt = thales(b, X, Y)
    z = b.meet(kt, b.circle(X, *p_pair), L)
    return z, Y


def parallel_through(b, A, B, C):
    """A + B - C: arcs from B with AC and from A with BC, on the far side of AB
    from C."""
    _check_distinct(b, B, C)
    k1 = b.circle(B, A, C)
    k2 = b.circle(A, B, C)
    if b.d(A, B) <= b.eps:
        return antipode(b, A, C)
    s = side_of(b.pt(C), b.pt(A), b.pt(B), b.tol)
    if s is Side.ON:
        return b.meet(k1, k2, L)
    return b.meet_side(k1, k2, A, B, R if s is Side.LEFT else L)


def triangle_square(b, X, Y, Z):
    """Pair whose square equals the area of triangle XYZ: the mean of the base
    and half the height."""
    f = foot(b, Z, X, Y)
    if f == Z:
        raise DegenerateInput("flat triangle")
    m = halve(b, Z, f)
    return mean(b, (X, Y), (m, f))


def sum_pair(b, p_pair, q_pair):
    """Pair of length p + q, laid in line with p."""
    X, Y = p_pair
    return extend_by(b, X, Y, q_pair), Y


def diff_pair(b, p_pair, q_pair):
    """Pair of length p - q (p > q)."""
    X, Y = p_pair
    return cut_off(b, X, Y, q_pair), Y
