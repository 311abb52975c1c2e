"""Rational torsion: exact point arithmetic over Q, division polynomials,
and the full torsion subgroup (one of the fifteen admissible shapes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, Symbol, nextprime

from .curve import WeierstrassCurve, minimal_model
from .errors import OrderOutOfRange

__all__ = ["Point", "add", "neg", "mul", "point_order", "TorsionGroup",
           "torsion_subgroup", "has_point_of_order", "torsion_order_bound"]

#: the point at infinity
O = None

Point = tuple  # (Fraction, Fraction), or None for the identity


def _on_curve(E: WeierstrassCurve, P) -> bool:
    if P is O:
        return True
    x, y = P
    return (y * y + E.a1 * x * y + E.a3 * y
            == x ** 3 + E.a2 * x * x + E.a4 * x + E.a6)


def neg(E: WeierstrassCurve, P):
    if P is O:
        return O
    x, y = P
    return (x, -y - E.a1 * x - E.a3)


def add(E: WeierstrassCurve, P, Q):
    """Group law on the long Weierstrass model, exact over Q."""
    if P is O:
        return Q
    if Q is O:
        return P
    x1, y1 = P
    x2, y2 = Q
    a1, a2, a3, a4, a6 = E.a_invariants
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return O
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        nu = (-x1 ** 3 + a4 * x1 + 2 * a6 - a3 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def mul(E: WeierstrassCurve, n: int, P):
    if n < 0:
        return mul(E, -n, neg(E, P))
    R = O
    while n:
        if n & 1:
            R = add(E, R, P)
        P = add(E, P, P)
        n >>= 1
    return R


def point_order(E: WeierstrassCurve, P, bound: int = 12):
    """Exact order of P if at most `bound`, else None.

    Torsion x-coordinates of an integral model have bounded denominators, but
    we stay agnostic and simply iterate.
    """
    if P is O:
        return 1
    P = (Fraction(P[0]), Fraction(P[1]))
    if not _on_curve(E, P):
        raise ValueError(f"{P} is not on {E}")
    R = P
    for n in range(1, bound + 1):
        if R is O:
            return n
        R = add(E, R, P)
    return None


# ----------------------------------------------------------------------------
# counting points mod p (quadratic-character sums on the completed square form)

@lru_cache(maxsize=512)
def _square_table(p):
    t = bytearray(p)
    for x in range(p):
        t[x * x % p] = 1
    return bytes(t)


def count_points_mod(E: WeierstrassCurve, p: int) -> int:
    """#E(F_p) for an odd prime p of good reduction (p not dividing any
    denominator); counts via the quadratic character of 4x^3+b2x^2+2b4x+b6."""
    b2, b4, b6 = int(E.b2) % p, int(E.b4) % p, int(E.b6) % p
    sq = _square_table(p)
    n = 1  # infinity
    for x in range(p):
        g = (4 * x ** 3 + b2 * x * x + 2 * b4 * x + b6) % p
        if g == 0:
            n += 1
        elif sq[g]:
            n += 2
    return n


def torsion_order_bound(E: WeierstrassCurve, primes=None) -> int:
    """A multiple of |E(Q)_tors|: gcd of #E(F_p) over a few good primes."""
    Em, _ = minimal_model(E)
    delta = int(Em.discriminant)
    if primes is None:
        primes, p = [], 2
        while len(primes) < 8:
            p = int(nextprime(p))
            if delta % p:
                primes.append(p)
    g = 0
    for p in primes:
        if delta % p == 0 or p == 2:
            continue
        g = math.gcd(g, count_points_mod(Em, p))
        if g == 1:
            break
    return g if g else 1


# ----------------------------------------------------------------------------
# division polynomials (univariate, y eliminated through g = 4x^3+b2x^2+2b4x+b6)

def _division_polys(E: WeierstrassCurve, nmax: int):
    """psi_n as univariate sympy Polys for n <= nmax, with psi_{2m} divided by
    the common factor 2y + a1 x + a3 (so psi_2 represents g itself squared out:
    stored as the polynomial g)."""
    x = Symbol("x")
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    g = Poly(4 * x ** 3 + b2 * x ** 2 + 2 * b4 * x + b6, x)
    psi = {0: Poly(0, x), 1: Poly(1, x), 2: Poly(1, x)}  # psi_2 / (2y+a1x+a3) = 1
    psi[3] = Poly(3 * x ** 4 + b2 * x ** 3 + 3 * b4 * x ** 2 + 3 * b6 * x + b8, x)
    psi[4] = Poly(2 * x ** 6 + b2 * x ** 5 + 5 * b4 * x ** 4 + 10 * b6 * x ** 3
                  + 10 * b8 * x ** 2 + (b2 * b8 - b4 * b6) * x
                  + (b4 * b8 - b6 * b6), x)
    def get(n):
        if n in psi:
            return psi[n]
        m = n // 2
        if n % 2:
            # psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3,
            # with g^2 inserted for squared-out even factors
            if m % 2 == 0:
                val = get(m + 2) * get(m) ** 3 * g ** 2 - get(m - 1) * get(m + 1) ** 3
            else:
                val = get(m + 2) * get(m) ** 3 - get(m - 1) * get(m + 1) ** 3 * g ** 2
        else:
            val = get(m) * (get(m + 2) * get(m - 1) ** 2 - get(m - 2) * get(m + 1) ** 2)
        psi[n] = val
        return val
    for n in range(5, nmax + 1):
        get(n)
    return psi


def _rational_roots(poly) -> list:
    """All rational roots of a sympy Poly with rational coefficients."""
    out = []
    for r, _ in poly.ground_roots().items():
        if r.is_rational:
            out.append(Fraction(int(r.p), int(r.q)))
    return out


def _points_with_x(E: WeierstrassCurve, x: Fraction):
    """Rational points of E with the given x-coordinate (0, 1 or 2 of them)."""
    a1, a3 = E.a1, E.a3
    # y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
    B = a1 * x + a3
    C = x ** 3 + E.a2 * x * x + E.a4 * x + E.a6
    disc = B * B + 4 * C
    if disc < 0:
        return []
    root = _sqrt_fraction(disc)
    if root is None:
        return []
    return list({(x, (-B + root) / 2), (x, (-B - root) / 2)})


def _sqrt_fraction(q: Fraction):
    if q < 0:
        return None
    n = math.isqrt(q.numerator)
    d = math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True)
class TorsionGroup:
    """E(Q)_tors as Z/n1 x Z/n2 with n2 | n1 (n2 = 1 for the cyclic shapes)."""
    n1: int
    n2: int
    generators: tuple

    def __post_init__(self):
        ok = (self.n2 == 1 and (1 <= self.n1 <= 10 or self.n1 == 12)) or \
             (self.n2 == 2 and self.n1 in (2, 4, 6, 8))
        if not ok:
            raise ArithmeticError(
                f"Z/{self.n2} x Z/{self.n1} is not an admissible rational "
                "torsion group")

    @property
    def order(self):
        return self.n1 * self.n2

    @property
    def shape(self):
        return str(self)

    def __str__(self):
        if self.order == 1:
            return "trivial"
        if self.n2 == 1:
            return f"Z/{self.n1}"
        return f"Z/{self.n2} x Z/{self.n1}"

    def points(self, E: WeierstrassCurve):
        """All torsion points, identity included."""
        pts = [O]
        for k in range(1, self.n1):
            pts.append(mul(E, k, self.generators[0]))
        if self.n2 == 2:
            extra = [add(E, P, self.generators[1]) for P in pts]
            pts += extra
        return pts


def _two_torsion_x(E: WeierstrassCurve):
    x = Symbol("x")
    g = Poly(4 * x ** 3 + E.b2 * x ** 2 + 2 * E.b4 * x + E.b6, x)
    return _rational_roots(g)


def has_point_of_order(E: WeierstrassCurve, n: int) -> bool:
    """Whether E(Q) contains a point of exact order n, for n in 2..12."""
    if not 2 <= n <= 12 or n == 11:
        raise OrderOutOfRange(f"order {n} is not admissible over Q")
    T = torsion_subgroup(E)
    if T.order % n:
        return False
    return any(P is not O and point_order(E, P) == n for P in T.points(E))


def _halve(E: WeierstrassCurve, P):
    """All rational Q with 2Q = +-P (x-coordinates only determine the sign)."""
    x = Symbol("x")
    xP = P[0]
    quart = Poly(x ** 4 - E.b4 * x ** 2 - 2 * E.b6 * x - E.b8
                 - xP * (4 * x ** 3 + E.b2 * x ** 2 + 2 * E.b4 * x + E.b6), x)
    out = []
    for xc in _rational_roots(quart):
        out.extend(_points_with_x(E, xc))
    return out


def _third(E: WeierstrassCurve, P):
    """All rational Q with 3Q = +-P."""
    x = Symbol("x")
    psi = _division_polys(E, 4)
    g = Poly(4 * x ** 3 + E.b2 * x ** 2 + 2 * E.b4 * x + E.b6, x)
    # x(3Q) = x - psi_2 psi_4 / psi_3^2, and psi_2 psi_4 = g * s_4 univariately
    poly = (Poly(x, x) - P[0]) * psi[3] ** 2 - g * psi[4]
    out = []
    for xc in _rational_roots(poly):
        out.extend(_points_with_x(E, xc))
    return out


@lru_cache(maxsize=4096)
def _torsion_cached(ai):
    E = WeierstrassCurve(*ai)
    bound = torsion_order_bound(E)
    # seed with the points of prime order (only 2, 3, 5, 7 can occur)
    cand_x = set(_two_torsion_x(E))
    need = [p for p in (3, 5, 7) if bound % p == 0]
    if need:
        psi = _division_polys(E, max(need))
        for p in need:
            cand_x.update(_rational_roots(psi[p]))
    known = {O: 1}
    def absorb(P):
        if P in known:
            return False
        o = point_order(E, P)
        if o is None:
            raise ArithmeticError("torsion closure escaped the rational bound")
        known[P] = o
        return True
    for xc in sorted(cand_x):
        for P in _points_with_x(E, xc):
            absorb(P)
    # grow: close under addition, then divide points by 2 and 3 until stable
    changed = True
    while changed:
        changed = False
        for P in list(known):
            for Q in list(known):
                if Q is not O and absorb(add(E, P, Q)):
                    changed = True
        if len(known) < bound:
            for P in list(known):
                if P is O:
                    continue
                for Q in _halve(E, P) + _third(E, P):
                    if absorb(Q):
                        changed = True
    order = len(known)
    # shape: Z/n1 x Z/n2, n2 in {1, 2}
    full_two = sum(1 for o in known.values() if o == 2) == 3
    n2 = 2 if full_two and order > 1 else 1
    n1 = order // n2
    gen1 = next((P for P, o in known.items() if o == n1), None)
    gens = ()
    if gen1 is not None:
        if n2 == 2:
            sub = {mul(E, k, gen1) for k in range(n1)}
            gen2 = next(P for P, o in known.items() if o == 2 and P not in sub)
            gens = (gen1, gen2)
        else:
            gens = (gen1,)
    return TorsionGroup(n1, n2, gens)


def torsion_subgroup(E: WeierstrassCurve) -> TorsionGroup:
    """E(Q)_tors with generators, computed on the minimal model and mapped back."""
    Em, iso = minimal_model(E)
    T = _torsion_cached(Em.a_invariants)
    if iso.is_identity() or not T.generators:
        return T
    # iso carries E onto Em via x = u^2 x' + r, y = u^3 y' + s u^2 x' + t,
    # so minimal-model points pull back through those same formulas
    u, r, s, t = iso.u, iso.r, iso.s, iso.t
    def back(P):
        x, y = P
        return (u * u * x + r, u ** 3 * y + s * u * u * x + t)
    return TorsionGroup(T.n1, T.n2, tuple(back(P) for P in T.generators))
