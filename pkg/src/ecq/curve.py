"""Exact Weierstrass-model arithmetic over Q.

A curve is stored by its five a-invariants as exact rationals; the b-, c-
invariants, discriminant and j-invariant are derived on construction.  All
operations are pure; curves and isomorphism data are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, integer_nthroot

from .errors import NotSquarefree, SingularCurve
from .modmath import is_squarefree, squarefree_part, valuation

__all__ = [
    "WeierstrassCurve", "IsoData", "invariants", "transform", "minimal_model",
    "quadratic_twist", "squarefree_part",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    @property
    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.a_invariants
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self):
        return self.c4 ** 3 / self.discriminant

    def is_integral(self):
        return all(a.denominator == 1 for a in self.a_invariants)

    def __repr__(self):
        return "WeierstrassCurve(%s)" % ", ".join(str(a) for a in self.a_invariants)

    def __str__(self):
        terms = ["y^2"]
        a1, a2, a3, a4, a6 = self.a_invariants
        def side(parts):
            out = ""
            for coef, mono in parts:
                if coef == 0:
                    continue
                s = "" if abs(coef) == 1 and mono else str(abs(coef))
                piece = (s + mono) if mono else str(abs(coef))
                out += (" - " if coef < 0 else (" + " if out else "")) + piece
            return out or "0"
        lhs = "y^2"
        l = side([(a1, "xy"), (a3, "y")])
        if l != "0":
            lhs += " + " + l if not l.startswith(" -") else l
        rhs = "x^3"
        r = side([(a2, "x^2"), (a4, "x"), (a6, "")])
        if r != "0":
            rhs += " + " + r if not r.startswith(" -") else r
        return f"{lhs} = {rhs}"


@dataclass(frozen=True)
class IsoData:
    """Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
    u: Fraction = Fraction(1)
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "u", _frac(self.u))
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "s", _frac(self.s))
        object.__setattr__(self, "t", _frac(self.t))
        if self.u == 0:
            raise ValueError("u must be nonzero")

    def compose(self, other: "IsoData") -> "IsoData":
        """The transform 'self then other'."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return IsoData(u1 * u2,
                       r1 + u1 * u1 * r2,
                       s1 + u1 * s2,
                       t1 + u1 * u1 * s1 * r2 + u1 ** 3 * t2)

    def inverse(self) -> "IsoData":
        u, r, s, t = self.u, self.r, self.s, self.t
        return IsoData(1 / u, -r / u ** 2, -s / u, (r * s - t) / u ** 3)

    def is_identity(self):
        return (self.u, self.r, self.s, self.t) == (1, 0, 0, 0)


IDENTITY_ISO = IsoData()


def invariants(a1, a2, a3, a4, a6) -> WeierstrassCurve:
    """Build a curve from a-invariants, rejecting singular data."""
    E = WeierstrassCurve(_frac(a1), _frac(a2), _frac(a3), _frac(a4), _frac(a6))
    if E.discriminant == 0:
        raise SingularCurve(f"discriminant vanishes for {E!r}")
    return E


def transform(E: WeierstrassCurve, iso: IsoData) -> WeierstrassCurve:
    u, r, s, t = iso.u, iso.r, iso.s, iso.t
    a1, a2, a3, a4, a6 = E.a_invariants
    return WeierstrassCurve(
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u ** 2,
        (a3 + r * a1 + 2 * t) / u ** 3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4,
        (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6,
    )


def _integralize(E: WeierstrassCurve):
    """An integral model of E together with the iso reaching it."""
    m = 1
    for a in E.a_invariants:
        m = m * a.denominator // math.gcd(m, a.denominator)
    if m == 1:
        return E, IDENTITY_ISO
    iso = IsoData(Fraction(1, m))
    return transform(E, iso), iso


def _kraus_ok(c4: int, c6: int, p: int) -> bool:
    """Kraus's conditions for (c4, c6) to come from an integral model at p."""
    if p == 3:
        return valuation(c6, 3) != 2
    if p == 2:
        if c6 % 4 == 3:      # c6 = -1 mod 4
            return True
        return c4 % 16 == 0 and c6 % 32 in (0, 8)
    return True


def _curve_from_c4c6(c4: int, c6: int) -> WeierstrassCurve:
    """The reduced integral model with the given (valid) c-invariants."""
    b2 = (-c6) % 12
    if b2 > 5:
        b2 -= 12
    if b2 % 4 not in (0, 1):
        raise ArithmeticError(f"invalid c-invariants ({c4}, {c6})")
    a1 = b2 % 2
    a2 = (b2 - a1) // 4
    num = b2 * b2 - c4
    if num % 24:
        raise ArithmeticError(f"invalid c-invariants ({c4}, {c6})")
    b4 = num // 24
    num = -b2 ** 3 + 36 * b2 * b4 - c6
    if num % 216:
        raise ArithmeticError(f"invalid c-invariants ({c4}, {c6})")
    b6 = num // 216
    a3 = b6 % 2
    a6, rem = divmod(b6 - a3, 4)
    a4, rem2 = divmod(b4 - a1 * a3, 2)
    if rem or rem2:
        raise ArithmeticError(f"invalid c-invariants ({c4}, {c6})")
    E = WeierstrassCurve(*map(Fraction, (a1, a2, a3, a4, a6)))
    assert E.c4 == c4 and E.c6 == c6
    return E


def _nth_root_fraction(x: Fraction, n: int) -> Fraction:
    num, exact_n = integer_nthroot(x.numerator, n)
    den, exact_d = integer_nthroot(x.denominator, n)
    if not (exact_n and exact_d):
        raise ArithmeticError(f"{x} is not an exact {n}th power")
    return Fraction(int(num), int(den))


def _solve_iso(E: WeierstrassCurve, F: WeierstrassCurve) -> IsoData:
    """The iso carrying E to F, for isomorphic curves."""
    u = _nth_root_fraction(E.discriminant / F.discriminant, 12)
    s = (u * F.a1 - E.a1) / 2
    r = (u * u * F.a2 - E.a2 + s * E.a1 + s * s) / 3
    t = (u ** 3 * F.a3 - E.a3 - r * E.a1) / 2
    iso = IsoData(u, r, s, t)
    if transform(E, iso) != F:
        raise ArithmeticError("curves are not isomorphic")
    return iso


@lru_cache(maxsize=4096)
def _minimal_model_cached(ai):
    E = WeierstrassCurve(*ai)
    Ei, _ = _integralize(E)
    c4, c6 = int(Ei.c4), int(Ei.c6)
    delta = int(Ei.discriminant)
    if c4 == 0:
        cands = {p: valuation(c6, p) // 6 for p in factorint(abs(c6))}
    elif c6 == 0:
        cands = {p: valuation(c4, p) // 4 for p in factorint(abs(c4))}
    else:
        g = math.gcd(c4, c6)
        cands = {p: min(valuation(c4, p) // 4, valuation(c6, p) // 6)
                 for p in factorint(g)}
    u = 1
    for p, e in sorted(cands.items()):
        # u^12 must divide the discriminant too (not implied at p = 2, 3)
        e = min(e, valuation(delta, p) // 12)
        while e > 0 and not _kraus_ok(c4 // p ** (4 * e), c6 // p ** (6 * e), p):
            e -= 1
        u *= p ** e
    Emin = _curve_from_c4c6(c4 // u ** 4, c6 // u ** 6)
    return Emin, _solve_iso(E, Emin)


def minimal_model(E: WeierstrassCurve):
    """Global minimal model of E and the iso mapping E onto it.

    The result is the reduced model: a1, a3 in {0,1} and a2 in {-1,0,1}, so
    isomorphic curves always minimize to the same quintuple.
    """
    return _minimal_model_cached(E.a_invariants)


def quadratic_twist(E: WeierstrassCurve, d: int) -> WeierstrassCurve:
    """Twist of E by a squarefree integer d.

    For a curve already in the form y^2 = x^3 + a x + b the result is
    y^2 = x^3 + d^2 a x + d^3 b; otherwise the short model with invariants
    (-27 c4, -54 c6) is twisted.
    """
    if not is_squarefree(d):
        raise NotSquarefree(f"d = {d} is not squarefree")
    if (E.a1, E.a2, E.a3) == (0, 0, 0):
        return invariants(0, 0, 0, d * d * E.a4, d ** 3 * E.a6)
    return invariants(0, 0, 0, -27 * E.c4 * d * d, -54 * E.c6 * d ** 3)
