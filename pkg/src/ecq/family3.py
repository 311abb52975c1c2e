"""The 3-torsion family y^2 + a x y + b y = x^3.

Normalization to the canonical integral form (b > 0 and, at every prime q,
q does not divide a or q^3 does not divide b), the closed-form reduction
classifier for its members, and the explicit 3-isogenous dual curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, isprime

from .curve import IsoData, WeierstrassCurve, invariants, transform
from .errors import (NotOrderThree, NotPrime, SingularFamilyMember,
                     UnreachableBranch)
from .localdata import KodairaType
from .modmath import INF, valuation

__all__ = ["FamilyCurve", "ClassifyResult", "normalize", "from_curve",
           "classify", "dual"]


@dataclass(frozen=True)
class FamilyCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.b <= 0 or self.D == 0:
            raise SingularFamilyMember(f"(a, b) = ({self.a}, {self.b})")
        for q in factorint(self.b):
            if self.a % q == 0 and self.b % q ** 3 == 0:
                raise SingularFamilyMember(
                    f"({self.a}, {self.b}) is not normalized at q = {q}")

    @property
    def D(self) -> int:
        return self.a ** 3 - 27 * self.b

    @property
    def delta(self) -> int:
        return self.b ** 3 * self.D

    @property
    def c4(self) -> int:
        return self.a * (self.a ** 3 - 24 * self.b)

    def curve(self) -> WeierstrassCurve:
        return invariants(self.a, 0, self.b, 0, 0)


@dataclass(frozen=True)
class ClassifyResult:
    candidates: frozenset        # of KodairaType
    c_p: int | None = None

    def __str__(self):
        names = ", ".join(sorted(str(k) for k in self.candidates))
        return f"candidates: {names}" + (f", c_p = {self.c_p}" if self.c_p else "")


def normalize(c, d) -> FamilyCurve:
    """Canonical (a, b) for the member y^2 + c x y + d y = x^3, c, d rational."""
    c, d = Fraction(c), Fraction(d)
    if d == 0 or c ** 3 == 27 * d:
        raise SingularFamilyMember(f"(c, d) = ({c}, {d})")
    if d < 0:
        c, d = -c, -d          # (x, y) -> (x, -y)
    # clear denominators: c -> uc, d -> u^3 d
    u = 1
    for den in (c.denominator, d.denominator):
        u = u * den // __import__("math").gcd(u, den)
    a, b = int(c * u), int(d * u ** 3)
    # strip primes q with q | a and q^3 | b
    for q in (factorint(b) if a == 0 else factorint(__import__("math").gcd(abs(a), b))):
        va = valuation(a, q) if a else INF
        n = min(va, valuation(b, q) // 3)
        if n > 0:
            a //= q ** n
            b //= q ** (3 * n)
    return FamilyCurve(a, b)


def _point_order_3(E: WeierstrassCurve, P):
    """Whether the affine point P = (x, y) on E has exact order 3."""
    from .torsion import point_order
    return point_order(E, P) == 3


def from_curve(E: WeierstrassCurve, P) -> FamilyCurve:
    """Family form of E with its rational 3-torsion point P moved to (0,0)."""
    if not _point_order_3(E, P):
        raise NotOrderThree(f"{P} does not have exact order 3 on {E}")
    x0, y0 = Fraction(P[0]), Fraction(P[1])
    Et = transform(E, IsoData(1, x0, 0, y0))
    # shear so the tangent at (0,0) is horizontal: kills a4, then a2 = 0
    s = Et.a4 / Et.a3
    Et = transform(Et, IsoData(1, 0, s, 0))
    if Et.a2 != 0 or Et.a4 != 0 or Et.a6 != 0:
        raise NotOrderThree(f"{P} is not an inflection point of {E}")
    return normalize(Et.a1, Et.a3)


@lru_cache(maxsize=65536)
def _classify_cached(a, b, p):
    F = FamilyCurve(a, b)
    va = valuation(a, p) if a else INF
    vb = valuation(b, p)
    vD = valuation(F.D, p)
    if 3 * va < vb:
        n = 3 * vb
        return ClassifyResult(frozenset({KodairaType("In", n)}), n)
    if 3 * va == vb:            # forces va = vb = 0 under normalization
        if va != 0:
            raise UnreachableBranch(f"({a}, {b}) not normalized at {p}")
        if vD > 0:
            return ClassifyResult(frozenset({KodairaType("In", vD)}), None)
        return ClassifyResult(frozenset({KodairaType("I0")}), 1)
    # 3 va > vb
    if vb == 1:
        return ClassifyResult(frozenset({KodairaType("IV")}), 3)
    if vb == 2:
        return ClassifyResult(frozenset({KodairaType("IV*")}), 3)
    if vb != 0:
        raise UnreachableBranch(f"({a}, {b}) not normalized at {p}")
    if p != 3:
        return ClassifyResult(frozenset({KodairaType("I0")}), 1)
    # p = 3, ord_3(a) > 0 = ord_3(b): keyed on n = ord_3(D) >= 3
    n = vD
    if n == 3:
        return ClassifyResult(frozenset({KodairaType("II"), KodairaType("III")}), None)
    if n == 4:
        return ClassifyResult(frozenset({KodairaType("II")}), None)
    if n == 5:
        return ClassifyResult(frozenset({KodairaType("IV")}), None)
    if n >= 6:
        return ClassifyResult(frozenset({KodairaType("In*", n - 6) if n > 6
                                         else KodairaType("I0*")}), None)
    raise UnreachableBranch(f"ord_3(D) = {n} for ({a}, {b})")


def classify(F: FamilyCurve, p: int) -> ClassifyResult:
    """Reduction type of the member (a, b) at p from the closed-form case
    analysis; a two-element candidate set only in the ord_3(D) = 3 branch."""
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    return _classify_cached(F.a, F.b, p)


def dual(F: FamilyCurve) -> WeierstrassCurve:
    """Codomain of the 3-isogeny quotienting by <(0,0)>.

    For b = 1 the Hadano model y^2 + (a+6)xy + (a^2+3a+9)y = x^3 is returned;
    in general y^2 + a x y - 9 b y = x^3 - (a^3 + 27 b) b.  Either way the
    discriminant is (a^3 - 27 b)^3 b.
    """
    a, b = F.a, F.b
    if b == 1:
        return invariants(a + 6, 0, a * a + 3 * a + 9, 0, 0)
    return invariants(a, 0, -9 * b, 0, -(a ** 3 + 27 * b) * b)
