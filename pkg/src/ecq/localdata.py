"""Tate's algorithm over Q: Kodaira type, Tamagawa number, conductor exponent
and the reduction classification at every prime, including p = 2 and 3.

The algorithm is run on the global minimal model and is fully deterministic:
every translation uses an explicitly computed root, never a search with
retries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, isprime

from .curve import WeierstrassCurve, minimal_model
from .errors import NotPrime
from .modmath import (cubic_structure, kronecker, quad_double_root,
                      quad_has_root, valuation)

__all__ = ["KodairaType", "LocalData", "tate", "conductor", "reduction_class",
           "bad_primes"]

GOOD = "good"
SPLIT_MULT = "split_mult"
NONSPLIT_MULT = "nonsplit_mult"
ADDITIVE = "additive"


@dataclass(frozen=True)
class KodairaType:
    tag: str              # 'I0', 'In', 'II', 'III', 'IV', 'I0*', 'In*', 'IV*', 'III*', 'II*'
    n: int = 0

    _PLAIN = ("I0", "II", "III", "IV", "I0*", "IV*", "III*", "II*")

    def __post_init__(self):
        if self.tag in self._PLAIN:
            if self.n:
                raise ValueError(f"{self.tag} carries no index")
        elif self.tag in ("In", "In*"):
            if self.n < 1:
                raise ValueError(f"{self.tag} needs n >= 1")
        else:
            raise ValueError(f"unknown Kodaira tag {self.tag!r}")

    def __str__(self):
        if self.tag == "In":
            return f"I{self.n}"
        if self.tag == "In*":
            return f"I{self.n}*"
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        text = text.strip()
        if text in cls._PLAIN:
            return cls(text)
        body, star = (text[:-1], True) if text.endswith("*") else (text, False)
        if body.startswith("I") and body[1:].isdigit():
            n = int(body[1:])
            if n == 0:
                return cls("I0*" if star else "I0")
            return cls("In*" if star else "In", n)
        raise ValueError(f"cannot parse Kodaira symbol {text!r}")

    @property
    def is_starred(self):
        return self.tag.endswith("*")

    @property
    def component_count(self):
        """Number of irreducible components of the special fiber (Ogg)."""
        return {"I0": 1, "In": self.n, "II": 1, "III": 2, "IV": 3,
                "I0*": 5, "In*": 5 + self.n, "IV*": 7, "III*": 8,
                "II*": 9}[self.tag]


@dataclass(frozen=True)
class LocalData:
    p: int
    kodaira: KodairaType
    c_p: int
    f_p: int
    ord_delta: int
    red_class: str

    def __str__(self):
        return (f"p={self.p}: {self.kodaira} c={self.c_p} f={self.f_p} "
                f"ord(D)={self.ord_delta} [{self.red_class}]")


def _bc(ai):
    a1, a2, a3, a4, a6 = ai
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    delta = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return b2, b4, b6, b8, delta


def _rst(ai, r, s, t):
    """Integral change of variables with u = 1."""
    a1, a2, a3, a4, a6 = ai
    return (a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1)


def _exact_div(n, d):
    q, r = divmod(n, d)
    if r:
        raise ArithmeticError("valuation bookkeeping failed in Tate's algorithm")
    return q


def _poly_gcd_root(g, gp, p):
    """Root of gcd(g, g') mod p for a cubic g with a multiple root."""
    from .modmath import _pgcd
    h = _pgcd(g, gp, p)
    if len(h) == 2:     # linear: (x - alpha)
        return (-h[0]) % p
    if len(h) == 3:     # (x - alpha)^2, triple root of g
        return (-h[1]) * pow(2, -1, p) % p
    raise ArithmeticError("expected a multiple root")


def _singular_point(ai, p):
    """The unique singular point of the reduction mod p, as residues."""
    a1, a2, a3, a4, a6 = ai
    if p <= 3:
        for x in range(p):
            for y in range(p):
                F = y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6
                Fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
                Fy = 2 * y + a1 * x + a3
                if F % p == 0 and Fx % p == 0 and Fy % p == 0:
                    return x, y
        raise ArithmeticError("no singular point found")
    b2, b4, b6, _, _ = _bc(ai)
    g = [b6 % p, (2 * b4) % p, b2 % p, 4 % p]
    gp = [(2 * b4) % p, (2 * b2) % p, 12 % p]
    x0 = _poly_gcd_root(g, gp, p)
    y0 = (-(a1 * x0 + a3)) * pow(2, -1, p) % p
    return x0, y0


def _tate_on_integral(ai, p):
    """Run Tate's algorithm on an integral model; returns LocalData fields.

    The model is p-minimized on the fly (step 11 restarts after dividing out a
    twelfth power of p from the discriminant).
    """
    while True:
        b2, b4, b6, b8, delta = _bc(ai)
        n = valuation(delta, p)
        if n == 0:
            return KodairaType("I0"), 1, 0, 0, GOOD

        x0, y0 = _singular_point(ai, p)
        ai = _rst(ai, x0, 0, y0)
        a1, a2, a3, a4, a6 = ai
        b2, b4, b6, b8, delta = _bc(ai)
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0

        if b2 % p != 0:
            # multiplicative: tangent directions from T^2 + a1 T - a2
            if p == 2:
                split = a2 % 2 == 0
            else:
                split = kronecker(b2 % p, p) == 1
            if split:
                return KodairaType("In", n), n, 1, n, SPLIT_MULT
            return KodairaType("In", n), 2 if n % 2 == 0 else 1, 1, n, NONSPLIT_MULT

        if valuation(a6, p) < 2:
            return KodairaType("II"), 1, n, n, ADDITIVE
        if valuation(b8, p) < 3:
            return KodairaType("III"), 2, n - 1, n, ADDITIVE
        if valuation(b6, p) < 3:
            c = 3 if quad_has_root(1, _exact_div(a3, p), -_exact_div(a6, p * p), p) else 1
            return KodairaType("IV"), c, n - 2, n, ADDITIVE

        # normalize: p | a1, a2;  p^2 | a3, a4;  p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((_exact_div(a6, 4)) % 2)
        else:
            s = (-a1) * pow(2, -1, p) % p
            t = (-a3) * pow(2, -1, p * p) % (p * p)
        ai = _rst(ai, 0, s, t)
        a1, a2, a3, a4, a6 = ai
        assert all(valuation(v, p) >= k for v, k in
                   ((a1, 1), (a2, 1), (a3, 2), (a4, 2), (a6, 3)))

        kind, val = cubic_structure(_exact_div(a2, p), _exact_div(a4, p * p),
                                    _exact_div(a6, p ** 3), p)
        if kind == "distinct":
            return KodairaType("I0*"), 1 + val, n - 4, n, ADDITIVE

        if kind == "double":
            ai = _rst(ai, p * val, 0, 0)
            m = 1
            mx = my = p * p
            while True:
                a1, a2, a3, a4, a6 = ai
                a2t = _exact_div(a2, p)
                a3t = _exact_div(a3, my)
                a4t = _exact_div(a4, p * mx)
                a6t = _exact_div(a6, mx * my)
                # quadratic Y^2 + a3t Y - a6t
                if (a3t * a3t + 4 * a6t) % p != 0:
                    c = 4 if quad_has_root(1, a3t, -a6t, p) else 2
                    return KodairaType("In*", m), c, n - 4 - m, n, ADDITIVE
                y1 = quad_double_root(1, a3t, -a6t, p)
                ai = _rst(ai, 0, 0, my * y1)
                my *= p
                m += 1
                a1, a2, a3, a4, a6 = ai
                a2t = _exact_div(a2, p)
                a4t = _exact_div(a4, p * mx)
                a6t = _exact_div(a6, mx * my)
                # quadratic a2t X^2 + a4t X + a6t
                if (a4t * a4t - 4 * a2t * a6t) % p != 0:
                    c = 4 if quad_has_root(a2t, a4t, a6t, p) else 2
                    return KodairaType("In*", m), c, n - 4 - m, n, ADDITIVE
                x1 = quad_double_root(a2t, a4t, a6t, p)
                ai = _rst(ai, mx * x1, 0, 0)
                mx *= p
                m += 1

        # triple root
        ai = _rst(ai, p * val, 0, 0)
        a1, a2, a3, a4, a6 = ai
        a3t = _exact_div(a3, p * p)
        a6t = _exact_div(a6, p ** 4)
        # quadratic Y^2 + a3t Y - a6t
        if (a3t * a3t + 4 * a6t) % p != 0:
            c = 3 if quad_has_root(1, a3t, -a6t, p) else 1
            return KodairaType("IV*"), c, n - 6, n, ADDITIVE
        y1 = quad_double_root(1, a3t, -a6t, p)
        ai = _rst(ai, 0, 0, p * p * y1)
        a1, a2, a3, a4, a6 = ai
        if valuation(a4, p) < 4:
            return KodairaType("III*"), 2, n - 7, n, ADDITIVE
        if valuation(a6, p) < 6:
            return KodairaType("II*"), 1, n - 8, n, ADDITIVE
        # not p-minimal: divide out and restart
        ai = (_exact_div(a1, p), _exact_div(a2, p * p), _exact_div(a3, p ** 3),
              _exact_div(a4, p ** 4), _exact_div(a6, p ** 6))


def _min_ints(E: WeierstrassCurve):
    Em, _ = minimal_model(E)
    return tuple(int(a) for a in Em.a_invariants)


@lru_cache(maxsize=65536)
def _tate_cached(ai_min, p):
    kod, c, f, ordd, red = _tate_on_integral(ai_min, p)
    return LocalData(p=p, kodaira=kod, c_p=c, f_p=f, ord_delta=ordd, red_class=red)


def tate(E: WeierstrassCurve, p: int) -> LocalData:
    """Local reduction data of (the minimal model of) E at p."""
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    return _tate_cached(_min_ints(E), p)


def bad_primes(E: WeierstrassCurve):
    """Sorted primes dividing the minimal discriminant."""
    ai = _min_ints(E)
    delta = _bc(ai)[4]
    return sorted(factorint(abs(delta)))


def conductor(E: WeierstrassCurve) -> int:
    N = 1
    for p in bad_primes(E):
        N *= p ** tate(E, p).f_p
    return N


def reduction_class(E: WeierstrassCurve, p: int) -> str:
    return tate(E, p).red_class
