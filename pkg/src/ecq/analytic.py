"""Analytic invariants: Frobenius traces, Dirichlet coefficients, the central
L-value for even functional equation, the real period, and the analytic order
of the Tate-Shafarevich group in rank 0.

All floating work goes through mpmath; the L-value carries an explicit tail
bound so callers can tell a certified nonzero value from one lost in noise.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

#: mpmath's working precision is process-global; every block that changes it
#: must hold this lock so threaded scans stay correct and deterministic.
_MP_LOCK = threading.Lock()
from sympy import primerange

from .curve import WeierstrassCurve, minimal_model
from .errors import OddFunctionalEquation, RankPositiveSuspected
from .localdata import GOOD, SPLIT_MULT, conductor, tate
from .rootnum import global_root_number
from .torsion import count_points_mod, torsion_subgroup

__all__ = ["ap", "an_list", "LValue", "l_value_rank0", "real_period",
           "tamagawa_product", "AnalyticData", "sha_analytic_rank0"]


def _count_points_mod2(ai):
    n = 1
    a1, a2, a3, a4, a6 = ai
    for x in (0, 1):
        for y in (0, 1):
            if (y * y + a1 * x * y + a3 * y
                    - x ** 3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                n += 1
    return n


def ap(E: WeierstrassCurve, p: int) -> int:
    """Trace of Frobenius at p (0 / +-1 at the bad primes)."""
    ld = tate(E, p)
    if ld.red_class != GOOD:
        if ld.f_p >= 2:
            return 0
        return 1 if ld.red_class == SPLIT_MULT else -1
    Em, _ = minimal_model(E)
    if p == 2:
        return 3 - _count_points_mod2(tuple(int(a) for a in Em.a_invariants))
    return p + 1 - count_points_mod(Em, p)


def an_list(E: WeierstrassCurve, nmax: int) -> list:
    """[a_1, ..., a_nmax] by multiplicativity and the prime-power recursion."""
    a = [0] * (nmax + 1)
    a[1] = 1
    N = conductor(E)
    for p in primerange(2, nmax + 1):
        t = ap(E, p)
        good = N % p != 0
        q = p
        prev2, prev1 = 1, t          # a_{p^0}, a_{p^1}
        while q <= nmax:
            apk = prev1
            # fill multiples of q with n/q coprime to p
            for m in range(1, nmax // q + 1):
                if m % p:
                    a[m * q] = a[m] * apk
            prev2, prev1 = prev1, (t * prev1 - (p * prev2 if good else 0))
            q *= p
    return a[1:]


@dataclass(frozen=True)
class LValue:
    value: mp.mpf
    tail: mp.mpf
    terms: int

    @property
    def is_certified_nonzero(self):
        return abs(self.value) > self.tail


def _default_terms(N: int) -> int:
    return max(40, int(4 * math.isqrt(N)) + 10)


def l_value_rank0(E: WeierstrassCurve, terms: int | None = None,
                  assume_even: bool = False) -> LValue:
    """L(E, 1) by the exponentially convergent sum 2 sum a_n/n e^(-2 pi n/sqrt N).

    Valid only when the functional equation has sign +1; with sign -1 the
    value is exactly 0, and an undetermined sign raises OddFunctionalEquation
    unless `assume_even` is set.
    """
    w = global_root_number(E)
    if w == -1:
        return LValue(mp.mpf(0), mp.mpf(0), 0)
    if w is None and not assume_even:
        raise OddFunctionalEquation(f"functional-equation sign undetermined for {E}")
    N = conductor(E)
    if terms is None:
        terms = _default_terms(N)
    c = 2 * mp.pi / mp.sqrt(N)
    a = an_list(E, terms)
    s = mp.mpf(0)
    for n in range(terms, 0, -1):
        s += mp.mpf(a[n - 1]) / n * mp.e ** (-c * n)
    # |a_n| <= n d(n) <= n^2, so |tail| <= 2 sum_{n>T} n e^(-cn), closed form
    r = mp.e ** (-c)
    T = terms
    tail = 2 * r ** (T + 1) * ((T + 1) - T * r) / (1 - r) ** 2
    return LValue(2 * s, tail, terms)


def real_period(E: WeierstrassCurve, prec: int = 53) -> mp.mpf:
    """Integral of |dx / (2y + a1 x + a3)| over E(R), on the minimal model.

    Both connected components are counted when the discriminant is positive.
    """
    Em, _ = minimal_model(E)
    with _MP_LOCK, mp.workprec(prec + 20):
        b2, b4, b6 = (mp.mpf(int(x)) for x in (Em.b2, Em.b4, Em.b6))
        roots = mp.polyroots([4, b2, 2 * b4, b6], maxsteps=100, extraprec=60)
        reals = sorted((r.real for r in roots if abs(r.imag) < mp.eps * 1e6),
                       reverse=True)
        if int(Em.discriminant) > 0:
            e1, e2, e3 = reals
            om = 2 * mp.pi / mp.agm(mp.sqrt(e1 - e3), mp.sqrt(e1 - e2))
        else:
            e1 = reals[0]
            z = next(r for r in roots if abs(r.imag) >= mp.eps * 1e6)
            a = e1 - z.real
            A = mp.sqrt(a * a + z.imag ** 2)
            om = 2 * mp.pi / mp.agm(2 * mp.sqrt(A), mp.sqrt(2 * A + 2 * a))
    return +om


def tamagawa_product(E: WeierstrassCurve) -> int:
    from .localdata import bad_primes
    prod = 1
    for p in bad_primes(E):
        prod *= tate(E, p).c_p
    return prod


@dataclass(frozen=True)
class AnalyticData:
    conductor: int
    l_value: LValue
    period: mp.mpf
    torsion_order: int
    tamagawa: int
    sha: Fraction          # nearest small-denominator rational
    residual: mp.mpf       # |raw - sha|; interpretation is the caller's
    ratio: mp.mpf          # L / Omega, useful on its own


def sha_analytic_rank0(E: WeierstrassCurve, terms: int | None = None,
                       assume_even: bool = False) -> AnalyticData:
    """Analytic |Sha| from the rank-0 Birch–Swinnerton-Dyer quotient
    L(E,1) |tors|^2 / (Omega prod c_p); raises RankPositiveSuspected when the
    L-value cannot be certified nonzero.

    The quotient is rounded to the nearest rational with denominator at most
    64 and returned together with the rounding residual; no integrality is
    enforced here.
    """
    L = l_value_rank0(E, terms, assume_even)
    if not L.is_certified_nonzero:
        raise RankPositiveSuspected(
            f"|L(E,1)| = {mp.nstr(abs(L.value), 8)} within tail bound "
            f"{mp.nstr(L.tail, 8)} for {E}")
    om = real_period(E)
    T = torsion_subgroup(E).order
    cp = tamagawa_product(E)
    raw = L.value * T * T / (om * cp)
    sha = Fraction(str(mp.nstr(raw, 17))).limit_denominator(64)
    residual = abs(raw - mp.mpf(sha.numerator) / sha.denominator)
    return AnalyticData(conductor(E), L, om, T, cp, sha, residual, L.value / om)
