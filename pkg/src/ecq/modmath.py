"""Small number-theoretic helpers: valuations, Kronecker symbols, and root
finding for quadratics/cubics over a prime field.

Everything here is deterministic; where a search is needed (splitting a fully
split cubic over a large field) candidates are tried in a fixed order.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import factorint

#: stand-in for ord_p(0); larger than any valuation this package meets.
INF = 10**9


def valuation(n, p):
    """ord_p(n) for an integer or Fraction n; INF for n = 0."""
    if n == 0:
        return INF
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    n = abs(int(n))
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def kronecker(a, n):
    """Kronecker symbol (a|n), fully general (n any integer)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out twos of n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def squarefree_part(n):
    """Largest squarefree divisor of n, with the sign of n."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    s = 1 if n > 0 else -1
    out = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return s * out


def is_squarefree(n):
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


# ----------------------------------------------------------------------------
# dense polynomials over F_p, coefficients low-to-high

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f

def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)

def _pmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return f

def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _pmod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f

def _ppowmod_x(e, f, p):
    """x^e mod f over F_p."""
    result = [1]
    base = _pmod([0, 1], f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        base = _pmod(_pmul(base, base, p), f, p)
    return result


def count_roots_mod(coeffs, p):
    """Number of distinct roots in F_p of the polynomial with the given
    low-to-high coefficients."""
    f = _ptrim([c % p for c in coeffs])
    if len(f) <= 1:
        return 0
    if p <= 60:
        return sum(1 for x in range(p)
                   if sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0)
    xp = _ppowmod_x(p, f, p)
    # gcd(x^p - x, f)
    g = list(xp)
    while len(g) < 2:
        g.append(0)
    g[1] = (g[1] - 1) % p
    h = _pgcd(f, _ptrim(g), p)
    return max(len(h) - 1, 0)


def quad_has_root(A, B, C, p):
    """Whether A x^2 + B x + C = 0 has a solution in F_p (A not = 0 mod p)."""
    if p == 2:
        return any((A * x * x + B * x + C) % 2 == 0 for x in (0, 1))
    disc = (B * B - 4 * A * C) % p
    return disc == 0 or kronecker(disc, p) == 1


def quad_double_root(A, B, C, p):
    """The double root in F_p of A x^2 + B x + C, assumed to exist."""
    if p == 2:
        for x in (0, 1):
            if (A * x * x + B * x + C) % 2 == 0:
                return x
        raise ArithmeticError("no root mod 2")
    return (-B) * pow(2 * A, -1, p) % p


def cubic_structure(c2, c1, c0, p):
    """Multiplicity pattern of the monic cubic T^3 + c2 T^2 + c1 T + c0 over F_p.

    Returns one of
      ('distinct', k)   -- squarefree over F_p-bar, k rational roots (k in 0,1,3)
      ('double', alpha) -- one double root alpha in F_p plus a simple root
      ('triple', alpha) -- a triple root alpha in F_p
    """
    c2, c1, c0 = c2 % p, c1 % p, c0 % p
    if p <= 3:
        roots = {}
        for x in range(p):
            if (x**3 + c2 * x * x + c1 * x + c0) % p == 0:
                # multiplicity by synthetic division
                m, f = 0, [c0, c1, c2, 1]
                while True:
                    q, r = [], 0
                    for c in reversed(f):
                        r = (r * x + c) % p
                        q.append(r)
                    if q.pop() != 0:  # remainder
                        break
                    f = list(reversed(q))
                    m += 1
                    if len(f) == 1:
                        break
                roots[x] = m
        tot = sum(roots.values())
        if 3 in roots.values():
            return ('triple', next(x for x, m in roots.items() if m == 3))
        if 2 in roots.values():
            return ('double', next(x for x, m in roots.items() if m == 2))
        if tot == len(roots):  # all simple; a double root would be rational
            return ('distinct', len(roots))
        raise ArithmeticError("unreachable cubic pattern")
    disc = (18 * c2 * c1 * c0 - 4 * c2**3 * c0 + c2 * c2 * c1 * c1
            - 4 * c1**3 - 27 * c0 * c0) % p
    f = [c0, c1, c2, 1]
    if disc != 0:
        return ('distinct', count_roots_mod(f, p))
    g = _pgcd(f, [c1, 2 * c2 % p, 3], p)
    if len(g) == 2:            # (T - alpha)
        return ('double', (-g[0]) % p)
    if len(g) == 3:            # (T - alpha)^2
        return ('triple', (-c2) * pow(3, -1, p) % p)
    raise ArithmeticError("unreachable cubic pattern")
