"""The y^2 + a x y + b y = x^3 family: classification, duals, periods.

Every member carries the rational 3-torsion point (0, 0).  The closed-form
classifier reads off reduction types from valuations of a, b and
D = a^3 - 27 b alone; here we spot-check it against the Tate oracle and
show the 3-isogenous dual curve sharing the conductor.

Run with:  python3 demos/three_isogeny_family.py
"""

from ecq.analytic import real_period
from ecq.family3 import FamilyCurve, classify, dual
from ecq.localdata import bad_primes, conductor, tate
from ecq.torsion import point_order

for a, b in [(1, 8), (5, 5), (5, 25), (6, 1), (-3, 2)]:
    F = FamilyCurve(a, b)
    E = F.curve()
    print(f"family ({a}, {b}): D = {F.D}, conductor {conductor(E)}, "
          f"(0,0) has order {point_order(E, (0, 0))}")
    for p in bad_primes(E):
        res = classify(F, p)
        ld = tate(E, p)
        names = "/".join(sorted(str(k) for k in res.candidates))
        pin = f", c_p={res.c_p}" if res.c_p is not None else ""
        print(f"  p={p}: classifier {names}{pin}; Tate says "
              f"{ld.kodaira}, c_p={ld.c_p}")
    Ehat = dual(F)
    ratio = real_period(E) / real_period(Ehat)
    print(f"  dual {tuple(int(x) for x in Ehat.a_invariants)}: "
          f"conductor {conductor(Ehat)}, period ratio {float(ratio):.6f}")
