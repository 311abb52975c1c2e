"""Tour of exact local invariants: minimal models, Kodaira types, twists.

Run with:  python3 demos/local_data_tour.py
"""

from ecq.curve import invariants, minimal_model, quadratic_twist
from ecq.localdata import bad_primes, conductor, tate

E = invariants(0, -1, 1, -10, -20)
print(f"curve a-invariants: {tuple(int(x) for x in E.a_invariants)}")
print(f"discriminant {int(E.discriminant)}, conductor {conductor(E)}")

for p in bad_primes(E):
    ld = tate(E, p)
    print(f"  p={p}: type {ld.kodaira}, c_p={ld.c_p}, f_p={ld.f_p}")

# a quadratic twist by d coprime to the conductor picks up I0* reduction at
# every odd prime dividing d
for d in (-3, 5, -7):
    Ed = quadratic_twist(E, d)
    p = abs(d) if abs(d) != 1 else 3
    ld = tate(Ed, p)
    print(f"twist by {d:+d}: conductor {conductor(Ed)}, "
          f"type at {p} is {ld.kodaira} with c_p={ld.c_p}")

# non-minimal models collapse back under Laska-Kraus-Connell reduction
big = invariants(0, 0, 0, 0, 64)
Em, iso = minimal_model(big)
print(f"minimal model of y^2 = x^3 + 64: "
      f"{tuple(int(x) for x in Em.a_invariants)} (u = {iso.u})")
