"""Rank-0 analytic data: L(E,1), real period, and the analytic Sha order.

Run with:  python3 demos/rank_zero_bsd.py
"""

from ecq.analytic import l_value_rank0, real_period, sha_analytic_rank0
from ecq.dataio import named_curves
from ecq.errors import RankPositiveSuspected
from ecq.rootnum import global_root_number

nc = named_curves()

for label in ("11a1", "14a4", "54b3", "324.b1", "171.b2"):
    E = nc[label].curve()
    w = global_root_number(E)
    print(f"{label}: global root number {w if w is not None else 'undetermined'}")
    try:
        data = sha_analytic_rank0(E, assume_even=(w is None))
    except RankPositiveSuspected:
        print("  L(E,1) vanishes numerically; rank is positive, skipping")
        continue
    L = l_value_rank0(E, assume_even=(w is None))
    print(f"  L(E,1) = {float(L.value):.10f}  (tail bound {float(L.tail):.2e}, "
          f"{L.terms} terms)")
    print(f"  Omega = {float(real_period(E)):.10f}, torsion {data.torsion_order}, "
          f"Tamagawa product {data.tamagawa}")
    print(f"  analytic Sha = {data.sha}  (residual {float(data.residual):.2e})")
