"""Run the theorem-verification scan over a small (a, b) box.

Each verdict records the statement checked, the curve, a status, and a
witness dictionary.  The scan is deterministic: the same box and options
give a byte-identical report regardless of thread count.

Run with:  python3 demos/verification_scan.py
"""

import sys
from collections import Counter

from ecq.dataio import write_report
from ecq.verify import ScanOptions, scan

opts = ScanOptions(d_set=(-3, 3, 5, -7), threads=4, l_conductor_cap=20_000)
verdicts = scan(range(-15, 16), range(1, 16), opts)

by_theorem = Counter((v.theorem, v.status) for v in verdicts)
for (theorem, status), n in sorted(by_theorem.items()):
    print(f"{theorem:14s} {status:15s} {n}")

fails = [v for v in verdicts if v.status == "fail"]
print(f"\n{len(verdicts)} verdicts, {len(fails)} failures")
for v in fails:
    write_report([v], sys.stdout)
