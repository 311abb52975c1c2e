"""Exact-arithmetic toolkit for elliptic curves over Q: minimal models,
Tate's algorithm, quadratic twists, the 3-torsion family and its 3-isogeny
duals, torsion subgroups, root numbers, and rank-0 analytic invariants.
"""

from .curve import (IsoData, WeierstrassCurve, invariants, minimal_model,
                    quadratic_twist, squarefree_part, transform)
from .errors import (EcqError, NotOrderThree, NotPrime, NotSquarefree,
                     OddFunctionalEquation, OrderOutOfRange,
                     RankPositiveSuspected, SingularCurve,
                     SingularFamilyMember, UnreachableBranch)
from .localdata import (KodairaType, LocalData, bad_primes, conductor,
                        reduction_class, tate)
from .family3 import FamilyCurve, classify, dual, from_curve, normalize
from .torsion import TorsionGroup, has_point_of_order, torsion_subgroup
from .rootnum import global_root_number, local_root_number, root_number_report
from .analytic import (an_list, ap, l_value_rank0, real_period,
                       sha_analytic_rank0, tamagawa_product)
from .dataio import CurveRecord, named_curves, parse_records, write_report
from .verify import (ScanOptions, Verdict, check_divisibility_main,
                     check_theorem31, check_torsion_theorems,
                     check_twist_reduction, scan)

__version__ = "0.1.0"
