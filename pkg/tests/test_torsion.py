from fractions import Fraction

import pytest

from ecq.curve import invariants, transform, IsoData
from ecq.errors import OrderOutOfRange
from ecq.torsion import (O, add, count_points_mod, has_point_of_order, mul,
                         neg, point_order, torsion_subgroup)
from ecq.localdata import conductor

# (a-invariants, expected (n1, n2)); shapes cross-checked against point
# counts mod several good primes
CASES = [
    ((0, -1, 1, -10, -20), (5, 1)),
    ((0, 0, 1, 0, 0), (3, 1)),
    ((1, 0, 1, 4, -6), (6, 1)),
    ((0, 0, 0, -1, 0), (2, 2)),
    ((0, 0, 0, 0, 1), (6, 1)),
    ((0, 0, 0, 4, 0), (4, 1)),
    ((0, 0, 0, -43, 166), (7, 1)),
    ((1, -1, 1, -14, 29), (9, 1)),
    ((0, 1, 1, 0, 0), (1, 1)),       # rank 1, trivial torsion
    ((1, 1, 1, -10, -10), (4, 2)),   # needs halving of a 2-torsion point
    ((1, -1, 1, -3, 3), (7, 1)),
]


@pytest.mark.parametrize("ai,shape", CASES)
def test_torsion_shapes(ai, shape):
    E = invariants(*ai)
    T = torsion_subgroup(E)
    assert (T.n1, T.n2) == shape
    for P in T.generators:
        assert point_order(E, P) in (T.n1, T.n2)


def test_order_eight_cyclic():
    # Tate normal form with (0,0) of order 8 (b = 3, c = 3/2)
    b, c = Fraction(3), Fraction(3, 2)
    E = invariants(1 - c, -b, -b, 0, 0)
    T = torsion_subgroup(E)
    assert (T.n1, T.n2) == (8, 1)
    assert point_order(E, (0, 0)) == 8


@pytest.mark.parametrize("ai,shape", CASES)
def test_torsion_divides_good_counts(ai, shape):
    E = invariants(*ai)
    order = torsion_subgroup(E).order
    N = conductor(E)
    for p in (5, 7, 11, 13):
        if N % p:
            assert count_points_mod(E, p) % order == 0


def test_group_law():
    E = invariants(0, -1, 1, -10, -20)
    P = (Fraction(5), Fraction(5))
    assert point_order(E, P) == 5
    assert add(E, P, neg(E, P)) is O
    assert mul(E, 5, P) is O
    assert mul(E, 2, P) == add(E, P, P)
    # associativity spot check with distinct points
    Q = mul(E, 2, P)
    R = mul(E, 3, P)
    assert add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R))


def test_torsion_tracks_model_changes():
    E = invariants(0, -1, 1, -10, -20)
    F = transform(E, IsoData(Fraction(1, 2), 3, 1, -2))
    T = torsion_subgroup(F)
    assert T.order == 5
    for P in T.generators:
        assert point_order(F, P) == 5


def test_has_point_of_order():
    E = invariants(1, 0, 1, -1, 0)        # Z/6
    assert has_point_of_order(E, 2) and has_point_of_order(E, 3)
    assert has_point_of_order(E, 6)
    assert not has_point_of_order(E, 4)
    with pytest.raises(OrderOutOfRange):
        has_point_of_order(E, 11)
    with pytest.raises(OrderOutOfRange):
        has_point_of_order(E, 13)


def test_point_order_rejects_off_curve():
    E = invariants(0, 0, 0, -1, 0)
    with pytest.raises(ValueError):
        point_order(E, (2, 2))
