from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecq.curve import (IsoData, invariants, minimal_model, quadratic_twist,
                       squarefree_part, transform)
from ecq.errors import NotSquarefree, SingularCurve

small_int = st.integers(-30, 30)
ai_tuple = st.tuples(st.integers(-5, 5), st.integers(-5, 5),
                     st.integers(-5, 5), small_int, small_int)
iso_part = st.fractions(min_value=-4, max_value=4, max_denominator=3)
iso_u = st.fractions(min_value=Fraction(1, 3), max_value=4, max_denominator=3)


def curves(draw_tuple):
    try:
        return invariants(*draw_tuple)
    except SingularCurve:
        return None


def test_invariant_identities():
    E = invariants(1, -2, 3, -4, 5)
    assert 1728 * E.discriminant == E.c4 ** 3 - E.c6 ** 2
    assert 4 * E.b8 == E.b2 * E.b6 - E.b4 ** 2


def test_singular_rejected():
    with pytest.raises(SingularCurve):
        invariants(0, 0, 0, 0, 0)


@given(ai_tuple, iso_u, iso_part, iso_part, iso_part)
@settings(max_examples=150, deadline=None)
def test_transform_preserves_j_and_iso_inverts(ai, u, r, s, t):
    E = curves(ai)
    if E is None:
        return
    iso = IsoData(u, r, s, t)
    F = transform(E, iso)
    assert F.j == E.j
    assert F.c4 * u ** 4 == E.c4
    assert transform(F, iso.inverse()) == E


@given(iso_u, iso_part, iso_part, iso_part, iso_u, iso_part, iso_part, iso_part)
@settings(max_examples=100, deadline=None)
def test_iso_composition(u1, r1, s1, t1, u2, r2, s2, t2):
    E = invariants(1, 0, 1, -3, 3)
    a, b = IsoData(u1, r1, s1, t1), IsoData(u2, r2, s2, t2)
    assert transform(transform(E, a), b) == transform(E, a.compose(b))
    assert a.compose(a.inverse()).is_identity()


@given(ai_tuple)
@settings(max_examples=120, deadline=None)
def test_minimal_model_idempotent_and_reduced(ai):
    E = curves(ai)
    if E is None:
        return
    Em, iso = minimal_model(E)
    assert transform(E, iso) == Em
    assert Em.a1 in (0, 1) and Em.a3 in (0, 1) and Em.a2 in (-1, 0, 1)
    Em2, iso2 = minimal_model(Em)
    assert Em2 == Em and iso2.is_identity()


@given(ai_tuple, st.sampled_from([-1, 2, -2, 3, 5, -5, 6, 7, -10, 11]))
@settings(max_examples=100, deadline=None)
def test_twist_is_an_involution(ai, d):
    E = curves(ai)
    if E is None:
        return
    Ett = quadratic_twist(quadratic_twist(E, d), d)
    assert minimal_model(Ett)[0] == minimal_model(E)[0]


def test_twist_rejects_non_squarefree():
    E = invariants(0, 0, 0, -1, 0)
    with pytest.raises(NotSquarefree):
        quadratic_twist(E, 12)


def test_squarefree_part():
    assert squarefree_part(50) == 2
    assert squarefree_part(-45) == -5
    assert squarefree_part(7) == 7


def test_minimal_model_known_scalings():
    # [0,0,0,0,64] rescales by u = 2 down to y^2 = x^3 + 1
    E = invariants(0, 0, 0, 0, 64)
    Em, iso = minimal_model(E)
    assert tuple(Em.a_invariants) == (0, 0, 0, 0, 1)
    assert iso.u == 2
    # large twelfth-power scaling collapses back to 11a1
    base = invariants(0, -1, 1, -10, -20)
    big = transform(base, IsoData(Fraction(1, 6)))
    assert minimal_model(big)[0] == base
