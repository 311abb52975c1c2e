import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecq.curve import invariants, quadratic_twist
from ecq.errors import NotPrime, SingularCurve
from ecq.localdata import KodairaType, bad_primes, conductor, tate


def T(text):
    return KodairaType.parse(text)


def test_kodaira_parse_roundtrip():
    for text in ["I0", "I1", "I17", "II", "III", "IV", "I0*", "I5*",
                 "IV*", "III*", "II*"]:
        assert str(T(text)) == text


@given(st.sampled_from(["In", "In*"]), st.integers(1, 50))
def test_kodaira_roundtrip_property(tag, n):
    k = KodairaType(tag, n)
    assert KodairaType.parse(str(k)) == k


def test_kodaira_rejects_garbage():
    with pytest.raises(ValueError):
        KodairaType.parse("V")
    with pytest.raises(ValueError):
        KodairaType("In")          # needs an index


# Frozen oracle values: multiplicative/additive types, Tamagawa numbers and
# conductors for hand-checked small curves.
KNOWN = [
    # (a-invariants, {p: (type, c_p, f_p)}, N)
    ((1, 0, 1, 0, 0), {2: ("I1", 1, 1), 13: ("I1", 1, 1)}, 26),
    ((0, 0, 0, -1, 0), {2: ("III", 2, 5)}, 32),
    ((0, 0, 1, 0, 0), {3: ("II", 1, 3)}, 27),
    ((0, -1, 1, -10, -20), {11: ("I5", 5, 1)}, 11),
    ((1, 0, 1, -1, 0), {2: ("I2", 2, 1), 7: ("I1", 1, 1)}, 14),
    ((0, 0, 0, -39, 94), {2: ("IV*", 3, 2), 3: ("II", 1, 4)}, 324),
    ((0, 0, 1, -84, 315), {3: ("I0*", 2, 2), 19: ("I3", 3, 1)}, 171),
    ((1, -1, 1, -14, 29), {2: ("I9", 9, 1), 3: ("IV", 3, 3)}, 54),
]


@pytest.mark.parametrize("ai,local,N", KNOWN)
def test_frozen_local_data(ai, local, N):
    E = invariants(*ai)
    assert conductor(E) == N
    for p, (kod, c, f) in local.items():
        ld = tate(E, p)
        assert (str(ld.kodaira), ld.c_p, ld.f_p) == (kod, c, f)


def test_split_vs_nonsplit():
    E = invariants(1, 0, 1, 0, 0)          # Delta = -26
    assert tate(E, 2).red_class == "nonsplit_mult"
    assert tate(E, 13).red_class == "split_mult"


def test_tate_requires_prime():
    E = invariants(0, 0, 0, -1, 0)
    with pytest.raises(NotPrime):
        tate(E, 6)


def test_twist_types_at_ramified_primes():
    E = invariants(0, -1, 1, -10, -20)     # good away from 11
    assert str(tate(quadratic_twist(E, 5), 5).kodaira) == "I0*"
    assert str(tate(quadratic_twist(E, -3), 3).kodaira) == "I0*"
    assert str(tate(quadratic_twist(E, 2), 2).kodaira) in ("I8*", "II")


@given(st.integers(-12, 12), st.integers(-12, 12), st.integers(-12, 12))
@settings(max_examples=120, deadline=None)
def test_ogg_formula(a2, a4, a6):
    """f_p = ord_p(Delta_min) - m_p + 1 at every bad prime, m_p the number of
    components of the special fiber."""
    try:
        E = invariants(0, a2, 0, a4, a6)
    except SingularCurve:
        return
    for p in bad_primes(E):
        ld = tate(E, p)
        assert ld.f_p == ld.ord_delta - ld.kodaira.component_count + 1
        assert ld.c_p >= 1
