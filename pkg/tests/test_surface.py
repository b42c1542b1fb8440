import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootnum.polyring import IntPoly
from rootnum.surface import (Kodaira, SingularFamilyError, build_surface,
                             classify_tame, delta_primes,
                             kodaira_at_finite_place, kodaira_from_string,
                             mu_membership, weierstrass_quantities)

T = IntPoly([0, 1])

small_ints = st.integers(min_value=-40, max_value=40)


@given(small_ints, small_ints, small_ints, small_ints, small_ints)
@settings(max_examples=150, deadline=None)
def test_weierstrass_identity_on_integers(a1, a2, a3, a4, a6):
    b2, b4, b6, b8, c4, c6, delta = weierstrass_quantities(a1, a2, a3, a4, a6)
    assert 4 * b8 == b2 * b6 - b4 * b4
    assert 1728 * delta == c4**3 - c6**2


def test_weierstrass_identity_on_catalog(surfaces):
    for s in surfaces.values():
        assert 1728 * s.delta == s.c4 * s.c4 * s.c4 - s.c6 * s.c6


# (v4, v6, vd) -> expected symbol; None means the invariant vanishes
TAME_TABLE = (
    ((0, 0, 0), "I0"), ((0, 0, 1), "I1"), ((0, 0, 7), "I7"),
    ((1, 1, 2), "II"), ((1, 2, 3), "III"), ((2, 2, 4), "IV"),
    ((2, 3, 6), "I0*"), ((2, 3, 9), "I3*"), ((3, 4, 8), "IV*"),
    ((3, 5, 9), "III*"), ((4, 5, 10), "II*"),
    ((None, 1, 2), "II"), ((1, None, 2), "II"), ((None, 3, 6), "I0*"),
    # non-minimal triples reduce by (4, 6, 12) first
    ((5, 7, 14), "II"), ((4, 6, 12), "I0"), ((6, 9, 18), "I0*"),
)


def test_classify_tame_table():
    for (v4, v6, vd), expect in TAME_TABLE:
        assert str(classify_tame(v4, v6, vd)) == expect, (v4, v6, vd)


def test_classify_tame_rejects_impossible():
    with pytest.raises(ValueError):
        classify_tame(1, 1, 5)
    with pytest.raises(ValueError):
        classify_tame(2, 3, None)


def test_kodaira_roundtrip_and_flags():
    for s in ("I0", "I1", "I12", "II", "III", "IV", "I0*", "I4*", "II*",
              "III*", "IV*"):
        assert str(kodaira_from_string(s)) == s
    assert kodaira_from_string("I0").is_good
    assert kodaira_from_string("I3").is_multiplicative
    assert kodaira_from_string("I3*").is_additive
    assert kodaira_from_string("II").is_additive


def test_kodaira_epsilon_and_components():
    assert kodaira_from_string("II").epsilon == -1
    assert kodaira_from_string("III").epsilon == -2
    assert kodaira_from_string("IV").epsilon == -3
    assert kodaira_from_string("I0*").epsilon == -1
    assert kodaira_from_string("I2*").epsilon == -1
    assert kodaira_from_string("I5").epsilon is None
    assert kodaira_from_string("I0").epsilon is None
    # Ogg component counts
    assert kodaira_from_string("I7").components == 7
    assert kodaira_from_string("I0*").components == 5
    assert kodaira_from_string("I2*").components == 7
    assert kodaira_from_string("IV*").components == 7
    assert kodaira_from_string("III*").components == 8
    assert kodaira_from_string("II*").components == 9


# field Q[T]/(P) -> (contains mu_3, contains mu_4)
MU_TABLE = (
    ((9, 3, 1), True, False),    # T^2+3T+9 = Q(sqrt(-3))
    ((1, 1, 1), True, False),    # T^2+T+1
    ((3, 0, 1), True, False),    # T^2+3
    ((1, 0, 1), False, True),    # T^2+1 = Q(i)
    ((-2, 0, 1), False, False),  # T^2-2
    ((5, 1), False, False),      # linear: Q itself
    ((1, 0, 0, 1), False, False),   # T^3+1 is reducible -> rejected below
)


def test_mu_membership_frozen():
    for coeffs, mu3, mu4 in MU_TABLE[:-1]:
        P = IntPoly(coeffs)
        assert mu_membership(P, 3) is mu3, coeffs
        assert mu_membership(P, 4) is mu4, coeffs
    with pytest.raises(ValueError):
        mu_membership(IntPoly(MU_TABLE[-1][0]), 3)
    with pytest.raises(ValueError):
        mu_membership(IntPoly([9, 3, 1]), 5)


def test_mu_membership_cyclotomic_quartics():
    # 8th and 12th cyclotomic fields contain mu_4 resp. mu_3 and mu_4
    assert mu_membership(IntPoly([1, 0, 0, 0, 1]), 4)       # T^4+1
    assert mu_membership(IntPoly([1, 0, -1, 0, 1]), 3)      # T^4-T^2+1
    assert mu_membership(IntPoly([1, 0, -1, 0, 1]), 4)
    assert not mu_membership(IntPoly([1, 0, 0, 0, 1]), 3)


def test_build_surface_rejects_singular_and_bad_input():
    from fractions import Fraction

    with pytest.raises(SingularFamilyError):
        build_surface((0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        build_surface((0, 0, 0, 0))
    with pytest.raises(ValueError):
        build_surface((0, 0, 0, 0, IntPoly([Fraction(1, 2)])))
    build_surface((0, 0, 0, 0, 1))  # y^2 = x^3 + 1 is fine


def test_isotrivial_flag():
    # y^2 = x^3 + T^6: j = 0 identically
    assert build_surface((0, 0, 0, 0, T**6)).is_isotrivial
    # y^2 = x^3 + x + T: c4 constant, Delta moves
    assert not build_surface((0, 0, 0, 1, T)).is_isotrivial
    for s in build_surface((0, T, 0, -3 - T, 1)),:
        assert not s.is_isotrivial


# frozen classification of the catalog families (finite places + infinity)
CLASSIFICATION = {
    "washington": ([("T^2+3T+9", "II", True)], "I8*"),
    "legendre": ([("T-1", "I2", False), ("T", "I2", False)], "I8*"),
    "F": ([("T-1", "II", False), ("T+1", "II", False)], "I8*"),
    "G": ([("T-1", "II", False), ("T", "III", False)], "I7*"),
    "H": ([("T", "III", False), ("8T^2-11T+8", "II", False)], "I5"),
    "I": ([("T", "II", False), ("T^2-10T+27", "III", False)], "I4"),
    "J": ([("T+1", "II", False), ("T^2-T+1", "II", True)], "I6"),
    "L": ([("T", "IV", False), ("T^2+2", "II", False)], "I4"),
}


def test_catalog_classification(surfaces):
    for name, (finite, inf) in CLASSIFICATION.items():
        s = surfaces[name]
        got = [(str(pl.poly), str(pl.kodaira), pl.insipid) for pl in s.places]
        assert got == finite, name
        assert str(s.infinity.kodaira) == inf, name


def test_catalog_products_and_delta(surfaces):
    w = surfaces["washington"]
    assert (w.n4, w.n6, w.nd) == (16, 32, 16)
    assert w.delta_const == 49152
    assert delta_primes(w) == (2, 3)
    assert str(w.M) == "1" and str(w.B) == "1"

    leg = surfaces["legendre"]
    assert str(leg.M) == "T^2-T" and str(leg.B) == "T^2-T"
    assert delta_primes(leg) == (2, 3)

    h = surfaces["H"]
    assert str(h.M) == "1" and str(h.B) == "8T^3-11T^2+8T"
    assert surfaces["L"].delta_const == 5159780352

    for s in surfaces.values():
        assert delta_primes(s) == (2, 3)
        assert s.delta_const % 6 == 0


def test_place_accessors(surfaces):
    leg = surfaces["legendre"]
    pl = leg.place_for(T)
    assert pl.is_multiplicative and pl.epsilon is None and pl.degree == 1
    assert not pl.at_infinity and leg.infinity.at_infinity
    with pytest.raises(KeyError):
        leg.place_for(T + 5)
    assert leg.a_at(2) == (0, -3, 0, 2, 0)


def test_kodaira_at_finite_place_good_reduction(surfaces):
    leg = surfaces["legendre"]
    assert kodaira_at_finite_place(leg, T).is_multiplicative
    assert kodaira_at_finite_place(leg, T + 5).is_good
    with pytest.raises(ValueError):
        kodaira_at_finite_place(leg, 2 * T)  # not primitive
