from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootnum.polyring import (IntPoly, count_roots_mod, count_roots_padic,
                              crt, discriminant, factor_irreducible, inv_mod,
                              is_irreducible, poly_divmod, poly_gcd, resultant,
                              roots_mod, sqrt_mod, squarefree_part,
                              valuation_at)

T = IntPoly([0, 1])

coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=6)


def poly(*ascending):
    return IntPoly(ascending)


def test_basic_shape():
    f = poly(1, 0, -3)
    assert f.degree == 2 and f.lc == -3
    assert poly().is_zero() and poly(0, 0).is_zero()
    assert poly().degree == -1
    assert f(2) == 1 - 12
    with pytest.raises(AttributeError):
        f.coeffs = ()


def test_trailing_zeros_normalized():
    assert poly(1, 2, 0, 0) == poly(1, 2)
    assert hash(poly(1, 2, 0)) == hash(poly(1, 2))


@given(coeff_lists, coeff_lists, st.integers(min_value=-20, max_value=20))
@settings(max_examples=150, deadline=None)
def test_evaluation_is_ring_homomorphism(a, b, t):
    f, g = IntPoly(a), IntPoly(b)
    assert (f + g)(t) == f(t) + g(t)
    assert (f - g)(t) == f(t) - g(t)
    assert (f * g)(t) == f(t) * g(t)


@given(coeff_lists, st.integers(min_value=0, max_value=4))
@settings(max_examples=60, deadline=None)
def test_pow_matches_repeated_product(a, n):
    f = IntPoly(a)
    expect = IntPoly([1])
    for _ in range(n):
        expect = expect * f
    assert f**n == expect


@given(coeff_lists, st.integers(min_value=-9, max_value=9),
       st.integers(min_value=-9, max_value=9), st.integers(min_value=-9, max_value=9))
@settings(max_examples=80, deadline=None)
def test_compose_linear(a, u, v, t):
    f = IntPoly(a)
    assert f.compose_linear(u, v)(t) == f(u * t + v)


def test_derivative_shift_reverse():
    f = poly(5, 0, 3, 2)  # 2T^3 + 3T^2 + 5
    assert f.derivative() == poly(0, 6, 6)
    assert f.shift(2) == poly(0, 0, 5, 0, 3, 2)
    assert f.reverse() == poly(2, 3, 0, 5)
    assert poly(1, 1).reverse(at_degree=3) == poly(0, 0, 1, 1)
    with pytest.raises(ValueError):
        f.reverse(at_degree=1)


def test_content_primitive():
    c, prim = poly(-6, 0, -9).content_primitive()
    assert c == -3 and prim == poly(2, 0, 3)
    c, prim = IntPoly([Fraction(1, 2), Fraction(3, 4)]).content_primitive()
    assert c == Fraction(1, 4) and prim == poly(2, 3)
    assert poly(-4, 2).primitive == poly(-2, 1)


def test_str_and_repr():
    f = poly(9, 3, 1)
    assert str(f) == "T^2+3T+9"
    assert repr(f) == "IntPoly(1*T^2 +3*T +9)"
    assert str(poly(-1, 1)) == "T-1"
    assert str(poly(0, -1)) == "-T"
    assert str(poly(2)) == "2" and str(poly()) == "0"
    assert str(poly(-2, 0, 3, 1)) == "T^3+3T^2-2"


def test_factor_irreducible_frozen():
    # 6T^2 - 6 = 6 (T-1)(T+1)
    cont, facs = factor_irreducible(poly(-6, 0, 6))
    assert cont == 6
    assert facs == [(poly(-1, 1), 1), (poly(1, 1), 1)]
    # T^4 + 4 = (T^2-2T+2)(T^2+2T+2)
    _, facs = factor_irreducible(poly(4, 0, 0, 0, 1))
    assert facs == [(poly(2, -2, 1), 1), (poly(2, 2, 1), 1)]
    # repeated factor
    _, facs = factor_irreducible(poly(1, 2, 1) * poly(3, 1))
    assert (poly(1, 1), 2) in facs and (poly(3, 1), 1) in facs
    with pytest.raises(ValueError):
        factor_irreducible(poly())


def test_is_irreducible():
    assert is_irreducible(poly(9, 3, 1))  # T^2+3T+9
    assert is_irreducible(poly(1, 0, 1))
    assert not is_irreducible(poly(-1, 0, 1))
    assert not is_irreducible(poly(1, 2, 1))


def test_resultant_discriminant_frozen():
    assert resultant(poly(-1, 1), poly(1, 1)) == 2  # res(T-1, T+1)
    assert resultant(poly(-3, 1), poly(9, 0, 1)) == 18  # res(T-3, T^2+9)
    assert discriminant(poly(1, 1, 1)) == -3
    assert discriminant(poly(-1, 0, 1)) == 4
    # disc of x^3 + aT + b pattern: disc(T^3 - T) = 4
    assert discriminant(poly(0, -1, 0, 1)) == 4


def test_poly_gcd_and_divmod():
    f = poly(1, 2, 1)  # (T+1)^2
    g = poly(-1, 0, 1)  # (T-1)(T+1)
    assert poly_gcd(f, g) == poly(1, 1)
    q, r = poly_divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


def test_valuation_at():
    f = poly(1, 1) ** 3 * poly(5, 2)
    assert valuation_at(f, poly(1, 1)) == 3
    assert valuation_at(f, poly(5, 2)) == 1
    assert valuation_at(f, poly(7, 1)) == 0
    with pytest.raises(ValueError):
        valuation_at(poly(), poly(1, 1))


def test_squarefree_part():
    f = poly(1, 1) ** 3 * poly(-2, 1) ** 2
    assert squarefree_part(f) == poly(1, 1) * poly(-2, 1)


@given(coeff_lists.filter(lambda cs: any(c % 7 for c in cs)),
       st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=120, deadline=None)
def test_roots_mod_matches_brute_force(cs, p):
    f = IntPoly(cs)
    if not any(c % p for c in f.coeffs):
        return
    brute = sorted(t for t in range(p) if f(t) % p == 0)
    assert roots_mod(f, p) == brute
    assert count_roots_mod(f, p) == len(brute)


def test_roots_mod_large_prime():
    p = 10007
    f = poly(-4, 0, 1)  # roots +-2
    assert roots_mod(f, p) == [2, p - 2]
    assert count_roots_mod(poly(1, 0, 1), 10007) == 0  # 10007 = 3 mod 4


@given(coeff_lists.filter(lambda cs: any(cs)), st.sampled_from([2, 3, 5]),
       st.integers(min_value=1, max_value=3))
@settings(max_examples=100, deadline=None)
def test_count_roots_padic_matches_brute_force(cs, p, k):
    f = IntPoly(cs)
    m = p**k
    brute = sum(1 for t in range(m) if f(t) % m == 0)
    assert count_roots_padic(f, p, k) == brute


def test_sqrt_mod():
    for p in (3, 5, 7, 13, 17, 10007, 999983):
        squares = set()
        for a in list(range(min(p, 60))):
            r = sqrt_mod(a, p)
            if pow(a, (p - 1) // 2, p) == 1 or a % p == 0:
                assert r is not None and r * r % p == a % p
                squares.add(a)
            else:
                assert r is None


def test_inv_mod_and_crt():
    assert inv_mod(3, 7) == 5
    with pytest.raises(ValueError):
        inv_mod(6, 9)
    r, m = crt([2, 3], [3, 5])
    assert m == 15 and r % 3 == 2 and r % 5 == 3
    # non-coprime but consistent
    r, m = crt([1, 5], [4, 6])
    assert m == 12 and r % 4 == 1 and r % 6 == 5
    with pytest.raises(ValueError):
        crt([0, 1], [4, 6])
