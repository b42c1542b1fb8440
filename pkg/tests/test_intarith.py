import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootnum.intarith import (Factorization, factorize, is_prime, is_squarefree,
                              jacobi, liouville, load_cache, modified_jacobi,
                              padic_split, save_cache, squarefree_decompose)

# value -> (sign, ((p, e), ...))
FACTOR_TABLE = {
    1: (1, ()),
    -1: (-1, ()),
    2: (1, ((2, 1),)),
    -1728: (-1, ((2, 6), (3, 3))),
    49152: (1, ((2, 14), (3, 1))),
    600851475143: (1, ((71, 1), (839, 1), (1471, 1), (6857, 1))),
    (2**31 - 1): (1, ((2147483647, 1),)),
    10**9 + 7: (1, ((10**9 + 7, 1),)),
}


def test_factorize_frozen_values():
    for n, (sign, factors) in FACTOR_TABLE.items():
        f = factorize(n)
        assert (f.sign, f.factors) == (sign, factors), n


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=2, max_value=10**12))
@settings(max_examples=120, deadline=None)
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert all(is_prime(p) for p, _ in f.factors)


@given(st.integers(min_value=-10**9, max_value=10**9).filter(lambda n: n != 0))
@settings(max_examples=80, deadline=None)
def test_liouville_is_complete_multiplicativity_of_minus_one(n):
    f = factorize(abs(n))
    assert liouville(n) == (-1) ** sum(e for _, e in f.factors)


MERSENNE_PRIMES = (3, 7, 31, 127, 8191, 131071, 524287, 2147483647)
CARMICHAELS = (561, 1105, 1729, 2465, 2821, 6601, 8911)


def test_is_prime_spot_checks():
    for p in MERSENNE_PRIMES:
        assert is_prime(p)
    for c in CARMICHAELS:
        assert not is_prime(c)
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_padic_split():
    assert padic_split(48, 2) == (4, 3)
    assert padic_split(-48, 2) == (4, -3)
    assert padic_split(7, 5) == (0, 7)
    with pytest.raises(ValueError):
        padic_split(0, 3)


# second-supplement style facts: (a, p) -> symbol
JACOBI_TABLE = (
    (2, 7, 1), (2, 3, -1), (2, 17, 1), (-1, 5, 1), (-1, 7, -1),
    (-3, 7, 1), (-3, 5, -1), (5, 9, 1), (6, 35, -1), (0, 3, 0),
)


def test_jacobi_frozen():
    for a, b, expect in JACOBI_TABLE:
        assert jacobi(a % b, b) == expect, (a, b)


def test_jacobi_rejects_even_or_nonpositive():
    with pytest.raises(ValueError):
        jacobi(3, 4)
    with pytest.raises(ValueError):
        jacobi(3, -5)


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=1, max_value=2000))
@settings(max_examples=100, deadline=None)
def test_jacobi_multiplicative_in_numerator(a, k):
    b = 2 * k + 1
    assert jacobi(a * a % b, b) in (0, 1)
    assert jacobi(a % b, b) ** 2 == (jacobi(a % b, b) != 0)


def test_quadratic_reciprocity_for_odd_primes():
    primes = [p for p in range(3, 120) if is_prime(p)]
    for p in primes:
        for q in primes:
            if p == q:
                continue
            lhs = jacobi(p % q, q) * jacobi(q % p, p)
            rhs = -1 if p % 4 == 3 and q % 4 == 3 else 1
            assert lhs == rhs, (p, q)


def test_modified_jacobi_strips_delta_primes():
    # b = 2^3 * 5 * 7, delta = 2*3*5: only p = 7 contributes
    b = 8 * 5 * 7
    assert modified_jacobi(3, b, 30) == jacobi(3, 7)
    # numerator's p-part is stripped, never zero
    assert modified_jacobi(7, b, 30) == jacobi(1, 7)
    # empty product is +1 even for zero numerator
    assert modified_jacobi(0, 8, 30) == 1
    with pytest.raises(ValueError):
        modified_jacobi(0, 7, 30)
    with pytest.raises(ValueError):
        modified_jacobi(1, 10, 15)  # odd delta is a construction error


@given(st.integers(min_value=-10**8, max_value=10**8).filter(lambda n: n != 0))
@settings(max_examples=60, deadline=None)
def test_squarefree_decompose(n):
    c, l = squarefree_decompose(n)
    assert c * c * l == n
    assert is_squarefree(l)


def test_is_squarefree_edges():
    assert is_squarefree(1) and is_squarefree(-1)
    assert not is_squarefree(0)
    assert is_squarefree(-30)
    assert not is_squarefree(-12)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "factors.json"
    factorize(2**5 * 3**4 * 1009)
    save_cache(str(path))
    assert load_cache(str(path)) > 0
    f = factorize(2**5 * 3**4 * 1009)
    assert f.factors == ((2, 5), (3, 4), (1009, 1))


def test_factorization_dataclass_shape():
    f = factorize(-360)
    assert isinstance(f, Factorization)
    assert f.sign == -1
    assert f.factors == ((2, 3), (3, 2), (5, 1))
    assert f.omega_total == 6
