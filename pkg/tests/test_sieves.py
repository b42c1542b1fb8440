import itertools
import math

import pytest

from rootnum.intarith import is_squarefree, liouville
from rootnum.polyring import IntPoly
from rootnum.sieves import (EVERYTHING, ArithProgression, Exhausted,
                            SeedNotFound, SievePrescription, combined_census,
                            density_constant, fixed_divisor, liouville_census,
                            sieve_stream, squarefree_census)

T = IntPoly([0, 1])


def test_arith_progression_normalizes_and_iterates():
    pr = ArithProgression(-3, 5)
    assert pr.a == 2
    assert list(pr.window(12)) == [-8, -3, 2, 7, 12]
    assert list(itertools.islice(pr.stream(), 6)) == [2, -3, 7, -8, 12, -13]
    with pytest.raises(ValueError):
        ArithProgression(1, 0)
    assert list(EVERYTHING.window(2)) == [-2, -1, 0, 1, 2]


def test_fixed_divisor():
    assert fixed_divisor(T) == (1, 1)
    assert fixed_divisor(T * T + T) == (2, 1)
    assert fixed_divisor(IntPoly([2, 4])) == (2, 1)
    assert fixed_divisor(IntPoly([4, 8])) == (4, 2)
    # T(T+1)(T+2)(T+3) always divisible by 24 = 2^3 * 3
    f = T * (T + 1) * (T + 2) * (T + 3)
    assert fixed_divisor(f) == (24, 4)
    with pytest.raises(ValueError):
        fixed_divisor(IntPoly([]))


def test_density_constant_frozen():
    c_t = density_constant(T)
    c_t2 = density_constant(T * T + 1)
    assert abs(float(c_t) - 0.6079330691140551) < 1e-14
    assert abs(float(c_t2) - 0.8948499371774047) < 1e-14
    # the full product for T is 6/pi^2; truncation at 1e4 is close above
    assert 0 < float(c_t) - 6 / math.pi**2 < 1e-4
    # deeper truncation only shrinks the product
    assert density_constant(T, prime_cutoff=100) > c_t


def test_density_constant_respects_progression():
    # squarefree density among odd t: 8/pi^2 in the limit; the truncated
    # product versus the census at X = 4000
    odd = ArithProgression(1, 2)
    c = density_constant(T, odd)
    count, dens = squarefree_census(T, odd, 4000)
    assert abs(dens - 2 * float(c)) < 0.01


def test_density_constant_rejects_bad_input():
    with pytest.raises(ValueError):
        density_constant(T * T)  # not squarefree
    with pytest.raises(ValueError):
        density_constant(2 * T)  # not primitive
    with pytest.raises(ValueError):
        density_constant(IntPoly([]))


def test_squarefree_census_matches_brute_force():
    count, dens = squarefree_census(T, EVERYTHING, 300)
    brute = sum(1 for t in range(-300, 301) if t and is_squarefree(t))
    assert count == brute
    assert dens == brute / 600  # t = 0 skipped from the denominator

    f = T * T + T  # d_f = 1, value 0 at two points
    count, _ = squarefree_census(f, EVERYTHING, 200)
    brute = sum(1 for t in range(-200, 201)
                if f(t) and is_squarefree(int(f(t))))
    assert count == brute


def test_liouville_census_matches_brute_force():
    s, avg = liouville_census(T, EVERYTHING, 500)
    brute = sum(liouville(t) for t in range(-500, 501) if t)
    assert s == brute and avg == brute / 500
    assert liouville_census(T, EVERYTHING, 1000)[0] == -28


def test_combined_census_brute_force():
    f, g = T, T * T + 1
    count, dens = combined_census(f, g, EVERYTHING, 150)
    brute = 0
    for t in range(-150, 151):
        v = t * (t * t + 1)
        if v == 0 or not is_squarefree(v):
            continue
        if liouville(t) == -1:
            brute += 1
    assert count == brute


def test_prescription_validation():
    f, g = T, T + 1
    pr = ArithProgression(57, 108)
    ok = SievePrescription(pr, f, g, primes=(3,), exponents_f=(1,),
                           exponents_g=(0,))
    ok.check_seed()

    with pytest.raises(ValueError, match="coprime"):
        SievePrescription(pr, T * (T + 1), T + 1)
    with pytest.raises(ValueError, match="absorb 5\\^3"):
        SievePrescription(ArithProgression(5, 100), f, g, primes=(5,),
                          exponents_f=(1,), exponents_g=(1,))
    with pytest.raises(ValueError, match="absorb 2\\^2"):
        SievePrescription(ArithProgression(1, 9), T * T + 1, g, primes=(3,),
                          exponents_f=(0,), exponents_g=(0,))
    with pytest.raises(ValueError, match="exponent per prime"):
        SievePrescription(pr, f, g, primes=(3,), exponents_f=(1,))
    with pytest.raises(ValueError, match="distinct"):
        SievePrescription(ArithProgression(57, 108 * 9), f, g, primes=(3, 3),
                          exponents_f=(1, 1), exponents_g=(0, 0))


def test_check_seed_failures():
    f, g = T, T + 1
    # class forces nu_3(t) >= 2 but exact valuation 1 requested
    bad = SievePrescription(ArithProgression(81, 108), f, g, primes=(3,),
                            exponents_f=(1,), exponents_g=(0,))
    with pytest.raises(SeedNotFound, match="wrong 3-valuation"):
        bad.check_seed()
    # 4 | t along the class while 2 is not in S
    bad = SievePrescription(ArithProgression(12, 108), f, g, primes=(3,),
                            exponents_f=(1,), exponents_g=(0,))
    with pytest.raises(SeedNotFound, match="mod 2"):
        bad.check_seed()


def test_sieve_stream_outputs_verify():
    f, g = T, T + 1
    pre = SievePrescription(ArithProgression(57, 108), f, g, primes=(3,),
                            exponents_f=(1,), exponents_g=(0,))
    got = list(itertools.islice(sieve_stream(pre), 12))
    assert 57 in got
    for t in got:
        assert t % 108 == 57 % 108
        fac = abs(t)
        assert fac % 3 == 0 and fac % 9 != 0
        assert is_squarefree(fac // 3) and math.gcd(fac // 3, 3) == 1
        assert is_squarefree(t + 1) and (t + 1) % 3 != 0
        assert pre.admissible(t)
    assert not pre.admissible(got[0] + 1)


def test_sieve_stream_constraints_and_exhaustion():
    f, g = T, T + 1
    pre = SievePrescription(
        ArithProgression(57, 108), f, g, primes=(3,), exponents_f=(1,),
        exponents_g=(0,), sign_constraints=((T, 1),), liouville_target=1)
    for t in itertools.islice(sieve_stream(pre), 5):
        assert t > 0 and liouville(t) == 1

    with pytest.raises(Exhausted):
        list(sieve_stream(pre, search_bound=10**4))

    # a prescription that can never fire: t > 0 and t < 0 at once
    impossible = SievePrescription(
        ArithProgression(57, 108), f, g, primes=(3,), exponents_f=(1,),
        exponents_g=(0,), sign_constraints=((T, 1), (-T, 1)))
    with pytest.raises(Exhausted, match="no admissible"):
        next(iter(sieve_stream(impossible, search_bound=3000)))
