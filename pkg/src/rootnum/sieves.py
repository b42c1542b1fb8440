"""Squarefree/Liouville censuses, Euler-product density constants, and
constructive sieve streams over arithmetic progressions.

The censuses measure how often a polynomial's values are squarefree (after
dividing out the fixed square divisor) and how the Liouville function
averages along them; the density constants give the truncated Euler
products those frequencies approach.  The streams do the constructive
counterpart: emit integers t in a progression whose polynomial values have
prescribed exact valuations at a finite set of primes, are squarefree
outside it, and satisfy requested sign and Liouville conditions.  The
stream logic is a plain residue-class scan -- polynomial values grow fast
enough that factorization dominates anyway -- and every emitted t is
re-verified by factorization before it leaves the stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intarith import factorize, is_squarefree, liouville
from .polyring import IntPoly, count_roots_padic, poly_gcd, squarefree_part


class SeedNotFound(ValueError):
    """The progression class is incompatible with the prescription."""


class Exhausted(RuntimeError):
    """Search bound reached without (further) output."""


@dataclass(frozen=True)
class ArithProgression:
    """a + N*Z, normalized to 0 <= a < N."""

    a: int
    N: int

    def __post_init__(self):
        if self.N <= 0:
            raise ValueError("modulus must be a positive integer")
        object.__setattr__(self, "a", self.a % self.N)

    def window(self, X: int):
        """Members t with |t| <= X, increasing."""
        t = self.a - self.N * ((self.a + X) // self.N)
        while t <= X:
            yield t
            t += self.N

    def stream(self):
        """All members, ordered by |t|."""
        up, down = self.a, self.a - self.N
        while True:
            if abs(up) <= abs(down):
                yield up
                up += self.N
            else:
                yield down
                down -= self.N


EVERYTHING = ArithProgression(0, 1)


def fixed_divisor(f: IntPoly) -> tuple[int, int]:
    """(delta_f, d_f): gcd of all values of f, and the smallest d_f with
    delta_f/d_f squarefree.

    The gcd over all of Z equals the gcd of f(0), ..., f(deg f).
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no fixed divisor")
    delta_f = 0
    for t in range(f.degree + 1):
        delta_f = math.gcd(delta_f, int(f(t)))
    d_f = math.prod(p ** (e - 1)
                    for p, e in factorize(delta_f).factors if e >= 2)
    return delta_f, d_f


def _check_census_poly(f: IntPoly, primitive=False):
    if f.is_zero():
        raise ValueError("zero polynomial")
    if squarefree_part(f) != f.content_primitive()[1]:
        raise ValueError(f"{f} is not squarefree")
    if primitive and f.content_primitive()[0] not in (1, -1):
        raise ValueError(f"{f} is not primitive")


def _count_solutions(f: IntPoly, mod: int) -> int:
    total = 0
    for r in range(mod):
        if int(f(r)) % mod == 0:
            total += 1
    return total


def density_constant(f: IntPoly, progression: ArithProgression = EVERYTHING,
                     prime_cutoff: int = 10**4) -> Fraction:
    """Truncated C_{f,A} = (1/N) prod_{p <= cutoff, p not| N}
    (1 - t_f(p)/p^(2+nu_p)), exactly.

    t_f(p) counts roots of f mod p^(2+nu_p) with nu_p the valuation of the
    smallest d_f making delta_f/d_f squarefree; the census density of
    "f(t)/d_f squarefree" approaches N * C_{f,A} among members.
    """
    _check_census_poly(f, primitive=True)
    _, d_f = fixed_divisor(f)
    N = progression.N
    out = Fraction(1, N)
    for p in _primes_to(prime_cutoff):
        if N % p == 0:
            continue
        nu = 0
        while d_f % p ** (nu + 1) == 0:
            nu += 1
        mod = p ** (2 + nu)
        t_f = (_count_solutions(f, mod) if p <= f.degree or d_f % p == 0
               else count_roots_padic(f, p, 2 + nu))
        out *= Fraction(mod - t_f, mod)
    return out


def _primes_to(X: int) -> list:
    sieve = bytearray([1]) * (X + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(X) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytes(len(range(i * i, X + 1, i)))
    return [i for i in range(2, X + 1) if sieve[i]]


def squarefree_census(f: IntPoly, progression: ArithProgression,
                      X: int) -> tuple[int, float]:
    """(count, density) of members |t| <= X with f(t)/d_f squarefree.

    Values f(t) = 0 are skipped (excluded from count and denominator).
    """
    _check_census_poly(f)
    _, d_f = fixed_divisor(f)
    count = total = 0
    for t in progression.window(X):
        v = int(f(t))
        if v == 0:
            continue
        total += 1
        if is_squarefree(v // d_f):
            count += 1
    return count, count / max(total, 1)


def liouville_census(f: IntPoly, progression: ArithProgression,
                     X: int) -> tuple[int, float]:
    """(S(X), S(X)/X) with S(X) the sum of liouville(f(t)) over members
    |t| <= X, skipping f(t) = 0."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    s = 0
    for t in progression.window(X):
        v = int(f(t))
        if v != 0:
            s += liouville(v)
    return s, s / max(X, 1)


def combined_census(f: IntPoly, g: IntPoly, progression: ArithProgression,
                    X: int, liouville_target: int = -1,
                    sign_constraints: tuple = ()) -> tuple[int, float]:
    """(count, density) of members |t| <= X with f(t)g(t)/d_{fg} squarefree,
    liouville(f(t)) on target, and every (poly, sign) constraint satisfied.

    The comparison constant for the density is N * C_{fg,A} / 2.
    """
    fg = f * g
    _check_census_poly(fg)
    _, d = fixed_divisor(fg)
    count = total = 0
    for t in progression.window(X):
        v = int(fg(t))
        if v == 0:
            continue
        total += 1
        if not is_squarefree(v // d):
            continue
        if liouville(int(f(t))) != liouville_target:
            continue
        if all(s * int(h(t)) > 0 for h, s in sign_constraints):
            count += 1
    return count, count / max(total, 1)


@dataclass(frozen=True)
class SievePrescription:
    """What a constructive stream must produce, and from which class.

    f, g: squarefree coprime polynomials whose values must factor as
    (exact S-part) * squarefree; exponents_f/exponents_g give the exact
    valuation of f(t)/g(t) at each prime of S.  sign_constraints holds
    (IntPoly, required sign) pairs; liouville_target constrains
    liouville(f(t)) when not None.  The progression modulus must absorb
    the prescription: p_i^(t_i + t'_i + 1) divides N for each S-prime, and
    p^2 divides N for every other prime up to the degree bound (the seed
    conditions are then constant along the class).
    """

    progression: ArithProgression
    f: IntPoly
    g: IntPoly
    primes: tuple = ()
    exponents_f: tuple = ()
    exponents_g: tuple = ()
    sign_constraints: tuple = ()
    liouville_target: int | None = None

    def __post_init__(self):
        if len(self.primes) != len(set(self.primes)):
            raise ValueError("S must consist of distinct primes")
        if len(self.exponents_f) != len(self.primes) or \
                len(self.exponents_g) != len(self.primes):
            raise ValueError("one exponent per prime of S required")
        if self.f.is_zero() or self.g.is_zero():
            raise ValueError("zero polynomial")
        if poly_gcd(self.f, self.g).degree > 0:
            raise ValueError("f and g must be coprime")
        N = self.progression.N
        for p, tf, tg in zip(self.primes, self.exponents_f,
                             self.exponents_g):
            if N % p ** (tf + tg + 1):
                raise ValueError(
                    f"modulus must absorb {p}^{tf + tg + 1}")
        bound = max(self.f.degree, self.f.degree + self.g.degree - 1)
        for p in _primes_to(max(bound, 0)):
            if p not in self.primes and N % (p * p):
                raise ValueError(f"modulus must absorb {p}^2")

    def check_seed(self):
        """Class-level admissibility of the progression (the conditions
        below are constant along a mod N); raises SeedNotFound."""
        a, N = self.progression.a, self.progression.N
        fa, ga = int(self.f(a)), int(self.g(a))
        for p, tf, tg in zip(self.primes, self.exponents_f,
                             self.exponents_g):
            if _nu_capped(fa, p, tf + 1) != tf or \
                    _nu_capped(ga, p, tg + 1) != tg:
                raise SeedNotFound(
                    f"class forces wrong {p}-valuation (want {tf}, {tg})")
        for p, _ in factorize(N).factors:
            if p not in self.primes and fa * ga % (p * p) == 0:
                raise SeedNotFound(f"f(a)g(a) = 0 mod {p}^2 on the class")

    def admissible(self, t: int) -> bool:
        """Full re-verification of every predicate, by factorization."""
        if (t - self.progression.a) % self.progression.N:
            return False
        fv, gv = int(self.f(t)), int(self.g(t))
        if fv == 0 or gv == 0:
            return False
        for value, exps in ((fv, self.exponents_f), (gv, self.exponents_g)):
            fac = factorize(value)
            for p, e in zip(self.primes, exps):
                if fac.nu(p) != e:
                    return False
            if any(e >= 2 for q, e in fac.factors if q not in self.primes):
                return False
        if self.liouville_target is not None and \
                liouville(fv) != self.liouville_target:
            return False
        return all(s * int(h(t)) > 0 for h, s in self.sign_constraints)


def _nu_capped(n: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and n % p == 0:
        n //= p
        v += 1
    return v


def sieve_stream(prescription: SievePrescription, search_bound: int = 10**6):
    """Admissible t in order of growing |t|.

    Raises SeedNotFound immediately when the progression class cannot
    carry the prescription, and Exhausted once |t| passes search_bound
    (the infinitude of outputs is conjectural; this only searches).
    """
    prescription.check_seed()
    emitted = False
    for t in prescription.progression.stream():
        if abs(t) > search_bound:
            raise Exhausted(
                f"no{' further' if emitted else ''} admissible t with "
                f"|t| <= {search_bound}")
        if prescription.admissible(t):
            emitted = True
            yield t
