"""Exact integer arithmetic: factorization, p-adic splits, quadratic symbols.

Everything downstream (Tate's algorithm, the sign formula, the sieves) consumes
integers through this module, so factorization is deterministic and cached.
The primality test is Miller-Rabin with the fixed witness set {2,...,37},
deterministic below 3.3e24 (desk scale for this package); above that bound the
witness list is extended, which is believed (not proven) sufficient far beyond
any size reachable here.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


SMALL_PRIMES = _small_primes(10_000)
_SMALL_PRIME_SET = set(SMALL_PRIMES)

# Deterministic below 3_317_044_064_679_887_385_961_981 (Sorenson-Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_WITNESSES_BIG = _MR_WITNESSES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for |n| within desk scale."""
    if n < 2:
        return False
    if n <= SMALL_PRIMES[-1]:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    witnesses = _MR_WITNESSES if n < _MR_DETERMINISTIC_BOUND else _MR_WITNESSES_BIG
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant).

    The (y0, c) walk parameters are derived from n so repeated runs are
    reproducible; on a degenerate cycle the constant is bumped and the walk
    restarts.  Termination is guaranteed for composite n since some c works.
    """
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y = (n >> 4) % (n - 3) + 2
        c = seed % (n - 2) + 1
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 1


@dataclass(frozen=True)
class Factorization:
    """Signed factorization value = sign * prod p^e, factors sorted by p."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def nu(self, p: int) -> int:
        """nu_p(value): exponent of p (0 when p does not divide)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def prime_to(self, p: int) -> int:
        """The prime-to-p part value / p^nu_p(value), sign included."""
        e = self.nu(p)
        return self.value // p**e if e else self.value

    @property
    def omega_total(self) -> int:
        """Omega: number of prime factors with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def omega_distinct(self) -> int:
        """omega: number of distinct prime factors."""
        return len(self.factors)

    def radical(self) -> int:
        return math.prod(p for p, _ in self.factors)

    def divisors_count(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)


_CACHE: dict[int, tuple[tuple[int, int], ...]] = {}
_CACHE_LIMIT = 1 << 20
_cache_path = None
_cache_dirty = False


def _factor_positive(n: int) -> list[tuple[int, int]]:
    out = []
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n == 1:
        return out
    # n now has no factor <= 1e4; peel with rho + recursion on composites
    stack = [n]
    found: dict[int, int] = {}
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = _brent_rho(m)
        stack += [d, m // d]
    out += sorted(found.items())
    out.sort()
    return out


def factorize(n: int) -> Factorization:
    """Full signed factorization of n != 0, cached and deterministic."""
    if n == 0:
        raise ValueError("factorize(0)")
    sign = -1 if n < 0 else 1
    m = abs(n)
    fac = _CACHE.get(m)
    if fac is None:
        fac = tuple(_factor_positive(m))
        if len(_CACHE) < _CACHE_LIMIT:
            _CACHE[m] = fac
            global _cache_dirty
            _cache_dirty = True
    return Factorization(n, sign, fac)


def load_cache(path: str | None = None) -> int:
    """Warm the factorization cache from ROOTNUM_CACHE (or explicit path)."""
    global _cache_path
    path = path or os.environ.get("ROOTNUM_CACHE")
    if not path:
        return 0
    _cache_path = path
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return 0
    n = 0
    for k, v in data.items():
        _CACHE[int(k)] = tuple((int(p), int(e)) for p, e in v)
        n += 1
    return n


def save_cache(path: str | None = None) -> None:
    global _cache_dirty
    path = path or _cache_path or os.environ.get("ROOTNUM_CACHE")
    if not path or not _cache_dirty:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({str(k): list(v) for k, v in _CACHE.items()}, fh)
    os.replace(tmp, path)
    _cache_dirty = False


def padic_split(n: int, p: int) -> tuple[int, int]:
    """(nu, u) with n = p^nu * u, p not dividing u.  n != 0."""
    if n == 0:
        raise ValueError("padic_split(0, p)")
    nu = 0
    while n % p == 0:
        n //= p
        nu += 1
    return nu, n


def jacobi(a: int, b: int) -> int:
    """Jacobi symbol (a/b) for odd b >= 1 (0 when gcd > 1)."""
    if b <= 0 or b % 2 == 0:
        raise ValueError("jacobi needs positive odd b, got %r" % (b,))
    a %= b
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                t = -t
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            t = -t
        a %= b
    return t if b == 1 else 0


def modified_jacobi(a: int, b: int, delta: int) -> int:
    """Symbol (a/b)_delta = prod over primes p | b, p not dividing delta of
    (a_(p) / p)^{nu_p(b)}, where a_(p) is the prime-to-p part of a.

    Never zero: the numerator's p-part is stripped before the Legendre symbol.
    An empty product (b = +-1, or all primes of b divide delta) is +1, even
    when a = 0; a = 0 is rejected only if some prime of b survives delta.
    """
    if b == 0:
        raise ValueError("modified_jacobi needs nonzero b")
    if delta % 2 != 0:
        raise ValueError("delta must be even (2*3*... by construction)")
    out = 1
    for p, e in factorize(abs(b)).factors:
        if delta % p == 0:
            continue
        if a == 0:
            raise ValueError("zero numerator at a prime outside delta")
        _, ap = padic_split(a, p)
        if e % 2 == 1 and jacobi(ap % p, p) == -1:
            out = -out
    return out


def liouville(n: int) -> int:
    """Liouville lambda(|n|) = (-1)^Omega(|n|); lambda(+-1) = 1."""
    if n == 0:
        raise ValueError("liouville(0)")
    return -1 if factorize(abs(n)).omega_total % 2 else 1


def squarefree_decompose(n: int) -> tuple[int, int]:
    """n = c^2 * l with l squarefree; returns (c, l), sign carried by l."""
    if n == 0:
        raise ValueError("squarefree_decompose(0)")
    f = factorize(n)
    c = math.prod(p ** (e // 2) for p, e in f.factors)
    l = f.sign * math.prod(p for p, e in f.factors if e % 2)
    return c, l


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(abs(n)).factors)
