"""Fiber-level arithmetic: minimal models, Tate's algorithm at every prime,
local root numbers, and the direct global root number of an integer fiber.

The direct path never touches the family-level sign formula, so the two can
cross-validate each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from rootnum.intarith import factorize, jacobi, padic_split
from rootnum.surface import Kodaira, Surface, weierstrass_quantities
from rootnum import localtables


class BadFiberError(ValueError):
    """The fiber is singular (Delta(t) = 0)."""


def transform(ai, u, r, s, t):
    """Weierstrass coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.

    Returns the new (a1, ..., a6); u may be 1 for pure translations.
    """
    a1, a2, a3, a4, a6 = ai
    n1 = a1 + 2 * s
    n2 = a2 - s * a1 + 3 * r - s * s
    n3 = a3 + r * a1 + 2 * t
    n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
    n6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1
    out = []
    for n, k in ((n1, 1), (n2, 2), (n3, 3), (n4, 4), (n6, 6)):
        q, rem = divmod(n, u**k)
        if rem:
            raise ValueError("transformation does not preserve integrality")
        out.append(q)
    return tuple(out)


def _kraus_ok(p, c4, c6):
    """Can (c4, c6) be the invariants of an integral model, locally at p?"""
    if p == 3:
        return c6 == 0 or padic_split(c6, 3)[0] != 2
    if p == 2:
        if c6 % 4 == 3:  # c6 = -1 (mod 4)
            return True
        return c4 % 16 == 0 and c6 % 32 in (0, 8)
    return True


def minimal_model(ai):
    """Global minimal model of an integral curve; returns (ai_min, u)."""
    _, _, _, _, c4, c6, delta = weierstrass_quantities(*ai)
    if delta == 0:
        raise BadFiberError("singular curve")
    if c4 == 0:
        cand = factorize(c6).factors
    elif c6 == 0:
        cand = factorize(c4).factors
    else:
        cand = factorize(math.gcd(abs(c4), abs(c6))).factors
    u = 1
    for p, _ in cand:
        v4 = padic_split(c4, p)[0] if c4 else 10**9
        v6 = padic_split(c6, p)[0] if c6 else 10**9
        vd = padic_split(delta, p)[0]
        d = min(v4 // 4, v6 // 6, vd // 12)
        while d > 0 and p in (2, 3) and not _kraus_ok(
            p, c4 // p ** (4 * d), c6 // p ** (6 * d)
        ):
            d -= 1
        u *= p**d
    return model_from_invariants(c4 // u**4, c6 // u**6), u


def model_from_invariants(c4, c6):
    """Reduced integral model with the given (Kraus-admissible) c4, c6."""
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4, r4 = divmod(b2 * b2 - c4, 24)
    b6, r6 = divmod(-(b2**3) + 36 * b2 * b4 - c6, 216)
    if r4 or r6:
        raise ValueError(f"({c4}, {c6}) is not Kraus-admissible")
    a1 = b2 % 2
    a2 = (b2 - a1) // 4
    a3 = b6 % 2
    a6 = (b6 - a3) // 4
    a4 = (b4 - a1 * a3) // 2
    ai = (a1, a2, a3, a4, a6)
    chk = weierstrass_quantities(*ai)
    if (chk[4], chk[5]) != (c4, c6):
        raise ValueError(f"({c4}, {c6}) is not Kraus-admissible")
    return ai


def _inv(a, p):
    return pow(a, -1, p)


@dataclass(frozen=True)
class LocalData:
    """Reduction data at p, always referring to the minimal model at p."""

    p: int
    kodaira: Kodaira
    vd: int
    conductor: int  # exponent f_p
    split: bool | None  # multiplicative types only
    c4: int = 0
    c6: int = 0
    delta: int = 0

    @property
    def is_good(self):
        return self.kodaira.is_good


def tate_local(ai, p) -> LocalData:
    """Kodaira type, conductor exponent and splitting at p via Tate's walk.

    Accepts any integral model; the final rescaling step strips fourth/sixth
    powers, so the returned data refer to the minimal model at p.
    """
    a1, a2, a3, a4, a6 = ai
    while True:
        b2, b4, b6, b8, c4, c6, delta = weierstrass_quantities(a1, a2, a3, a4, a6)
        if delta == 0:
            raise BadFiberError("singular curve")
        n = padic_split(delta, p)[0]

        def done(kod, f, split=None):
            return LocalData(p, kod, n, f, split, c4, c6, delta)

        if n == 0:
            return done(Kodaira("I", False, 0), 0)

        # move the singular point of the reduction to the origin
        if p == 2:
            if b2 % 2:
                r = a3 % 2
                t = (r + a4) % 2
            else:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            if c4 % p == 0:
                r = -b2 * _inv(12, p) % p
            else:
                r = -(c6 + b2 * c4) * _inv(12 * c4, p) % p
            t = -(a1 * r + a3) * _inv(2, p) % p
        a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, r, 0, t)
        b2, b4, b6, b8, _, _, _ = weierstrass_quantities(a1, a2, a3, a4, a6)
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0

        if c4 % p:
            # multiplicative: split iff Z^2 + a1 Z - a2 has roots in F_p
            split = a2 % 2 == 0 if p == 2 else jacobi(b2 % p, p) == 1
            return done(Kodaira("I", False, n), 1, split)

        if a6 % p**2:
            return done(Kodaira("II"), n)
        if b8 % p**3:
            return done(Kodaira("III"), n - 1)
        if b6 % p**3:
            return done(Kodaira("IV"), n - 2)

        # normalize: p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s, t = a2 % 2, 2 * ((a6 // 4) % 2)
        else:
            big = p ** (n + 3)
            s = (-a1 * _inv(2, big)) % big
            t = (-a3 * _inv(2, big)) % big
        a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, 0, s, t)
        assert a1 % p == 0 and a2 % p == 0
        assert a3 % p**2 == 0 and a4 % p**2 == 0 and a6 % p**3 == 0

        # cubic X^3 + b X^2 + c X + d over F_p
        b, c, d = (a2 // p) % p, (a4 // p**2) % p, (a6 // p**3) % p
        disc = (
            -4 * b**3 * d + b * b * c * c + 18 * b * c * d - 4 * c**3 - 27 * d * d
        ) % p
        if disc:
            return done(Kodaira("I", True, 0), n - 4)

        if p == 2:
            triple = c == (b * b) % 2 and d == b % 2
            root = b
        elif p == 3:
            triple = b == 0 and c == 0
            root = (-d) % 3
        else:
            triple = (b * b - 3 * c) % p == 0
            root = (-b * _inv(3, p)) % p

        if not triple:
            if p <= 3:
                root = next(
                    x for x in range(p)
                    if (x**3 + b * x * x + c * x + d) % p == 0
                    and (3 * x * x + 2 * b * x + c) % p == 0
                )
            else:
                root = (b * c - 9 * d) * _inv((-2 * (b * b - 3 * c)) % p, p) % p
            a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, p * root, 0, 0)
            # double root: type I_m*, walking a chain of quadratics
            mx = my = p * p
            ix = iy = 3
            while True:
                a3t, a6t = a3 // my, a6 // (mx * my)
                if (a3t * a3t + 4 * a6t) % p:
                    break
                t = my * (a6t % 2 if p == 2 else (-a3t * _inv(2, p)) % p)
                a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, 0, 0, t)
                my *= p
                iy += 1
                a2t, a4t, a6t = a2 // p, a4 // (p * mx), a6 // (mx * my)
                if (a4t * a4t - 4 * a2t * a6t) % p:
                    break
                if p == 2:
                    r = mx * (a6t % 2)
                else:
                    r = mx * ((-a4t * _inv(2 * a2t % p, p)) % p)
                a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, r, 0, 0)
                mx *= p
                ix += 1
            m = ix + iy - 5
            return done(Kodaira("I", True, m), n - 4 - m)

        a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, p * root, 0, 0)
        # triple root: quadratic Y^2 + (a3/p^2) Y - a6/p^4 over F_p
        a3t, a6t = a3 // p**2, a6 // p**4
        if (a3t * a3t + 4 * a6t) % p:
            return done(Kodaira("IV", True), n - 6)
        t = p * p * (a6t % 2 if p == 2 else (-a3t * _inv(2, p)) % p)
        a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), 1, 0, 0, t)

        if a4 % p**4:
            return done(Kodaira("III", True), n - 7)
        if a6 % p**6:
            return done(Kodaira("II", True), n - 8)

        # not minimal at p: absorb one twist and restart
        a1, a2, a3, a4, a6 = transform((a1, a2, a3, a4, a6), p, 0, 0, 0)


def hilbert_minus1(b, p):
    """Hilbert symbol (-1, b)_p for b != 0."""
    v, u = padic_split(b, p)
    if p == 2:
        return 1 if u % 4 == 1 else -1
    if p % 4 == 1:
        return 1
    return 1 if v % 2 == 0 else -1


def local_root_number(ld: LocalData) -> int:
    """Local root number at p from the minimal-model local data."""
    kod, p = ld.kodaira, ld.p
    if kod.is_good:
        return 1
    if kod.is_multiplicative:
        return -1 if ld.split else 1
    v4 = 10**9 if ld.c4 == 0 else padic_split(ld.c4, p)[0]
    if kod.kind == "I" and kod.star and kod.m >= 1 and 3 * v4 < ld.vd:
        # potentially multiplicative: the twist class of the Tate curve
        # is -c6 mod squares
        return hilbert_minus1(-ld.c6, p)
    if p >= 5:
        if kod.kind == "II" or (kod.kind == "I" and kod.star):
            return jacobi((-1) % p, p)
        if kod.kind == "III":
            return jacobi((-2) % p, p)
        return jacobi((-3) % p, p)  # IV, IV*
    c4u = 0 if ld.c4 == 0 else padic_split(ld.c4, p)[1]
    v6, c6u = (10**9, 0) if ld.c6 == 0 else padic_split(ld.c6, p)
    _, du = padic_split(ld.delta, p)
    return localtables.lookup(p, str(kod), v4, v6, ld.vd, c4u, c6u, du)


@dataclass(frozen=True)
class FiberCurve:
    """An integer fiber, minimalized, with its local data at every bad prime."""

    t: int | None
    ai: tuple[int, int, int, int, int]  # global minimal model
    u: int  # scaling from the input model
    c4: int
    c6: int
    delta: int
    local: tuple[LocalData, ...]

    @property
    def conductor(self):
        out = 1
        for ld in self.local:
            out *= ld.p**ld.conductor
        return out

    def local_at(self, p) -> LocalData:
        for ld in self.local:
            if ld.p == p:
                return ld
        return LocalData(p, Kodaira("I", False, 0), 0, 0, None,
                         self.c4, self.c6, self.delta)

    def root_number_at(self, p) -> int:
        return local_root_number(self.local_at(p))

    @property
    def ap_bad(self):
        """Trace of Frobenius at each bad prime (for L-series use)."""
        out = {}
        for ld in self.local:
            if ld.kodaira.is_multiplicative:
                out[ld.p] = 1 if ld.split else -1
            else:
                out[ld.p] = 0
        return out


def curve_from_model(ai, t=None, bad_hint=None) -> FiberCurve:
    """Minimalize an integral model and run Tate at every bad prime.

    bad_hint: optional iterable of primes covering all of Delta_min's support
    (e.g. from a family's place factorization); skips factoring Delta.
    """
    ai_min, u = minimal_model(ai)
    _, _, _, _, c4, c6, delta = weierstrass_quantities(*ai_min)
    if bad_hint is None:
        bad = [p for p, _ in factorize(delta).factors]
    else:
        bad = sorted({p for p in bad_hint if delta % p == 0})
        rem = abs(delta)
        for p in bad:
            rem //= p ** padic_split(delta, p)[0]
        if rem != 1:
            raise ValueError("bad_hint does not cover the discriminant")
    local = []
    for p in bad:
        ld = tate_local(ai_min, p)
        assert ld.vd == padic_split(delta, p)[0], "input was not minimal"
        local.append(ld)
    return FiberCurve(t, ai_min, u, c4, c6, delta, tuple(local))


def instantiate_fiber(surface: Surface, t: int) -> FiberCurve:
    """The fiber at an integer t as a minimal curve with full local data."""
    ai = surface.a_at(t)
    if surface.delta(t) == 0:
        raise BadFiberError(f"Delta({t}) = 0")
    # the support of Delta(t) is covered by the content primes and the
    # place values, which are far smaller than Delta(t) itself
    hint = {p for p, _ in factorize(surface.nd).factors}
    for pl in surface.places:
        v = pl.poly(t)
        if v:
            hint.update(p for p, _ in factorize(v).factors)
    return curve_from_model(ai, t=t, bad_hint=hint)


def global_root_number_direct(fiber: FiberCurve) -> int:
    """Product of all local root numbers; the archimedean place gives -1."""
    w = -1
    for ld in fiber.local:
        w *= local_root_number(ld)
    return w
