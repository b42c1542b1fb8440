"""Decomposed root-number formula for integer fibers of a family.

The global root number of a fiber splits into an archimedean calibration
sign, a Liouville factor over the multiplicative places, the local root
numbers at the primes of the family constant delta, and one corrective
pair (h, g) of residue symbols per finite bad place.  The decomposition is
what makes the sign's behaviour in t legible: everything except the
Liouville factor is periodic in t up to the sign pattern of finitely many
polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intarith import (factorize, jacobi, liouville, modified_jacobi,
                       padic_split)
from .localdata import BadFiberError, global_root_number_direct, instantiate_fiber
from .polyring import IntPoly, factor_irreducible
from .surface import Place, Surface, delta_primes

# Fixed once, globally, by the constant-sign family anchor (the catalog's
# "washington" family has every fiber at -1); never adjusted per family.
SIGN_CALIBRATION = -1


class ZeroAtMultiplicativePlace(ValueError):
    """M(t) = 0: the fiber sits on a multiplicative place's root."""


class PeriodicityUndetermined(RuntimeError):
    """A local root number failed to stabilize mod p^k for k <= k_max."""


@dataclass(frozen=True)
class RootNumberReport:
    """Both evaluation paths at one fiber, with the formula's parts."""

    t: int
    lambda_M: int
    delta_prime_part: dict  # prime -> local root number W_p
    per_place: dict  # str(P) -> (h, g)
    W_formula: int
    W_direct: int

    @property
    def agree(self) -> bool:
        return self.W_formula == self.W_direct

    @property
    def phi(self) -> int:
        out = 1
        for w in self.delta_prime_part.values():
            out *= w
        for key, (_, g) in self.per_place.items():
            if not key.endswith("!"):  # insipid places are tagged
                out *= g
        return out


@dataclass(frozen=True)
class PeriodicityData:
    N: int
    R_factors: tuple  # primitive IntPoly, positive leading coefficient
    alpha: dict  # prime -> exponent


def g_factor(surface: Surface, place: Place, t: int) -> int:
    """The symbol factor of the place at t.

    Additive places contribute (epsilon_P / P(t))_delta; multiplicative
    places contribute (-c6(t) / P(t))_delta times a parity sign at each
    prime of delta.
    """
    P = place.poly
    value = int(P(t))
    if value == 0:
        raise ZeroAtMultiplicativePlace(f"P({t}) = 0 for {P!r}")
    delta = surface.delta_const
    if place.is_multiplicative:
        c6t = int(surface.c6(t))
        out = modified_jacobi(-c6t, value, delta)
        for p in delta_primes(surface):
            if padic_split(value, p)[0] % 2:
                out = -out
        return out
    return modified_jacobi(place.epsilon, value, delta)


def g_factor_omega(surface: Surface, place: Place, t: int) -> int:
    """Diagnostic variant of the multiplicative g: the parity sign taken as
    (-1)^omega of the delta-part of P(t) instead of the valuation sum."""
    if not place.is_multiplicative:
        return g_factor(surface, place, t)
    value = int(place.poly(t))
    if value == 0:
        raise ZeroAtMultiplicativePlace(f"P({t}) = 0 for {place.poly!r}")
    delta = surface.delta_const
    out = modified_jacobi(-int(surface.c6(t)), value, delta)
    omega = sum(1 for p, _ in factorize(value).factors if delta % p == 0)
    return -out if omega % 2 else out


def h_factor(surface: Surface, place: Place, t: int) -> int:
    """Corrective factor for the non-squarefree part of P(t) away from delta.

    Runs over primes p with p^2 | P(t), p not dividing delta; the
    contribution depends on the Kodaira type of the place and on
    nu_p(P(t)) through the residue-class patterns below.
    """
    value = int(place.poly(t))
    if value == 0:
        raise ZeroAtMultiplicativePlace(f"P({t}) = 0 for {place.poly!r}")
    delta = surface.delta_const
    kod = place.kodaira
    out = 1
    for p, nu in factorize(abs(value)).factors:
        if nu < 2 or delta % p == 0:
            continue
        if kod.kind == "I" and kod.m >= 1:
            c6t = int(surface.c6(t))
            if c6t == 0:
                raise ZeroAtMultiplicativePlace(
                    f"c6({t}) = 0 at an I_m place with p^2 | P(t)")
            out *= _h_term(kod.kind, kod.m, p, nu,
                           padic_split(-c6t, p)[1])
        else:
            out *= _h_term(kod.kind, kod.m, p, nu, None)
    return out


def _h_term(kind: str, m: int, p: int, nu: int,
            minus_c6_unit: int | None) -> int:
    """Single-prime h contribution (exposed for the memoized-route test)."""
    if kind == "II":
        return -1 if nu % 6 in (2, 4) and jacobi(-3 % p, p) == -1 else 1
    if kind == "III":
        return -1 if nu % 4 == 2 and jacobi(p - 1, p) == -1 else 1
    if kind == "IV":
        return -1 if nu % 6 in (2, 3, 4) and jacobi(-3 % p, p) == -1 else 1
    if kind == "I" and m >= 1:
        # base -((-c6)_(p) / p), raised to nu - 1
        if nu % 2 == 0:
            return -jacobi(minus_c6_unit % p, p)
        return 1
    return 1  # I0* (and I0, which cannot occur at a bad place)


def lambda_of_M(surface: Surface, t: int) -> int:
    Mt = int(surface.M(t))
    if Mt == 0:
        raise ZeroAtMultiplicativePlace(f"M({t}) = 0")
    return liouville(Mt)


def phi(surface: Surface, t: int) -> int:
    """The periodic part: delta-prime local root numbers times the
    non-insipid g factors."""
    if int(surface.delta(t)) == 0:
        raise BadFiberError(f"Delta({t}) = 0")
    fiber = instantiate_fiber(surface, t)
    out = 1
    for p in delta_primes(surface):
        out *= fiber.root_number_at(p)
    for place in surface.places:
        if not place.insipid:
            out *= g_factor(surface, place, t)
    return out


def root_number_formula(surface: Surface, t: int,
                        omega_variant: bool = False) -> RootNumberReport:
    """Evaluate the decomposition and the direct local product at t."""
    if int(surface.delta(t)) == 0:
        raise BadFiberError(f"Delta({t}) = 0")
    lam = lambda_of_M(surface, t)
    fiber = instantiate_fiber(surface, t)
    parts = {p: fiber.root_number_at(p) for p in delta_primes(surface)}
    gfun = g_factor_omega if omega_variant else g_factor
    per_place = {}
    w = SIGN_CALIBRATION * lam
    for place in surface.places:
        h = h_factor(surface, place, t)
        g = gfun(surface, place, t)
        key = repr(place.poly) + ("!" if place.insipid else "")
        per_place[key] = (h, g)
        w *= h * g
    for wp in parts.values():
        w *= wp
    return RootNumberReport(
        t=t, lambda_M=lam, delta_prime_part=parts, per_place=per_place,
        W_formula=w, W_direct=global_root_number_direct(fiber))


def _reciprocity_chain(f: IntPoly, g: IntPoly) -> list[IntPoly]:
    """Factors controlling (f(t)/g(t)) via quadratic reciprocity.

    Euclid-style degree descent: repeatedly kill the leading term of the
    higher-degree member against the lower one, collecting every
    intermediate polynomial (primitive, positive leading coefficient).
    The symbol's value then depends only on t modulo a fixed integer and
    on the signs of the collected factors.
    """
    out = []

    def note(q):
        q = q.primitive
        if q.degree >= 1 and q not in out:
            out.append(q)

    if f.degree > g.degree:
        f, g = g, f
    note(f)
    note(g)
    f, g = f.primitive, g.primitive
    while f.degree >= 1 and g.degree >= 1:
        nxt = g * f.lc - f.shift(g.degree - f.degree) * g.lc
        if nxt.is_zero():
            break
        note(nxt)
        nxt = nxt.primitive
        if nxt.degree >= f.degree:
            g = nxt
        else:
            f, g = nxt, f
    return out


# Residue widths resolved by the local tables at the wild primes: unit
# parts of (c4, c6, Delta) enter mod p^(width).  Tame primes only ever see
# quadratic characters of the units, width 1.
_UNIT_WIDTHS = {2: (3, 4, 2), 3: (2, 2, 2)}


def pinning_polys(surface: Surface) -> list[IntPoly]:
    """Irreducible factors of c4, c6 and Delta (primitive, deduplicated).

    A residue class that bounds the p-valuation of each of these pins the
    valuations of c4(t), c6(t), Delta(t), hence the whole shape of the
    fiber's local data at p.
    """
    polys = []
    for q in (surface.c4, surface.c6, surface.delta):
        if q.degree < 1:
            continue
        for fac, _ in factor_irreducible(q)[1]:
            fac = fac.primitive
            if fac.degree >= 1 and fac not in polys:
                polys.append(fac)
    return polys


def _pinned_value_nu(q: IntPoly, a: int, p: int) -> int:
    """nu_p(q(t)) for t = a mod p^k, assuming every irreducible factor of q
    has valuation pinned below k at a (then the sum is class-constant even
    when it exceeds k)."""
    content, facs = factor_irreducible(q)
    nu = padic_split(abs(content), p)[0] if content else 0
    for fac, mult in facs:
        v = int(fac(a))
        nu += mult * padic_split(v, p)[0]
    return nu


def _pinned_class(p: int, polys: list[IntPoly], cap: int) -> tuple[int, int]:
    """Smallest k with a residue class mod p^k on which every poly keeps
    p-valuation < k; returns (k, a) with a the class of least total
    valuation."""
    for k in range(1, cap + 1):
        mod = p**k
        best = None
        for a in range(mod):
            nus = []
            for q in polys:
                v = int(q(a))
                if v % mod == 0:  # valuation not pinned by this class
                    nus = None
                    break
                nus.append(padic_split(v, p)[0])
            if nus is None:
                continue
            tot = sum(nus)
            if best is None or tot < best[0]:
                best = (tot, a)
        if best is not None:
            return k, best[1]
    raise PeriodicityUndetermined(
        f"no residue class mod {p}^{cap} pins every factor's valuation")


def periodicity_data(surface: Surface, k_max: int = 12,
                     window: int = 500) -> PeriodicityData:
    """The modulus N and sign-pattern polynomials R controlling phi.

    On a residue class mod N that pins the valuation of every factor of
    c4, c6, Delta at each prime of delta, the local root number W_p is a
    function of the unit parts of (c4(t), c6(t), Delta(t)) modulo small
    powers of p, so alpha_p = (pinned valuation) + (residue width) makes
    W_p constant per class.  N is computed for the least-ramified pinned
    class; classes of deeper valuation need correspondingly more (the
    certificate search re-derives its own exponents and double-checks W_p
    fiber against fiber).  The R factors collect each non-insipid place's
    own polynomial and, for multiplicative places, the reciprocity chain
    of (-c6, P); phi is then constant per (class mod N, sign pattern of R)
    on fibers whose place values are squarefree away from the class data.
    """
    polys = pinning_polys(surface)
    alpha = {}
    for p in delta_primes(surface):
        w4, w6, wd = _UNIT_WIDTHS.get(p, (1, 1, 1))
        k, a = _pinned_class(p, polys, k_max)
        need = k
        for q, width in ((surface.c4, w4), (surface.c6, w6),
                         (surface.delta, wd)):
            if q.is_zero():
                continue
            need = max(need, _pinned_value_nu(q, a, p) + width)
        alpha[p] = need
    N = 24
    for p, a in alpha.items():
        N = N * p**a // math.gcd(N, p**a)
    R = []

    def collect(q):
        for fac, _ in factor_irreducible(q)[1]:
            fac = fac.primitive
            if fac.degree >= 1 and fac not in R:
                R.append(fac)

    for place in surface.places:
        if place.insipid:
            continue
        if place.is_multiplicative:
            N *= 8
            for q in _reciprocity_chain(IntPoly([-1]) * surface.c6,
                                        place.poly):
                collect(q)
        else:
            collect(place.poly)
    return PeriodicityData(N=N, R_factors=tuple(R), alpha=alpha)
