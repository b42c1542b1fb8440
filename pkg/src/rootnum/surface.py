"""Family-level analysis: bad places of y^2 = x^3 + ... over Q(T) and their
Kodaira types, the delta constant, and the multiplicative/non-insipid products.

A "place" is a primitive irreducible divisor P(T) of the discriminant (or the
degree valuation at infinity).  Residue characteristic is 0 here, so the
classification is the tame Tate table on the valuation triple
(v_P(c4), v_P(c6), v_P(Delta)) after reduction by 12th powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from rootnum.intarith import factorize
from rootnum.polyring import (
    IntPoly,
    factor_irreducible,
    is_irreducible,
    poly_from_sympy,
    resultant,
    valuation_at,
)


class SingularFamilyError(ValueError):
    """Delta(T) is identically zero: not an elliptic surface."""


class IsotrivialError(ValueError):
    """j(T) is constant; the variation machinery does not apply."""


@dataclass(frozen=True)
class Kodaira:
    """Kodaira symbol: kind in {I, II, III, IV}, star flag, m for I-types."""

    kind: str
    star: bool = False
    m: int = 0

    def __str__(self):
        s = "*" if self.star else ""
        if self.kind == "I":
            return f"I{self.m}{s}"
        return self.kind + s

    @property
    def is_good(self):
        return self.kind == "I" and self.m == 0 and not self.star

    @property
    def is_multiplicative(self):
        return self.kind == "I" and not self.star and self.m >= 1

    @property
    def is_additive(self):
        return not (self.is_good or self.is_multiplicative)

    @property
    def epsilon(self):
        """Symbol numerator for the additive g factor; None if not additive."""
        if self.kind == "II" or (self.kind == "I" and self.star):
            return -1
        if self.kind == "III":
            return -2
        if self.kind == "IV":
            return -3
        return None

    @property
    def components(self):
        """Number of components of the special fiber (Ogg: f = v(D) + 1 - m)."""
        if self.kind == "I":
            return self.m + 5 if self.star else max(self.m, 1)
        base = {"II": 1, "III": 2, "IV": 3}[self.kind]
        return 10 - base if self.star else base


def kodaira_from_string(s: str) -> Kodaira:
    s = s.strip()
    star = s.endswith("*")
    if star:
        s = s[:-1]
    if s.startswith("I") and s not in ("II", "III", "IV"):
        return Kodaira("I", star, int(s[1:]))
    return Kodaira(s, star, 0)


def classify_tame(v4, v6, vd) -> Kodaira:
    """Kodaira type from the valuation triple in residue characteristic 0
    (or any tame place); v4/v6 may be None when c4/c6 vanish identically.

    Reduces by (4,6,12) first, so the input need not be minimal.
    """
    INF = 10**9
    v4 = INF if v4 is None else v4
    v6 = INF if v6 is None else v6
    if vd is None:
        raise ValueError("Delta must have finite valuation")
    while v4 >= 4 and v6 >= 6 and vd >= 12:
        v4, v6, vd = v4 - 4, v6 - 6, vd - 12
    if vd == 0:
        return Kodaira("I", False, 0)
    if v4 == 0:
        return Kodaira("I", False, vd)
    # additive; potential multiplicativity is a j-pole: 3*v4 < vd
    if 3 * v4 < vd:
        if vd < 6 or v4 != 2 or v6 != 3:
            raise ValueError(f"inconsistent additive triple {(v4, v6, vd)}")
        return Kodaira("I", True, vd - 6)
    table = {2: Kodaira("II"), 3: Kodaira("III"), 4: Kodaira("IV"),
             6: Kodaira("I", True, 0), 8: Kodaira("IV", True),
             9: Kodaira("III", True), 10: Kodaira("II", True)}
    if vd not in table:
        raise ValueError(f"impossible tame valuation triple {(v4, v6, vd)}")
    return table[vd]


@dataclass(frozen=True)
class Place:
    """A bad place of the family: P(T) irreducible primitive (None at -deg)."""

    poly: IntPoly | None
    kodaira: Kodaira
    v4: int | None
    v6: int | None
    vd: int
    insipid: bool

    @property
    def at_infinity(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    @property
    def epsilon(self):
        return self.kodaira.epsilon

    @property
    def is_multiplicative(self):
        return self.kodaira.is_multiplicative

    def __str__(self):
        where = "-deg" if self.poly is None else repr(self.poly)
        return f"{where}: {self.kodaira}"


def mu_membership(P: IntPoly, d: int) -> bool:
    """Does Q[T]/(P) contain the d-th roots of unity, d in {3, 4}?

    Norm test: g(y) = Res_T(P(T), (y - s T)^2 + k) with k = 3 (mu_3) or
    k = 1 (mu_4) vanishes at s*alpha +- sqrt(-k); for a shift s making g
    squarefree, the field contains sqrt(-k) iff g is reducible over Q.
    """
    if d not in (3, 4):
        raise ValueError("d must be 3 or 4")
    if not is_irreducible(P):
        raise ValueError("mu_membership needs an irreducible polynomial")
    k = 3 if d == 3 else 1
    if P.degree == 1:
        return False  # Q contains neither sqrt(-3) nor sqrt(-1)
    y, T = sympy.symbols("y T")
    Psym = sum(c * T**i for i, c in enumerate(P.coeffs))
    for s in range(1, 40):
        g = sympy.resultant(Psym, (y - s * T) ** 2 + k, T)
        gpoly = sympy.Poly(g, y)
        if sympy.gcd(gpoly, gpoly.diff(y)).degree() == 0:
            return not gpoly.is_irreducible
    raise RuntimeError("no squarefree shift found (should be unreachable)")


@dataclass(frozen=True)
class Surface:
    """A one-parameter family in integral Weierstrass form."""

    a: tuple[IntPoly, IntPoly, IntPoly, IntPoly, IntPoly]  # a1,a2,a3,a4,a6
    c4: IntPoly
    c6: IntPoly
    delta: IntPoly
    n4: int
    n6: int
    nd: int
    places: tuple[Place, ...]  # finite bad places, sorted
    infinity: Place
    delta_const: int  # the modified-Jacobi modulus "delta"
    is_isotrivial: bool = False

    @property
    def M(self) -> IntPoly:
        """Product of the multiplicative finite place polynomials."""
        out = IntPoly([1])
        for pl in self.places:
            if pl.is_multiplicative:
                out = out * pl.poly
        return out

    @property
    def B(self) -> IntPoly:
        """Product of the non-insipid finite bad place polynomials."""
        out = IntPoly([1])
        for pl in self.places:
            if not pl.insipid:
                out = out * pl.poly
        return out

    def a_at(self, t: int) -> tuple[int, int, int, int, int]:
        return tuple(ai(t) for ai in self.a)

    def place_for(self, poly: IntPoly) -> Place:
        for pl in self.places:
            if pl.poly == poly:
                return pl
        raise KeyError(f"no finite place {poly!r}")


def weierstrass_quantities(a1, a2, a3, a4, a6):
    """b- and c-invariants plus discriminant; works for ints or IntPoly."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return b2, b4, b6, b8, c4, c6, delta


def _insipid(kod: Kodaira, poly: IntPoly | None) -> bool:
    if kod.kind == "I" and kod.star and kod.m == 0:
        return True
    if poly is None:
        return False
    if kod.kind in ("II", "IV"):
        return mu_membership(poly, 3)
    if kod.kind == "III":
        return mu_membership(poly, 4)
    return False


def kodaira_at_infinity(c4: IntPoly, c6: IntPoly, delta: IntPoly) -> Place:
    """Type at the place -deg: substitute T = 1/S, clear denominators by the
    minimal even twist, read the tame triple at S = 0.

    Starred I-types are labelled with the source table's subscript v(Delta)
    (= m + 6); the label is display-only, everything downstream uses the
    triple itself.
    """
    dd = delta.degree
    d4 = None if c4.is_zero() else c4.degree
    d6 = None if c6.is_zero() else c6.degree
    k = max(-(-d4 // 4) if d4 is not None else 0,
            -(-d6 // 6) if d6 is not None else 0,
            -(-dd // 12))
    v4 = None if d4 is None else 4 * k - d4
    v6 = None if d6 is None else 6 * k - d6
    vd = 12 * k - dd
    while (v4 is None or v4 >= 4) and (v6 is None or v6 >= 6) and vd >= 12:
        v4 = v4 if v4 is None else v4 - 4
        v6 = v6 if v6 is None else v6 - 6
        vd -= 12
    kod = classify_tame(v4, v6, vd)
    if kod.kind == "I" and kod.star and kod.m > 0:
        kod = Kodaira("I", True, vd)  # table labelling, see docstring
    return Place(None, kod, v4, v6, vd, _insipid(kod, None))


def build_surface(a_polys) -> Surface:
    """Build the family from (a1, a2, a3, a4, a6) in Z[T].

    Raises SingularFamilyError when Delta = 0.  Constant j (including j = 0
    or 1728 identically) is accepted and flagged via is_isotrivial; only the
    variation machinery refuses such families.
    """
    a = tuple(p if isinstance(p, IntPoly) else IntPoly([p]) for p in a_polys)
    if len(a) != 5:
        raise ValueError("need (a1, a2, a3, a4, a6)")
    if not all(ai.is_integral() for ai in a):
        raise ValueError("coefficients must be integer polynomials")
    _, _, _, _, c4, c6, delta = weierstrass_quantities(*a)
    if delta.is_zero():
        raise SingularFamilyError("discriminant vanishes identically")
    c43 = c4 * c4 * c4
    isotrivial = (c43 * delta.lc - delta * c43.lc).is_zero()

    contd, prim_places = factor_irreducible(delta)
    n4 = n6 = 1
    if not c4.is_zero():
        n4 = abs(Fraction(c4.content_primitive()[0]).numerator)
    if not c6.is_zero():
        n6 = abs(Fraction(c6.content_primitive()[0]).numerator)
    nd = abs(Fraction(contd).numerator)

    places = []
    for P, mult in prim_places:
        v4 = None if c4.is_zero() else valuation_at(c4, P)
        v6 = None if c6.is_zero() else valuation_at(c6, P)
        kod = classify_tame(v4, v6, mult)
        places.append(Place(P, kod, v4, v6, mult, _insipid(kod, P)))
    places.sort(key=lambda pl: (pl.poly.degree, pl.poly.coeffs))

    delta_const = 6 * n4 * n6 * nd
    polys = [pl.poly for pl in places]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            delta_const *= abs(resultant(polys[i], polys[j]))

    inf = kodaira_at_infinity(c4, c6, delta)
    return Surface(a, c4, c6, delta, n4, n6, nd, tuple(places), inf,
                   delta_const, isotrivial)


def kodaira_at_finite_place(surface: Surface, P: IntPoly) -> Kodaira:
    """Type of the generic fiber at an arbitrary primitive irreducible P
    (I0 when P does not divide Delta)."""
    for pl in surface.places:
        if pl.poly == P:
            return pl.kodaira
    if valuation_at(surface.delta, P) != 0:  # non-primitive/reducible input
        raise ValueError(f"{P!r} is not a normalized place polynomial")
    return Kodaira("I", False, 0)


def delta_primes(surface: Surface) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(surface.delta_const).factors)
