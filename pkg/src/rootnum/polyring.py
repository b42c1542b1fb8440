"""Exact univariate polynomials over Z (and Q at the edges) in the parameter T.

IntPoly is a thin immutable coefficient-tuple type; the heavy algebra
(factorization into irreducibles, resultants, discriminants) is delegated to
sympy and re-wrapped so the rest of the package never sees sympy objects.
Also home to the mod-p polynomial toolbox (roots, gcds, Hensel lifting,
modular square roots) that Tate's algorithm and the sieves share.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import sympy

_T = sympy.Symbol("T")


class IntPoly:
    """Immutable polynomial; coeffs stored ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        norm = []
        for c in cs:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = int(c)
            norm.append(c)
        object.__setattr__(self, "coeffs", tuple(norm))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, k: int):
        """Multiply by T^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def reverse(self, at_degree: int | None = None):
        """T^d * f(1/T) with d = at_degree (default deg f)."""
        d = self.degree if at_degree is None else at_degree
        if d < self.degree:
            raise ValueError("reverse degree too small")
        cs = list(self.coeffs) + [0] * (d - self.degree)
        return IntPoly(cs[::-1])

    def compose_linear(self, a, b):
        """f(a*T + b), exact."""
        acc = IntPoly([0])
        lin = IntPoly([b, a])
        for c in reversed(self.coeffs):
            acc = acc * lin + IntPoly([c])
        return acc

    # -- normalization -------------------------------------------------------

    def content_primitive(self):
        """(content, primitive): content rational, primitive integral with
        gcd of coefficients 1 and positive leading coefficient."""
        if self.is_zero():
            return Fraction(0), IntPoly([])
        fracs = [Fraction(c) for c in self.coeffs]
        den = math.lcm(*(f.denominator for f in fracs))
        num = math.gcd(*(int(f * den).__abs__() for f in fracs))
        cont = Fraction(num, den)
        if fracs[-1] < 0:
            cont = -cont
        prim = IntPoly([int(f / cont) for f in fracs])
        return cont, prim

    @property
    def primitive(self):
        return self.content_primitive()[1]

    def __repr__(self):
        if self.is_zero():
            return "IntPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c:+}")
            elif i == 1:
                parts.append(f"{c:+}*T")
            else:
                parts.append(f"{c:+}*T^{i}")
        return "IntPoly(%s)" % " ".join(parts).lstrip("+")

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c:+}")
                continue
            coef = "+" if c == 1 else ("-" if c == -1 else f"{c:+}")
            parts.append(coef + ("T" if i == 1 else f"T^{i}"))
        out = "".join(parts)
        return out.lstrip("+")


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return IntPoly([x])
    raise TypeError(f"cannot coerce {type(x)} to IntPoly")


def poly_from_sympy(expr) -> IntPoly:
    p = sympy.Poly(expr, _T)
    return IntPoly([sympy.Rational(c).p if sympy.Rational(c).q == 1 else Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in p.all_coeffs()][::-1])


def _to_sympy(f: IntPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in f.coeffs[::-1]] or [0], _T)


def factor_irreducible(f: IntPoly) -> tuple[Fraction, list[tuple[IntPoly, int]]]:
    """content * prod primitive-irreducible^mult, factors sorted by
    (degree, coefficient tuple); deterministic."""
    if f.is_zero():
        raise ValueError("factoring the zero polynomial")
    cont, prim = f.content_primitive()
    if prim.degree == 0:
        return cont, []
    _, raw = _to_sympy(prim).factor_list()
    out = []
    for g, m in raw:
        gi = IntPoly([int(c) for c in g.all_coeffs()][::-1])
        c2, gp = gi.content_primitive()
        cont *= Fraction(c2) ** m
        out.append((gp, int(m)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return cont, out


def is_irreducible(f: IntPoly) -> bool:
    cont, facs = factor_irreducible(f)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == f.degree


def resultant(f: IntPoly, g: IntPoly) -> int:
    r = sympy.resultant(_to_sympy(f).as_expr(), _to_sympy(g).as_expr(), _T)
    r = sympy.Rational(r)
    if r.q != 1:
        raise ValueError("non-integral resultant of non-integral input")
    return int(r.p)


def discriminant(f: IntPoly) -> int:
    d = sympy.discriminant(_to_sympy(f).as_expr(), _T)
    d = sympy.Rational(d)
    if d.q != 1:
        raise ValueError("non-integral discriminant of non-integral input")
    return int(d.p)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    return poly_from_sympy(sympy.gcd(_to_sympy(f).as_expr(), _to_sympy(g).as_expr()))


def poly_divmod(f: IntPoly, g: IntPoly):
    """Exact rational division: f = q*g + r with deg r < deg g."""
    q, r = sympy.div(_to_sympy(f).as_expr(), _to_sympy(g).as_expr(), _T)
    return poly_from_sympy(q), poly_from_sympy(r)


def valuation_at(f: IntPoly, place: IntPoly) -> int:
    """Multiplicity of the irreducible `place` in f (f != 0)."""
    if f.is_zero():
        raise ValueError("valuation of the zero polynomial")
    v = 0
    cur = f
    while True:
        q, r = poly_divmod(cur, place)
        if not r.is_zero():
            return v
        v += 1
        cur = q


def squarefree_part(f: IntPoly) -> IntPoly:
    _, facs = factor_irreducible(f)
    out = IntPoly([1])
    for g, _ in facs:
        out = out * g
    return out


# -- mod-p toolbox -----------------------------------------------------------


def poly_mod(f: IntPoly, p: int) -> list[int]:
    cs = [c % p for c in f.coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pm_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pm_trim(out)


def _pm_rem(a, b, p):
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        if coef:
            off = len(a) - len(b)
            for i, y in enumerate(b):
                a[off + i] = (a[off + i] - coef * y) % p
        a.pop()
    return _pm_trim(a)


def _pm_gcd(a, b, p):
    a, b = _pm_trim(a[:]), _pm_trim(b[:])
    while b:
        a, b = b, _pm_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _pm_powmod_x(e, mod, p):
    """x^e mod (mod, p) by square and multiply."""
    result = [1]
    base = _pm_rem([0, 1], mod, p) if len(mod) <= 2 else [0, 1]
    while e:
        if e & 1:
            result = _pm_rem(_pm_mul(result, base, p), mod, p)
        base = _pm_rem(_pm_mul(base, base, p), mod, p)
        e >>= 1
    return result


def roots_mod(f: IntPoly, p: int) -> list[int]:
    """All roots of f mod p (sorted), p prime, f not identically 0 mod p."""
    cs = poly_mod(f, p)
    if not cs:
        raise ValueError("polynomial vanishes identically mod p")
    if p <= 4096 or len(cs) <= 1:
        return [t for t in range(p) if _pm_eval(cs, t, p) == 0]
    # distinct-degree: roots live in gcd(x^p - x, f)
    xp = _pm_powmod_x(p, cs, p)
    g = _pm_gcd(_pm_trim([(a - b) % p for a, b in _zip_pad(xp, [0, 1])]), cs, p)
    return sorted(_split_linear(g, p))


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def _pm_eval(cs, t, p):
    acc = 0
    for c in reversed(cs):
        acc = (acc * t + c) % p
    return acc


def _split_linear(g, p):
    """Roots of a product of distinct linear factors mod p (odd p here,
    since p <= 4096 is enumerated)."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) * pow(g[1], p - 2, p) % p]
    shift = 0
    while True:
        # gcd((x+shift)^((p-1)/2) - 1, g) splits deterministically in practice
        base = [shift % p, 1]
        e = (p - 1) // 2
        acc = [1]
        b = _pm_rem(base, g, p)
        ee = e
        while ee:
            if ee & 1:
                acc = _pm_rem(_pm_mul(acc, b, p), g, p)
            b = _pm_rem(_pm_mul(b, b, p), g, p)
            ee >>= 1
        acc = acc[:]
        if acc:
            acc[0] = (acc[0] - 1) % p
        h = _pm_gcd(_pm_trim(acc), g, p)
        if 0 < len(h) - 1 < len(g) - 1:
            rest = _pm_quo(g, h, p)
            return _split_linear(h, p) + _split_linear(rest, p)
        shift += 1


def _pm_quo(a, b, p):
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        out[len(a) - len(b)] = coef
        if coef:
            off = len(a) - len(b)
            for i, y in enumerate(b):
                a[off + i] = (a[off + i] - coef * y) % p
        a.pop()
    return _pm_trim(out)


def count_roots_mod(f: IntPoly, p: int) -> int:
    """Number of roots of f mod p; f must not vanish identically mod p."""
    cs = poly_mod(f, p)
    if not cs:
        raise ValueError("polynomial vanishes identically mod p")
    if len(cs) == 1:
        return 0
    if p <= 4096:
        return sum(1 for t in range(p) if _pm_eval(cs, t, p) == 0)
    xp = _pm_powmod_x(p, cs, p)
    g = _pm_gcd(_pm_trim([(a - b) % p for a, b in _zip_pad(xp, [0, 1])]), cs, p)
    return len(g) - 1 if g else 0


def count_roots_padic(f: IntPoly, p: int, k: int) -> int:
    """Number of t mod p^k with f(t) = 0 mod p^k, for f != 0.

    Hensel descent: a simple root mod p lifts to exactly one class mod p^k,
    a singular root is expanded one p-adic digit at a time.  If f vanishes
    identically mod p the power is divided out first (zero polynomial mod p^k
    would make the count degenerate, so k is required to exceed nu_p(content)).
    """
    if k == 0:
        return 1
    if all(c % p == 0 for c in f.coeffs):
        g = IntPoly([c // p for c in f.coeffs])
        if g.is_zero():
            raise ValueError("zero polynomial")
        # p*g(t) = 0 mod p^k  <=>  g(t) = 0 mod p^(k-1); top digit free
        return p * count_roots_padic(g, p, k - 1)
    deriv = f.derivative()
    total = 0
    for r in roots_mod(f, p):
        if deriv(r) % p != 0:
            total += 1
        else:
            total += _count_above(f, deriv, p, k, r, 1)
    return total


def _count_above(f, deriv, p, k, base, depth):
    """Count t mod p^k with t = base mod p^depth and f(t) = 0 mod p^k,
    given f(base) = 0 mod p^depth and base is singular mod p."""
    if depth >= k:
        return 1
    total = 0
    pd = p**depth
    md = p ** (depth + 1)
    for d in range(p):
        t0 = base + d * pd
        if f(t0) % md == 0:
            if deriv(t0) % p != 0:
                total += 1
            else:
                total += _count_above(f, deriv, p, k, t0, depth + 1)
    return total


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod odd prime p, or None (Tonelli-Shanks,
    deterministic nonresidue scan)."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@lru_cache(maxsize=None)
def _xgcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _xgcd(b, a % b)
    return g, y, x - (a // b) * y


def inv_mod(a: int, m: int) -> int:
    g, x, _ = _xgcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x % m


def crt(residues, moduli) -> tuple[int, int]:
    """Chinese remainder: returns (r, M) with r mod M; moduli pairwise coprime."""
    r, m = 0, 1
    for ri, mi in zip(residues, moduli):
        g = math.gcd(m, mi)
        if g != 1:
            if (r - ri) % g:
                raise ValueError("inconsistent congruences")
            mi2 = mi // g
            # merge with the non-coprime part already fixed
            t = ((ri - r) // g * inv_mod((m // g) % mi2, mi2)) % mi2 if mi2 > 1 else 0
            r, m = r + m * t, m // g * mi
            r %= m
            continue
        t = (ri - r) * inv_mod(m % mi, mi) % mi
        r, m = r + m * t, m * mi
        r %= m
    return r, m
