"""Certificates of root-number variation.

Decides whether a family admits the opposite-sign pair construction,
hunts the auxiliary prime q0, assembles the two sieve prescriptions and
returns a pair (t_plus, t_minus) whose root numbers are re-verified on
the direct local-product path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .intarith import factorize, is_prime, jacobi, padic_split
from .localdata import instantiate_fiber
from .polyring import IntPoly, crt, discriminant, poly_divmod, resultant, roots_mod
from .sieves import ArithProgression, Exhausted, SievePrescription, sieve_stream
from .signformula import periodicity_data, pinning_polys, root_number_formula
from .surface import Surface, delta_primes

ONE = IntPoly([1])


class Inapplicable(ValueError):
    """The family has no usable witness place."""


class SignPredictionFailed(ArithmeticError):
    """The construction promised opposite signs but the direct path
    disagrees.  Never expected; surfaced loudly instead of repaired."""


@dataclass(frozen=True)
class Applicability:
    status: str  # applicable | inapplicable | isotrivial
    branch: str  # multiplicative-place | non-insipid-additive | I0*-odd-degree | none
    witness_place: object = None
    conditional_on: frozenset = frozenset()
    reason: str = ""


@dataclass(frozen=True)
class VariationCertificate:
    t_plus: int
    t_minus: int
    reports: tuple  # (report at t_plus, report at t_minus)
    q0: int | None
    construction_log: dict = field(default_factory=dict)


def _odd_primes(excluded, bound):
    p = 3
    while p <= bound:
        if p not in excluded and is_prime(p):
            yield p
        p += 2


def _planted_squares(Q: IntPoly, excluded, bound):
    """Pairs (q, n) with q prime outside `excluded` and nu_q(Q(n)) = 2.

    For each prime with a simple root r of Q, Hensel gives the unique
    class mod q^2 over r; sliding it across mod q^3 hits every value of
    nu >= 2, and all but one slot pin nu to exactly 2.
    """
    dQ = discriminant(Q)
    for q in _odd_primes(excluded, bound):
        if dQ % q == 0 or Q.lc % q == 0:
            continue
        for r in roots_mod(Q, q):
            d = int(Q.derivative()(r))
            if d % q == 0:
                continue
            r2 = (r - int(Q(r)) * pow(d, -1, q * q)) % (q * q)
            for k in range(q):
                n = r2 + k * q * q
                value = int(Q(n))
                if value != 0 and padic_split(value, q)[0] == 2:
                    yield q, n


def manduchi_search(P: IntPoly, Q: IntPoly, excluded, bound=2000):
    """A prime p0 outside `excluded` and n >= 1 with p0^2 || Q(n) and
    p0^(-2) P(n) Q(n) = 1 mod p0."""
    if Q.degree < 1:
        raise ValueError("Q must be nonconstant")
    if discriminant(Q) == 0:
        raise ValueError("Q must be squarefree")
    if resultant(P, Q) == 0:
        raise ValueError("P and Q share a root")
    for q, n in _planted_squares(Q, set(excluded), bound):
        if n < 1:
            continue
        if (int(P(n)) * (int(Q(n)) // q**2)) % q == 1:
            return q, n
    raise Exhausted(f"no Manduchi pair with p0 <= {bound}")


def select_q0(surface: Surface, place, excluded, bound=2000):
    """Auxiliary prime and planted seed for the witness place.

    Returns (q0, n) with nu_{q0}(P(n)) = 2 and the type's symbol
    condition: II/II*/IV/IV* want (-3/q0) = -1, III/III* want
    (-1/q0) = -1, I_m and I_m* (m >= 1) want the value -c6 q0^(-6k)
    to land on a square class mod q0.
    """
    if place.insipid:
        raise ValueError("insipid places admit no auxiliary prime")
    kod = place.kodaira
    Q = place.poly
    if kod.kind == "I" and kod.star:
        # v_Q(c6) = 3: Manduchi on the exact cofactor -c6/Q^3
        quo, rem = poly_divmod(IntPoly([-1]) * surface.c6, Q**3)
        if not rem.is_zero():
            raise ArithmeticError("c6 is not divisible by Q^3 at an I_m*")
        return manduchi_search(quo, Q, excluded, bound)
    if kod.kind == "I":
        # multiplicative: c6 is a unit at the plant; want (-c6(n)/q) = +1
        for q, n in _planted_squares(Q, set(excluded), bound):
            if jacobi(-int(surface.c6(n)) % q, q) == 1:
                return q, n
        raise Exhausted(f"no multiplicative-place prime <= {bound}")
    residue = -3 if kod.kind in ("II", "IV") else -1
    for q, n in _planted_squares(Q, set(excluded), bound):
        if jacobi(residue % q, q) == -1:
            return q, n
    raise Exhausted(f"no symbol prime <= {bound}")


def applicability(surface: Surface) -> Applicability:
    """Which branch of the pair construction (if any) fits the family."""
    if surface.is_isotrivial:
        return Applicability("isotrivial", "none",
                             reason="j-invariant is constant")
    mult = [p for p in surface.places if p.is_multiplicative]
    additive = [p for p in surface.places
                if not p.insipid and not p.is_multiplicative]
    i0star_odd = [p for p in surface.places
                  if p.kodaira.kind == "I" and p.kodaira.star
                  and p.kodaira.m == 0 and p.degree % 2 == 1]

    def lowest(ps):
        return min(ps, key=lambda p: (p.degree, repr(p.poly)))

    conds = set()
    if surface.M.degree >= 2:
        conds.add("chowla")
    if any(p.poly.degree >= 4 for p in surface.places if not p.insipid):
        conds.add("squarefree")

    if mult:
        return Applicability("applicable", "multiplicative-place",
                             lowest(mult), frozenset(conds))
    if additive:
        return Applicability("applicable", "non-insipid-additive",
                             lowest(additive), frozenset(conds))
    if i0star_odd:
        return Applicability("applicable", "I0*-odd-degree",
                             lowest(i0star_odd), frozenset(conds))
    return Applicability("inapplicable", "none",
                         reason="every finite place is insipid and no "
                                "I0* place has odd degree")


def _nu(value, p):
    if value == 0:
        return math.inf
    out = 0
    while value % p == 0:
        value //= p
        out += 1
    return out


def _class_minimizing(p, k, polys):
    """Residue x mod p^k minimizing the total p-valuation of the values
    (ties: smallest x)."""
    pk = p**k
    best = None
    for x in range(pk):
        score = sum(min(_nu(int(P(x)), p), k) for P in polys)
        if best is None or score < best[0]:
            best = (score, x)
            if score == 0:
                break
    return best[1]


def _seed_class(p, alpha, control, fg):
    """Seed residue and modulus at p: pin the valuation of every control
    value strictly below the modulus, with room for the prescription's
    absorbing power and the 2-adic quotient class."""
    k = alpha
    while True:
        x = _class_minimizing(p, k, control)
        nus = [_nu(int(P(x)), p) for P in control]
        absorb = sum(min(_nu(int(F(x)), p), k) for F in fg if F.degree >= 1)
        need = max(max(nus, default=0) + (3 if p == 2 else 1), absorb + 1)
        if math.inf not in nus and need <= k:
            return x, k
        if k > alpha + 24:
            raise Exhausted(f"no stable seed class at p = {p}")
        k += 1


def _delta_w_product(surface: Surface, t: int) -> int:
    """Product of local root numbers over the primes of delta at fiber t."""
    fiber = instantiate_fiber(surface, t)
    out = 1
    for p in delta_primes(surface):
        out *= fiber.root_number_at(p)
    return out


def variation_pair_search(surface: Surface, bound=10**6) -> VariationCertificate:
    """A verified pair (t_plus, t_minus) with opposite root numbers.

    One stream keeps every controlled place value free of square parts
    away from the class modulus; the second either plants q0^2 under the
    witness polynomial or (odd-degree I0* branch) flips its sign.  The
    class modulus pins valuations and the small residue characters; the
    one piece it does not force, the local root numbers at the primes of
    delta, is matched fiber against fiber before a pair is accepted.
    """
    app = applicability(surface)
    if app.status != "applicable":
        raise Inapplicable(app.reason or app.status)
    data = periodicity_data(surface)
    witness = app.witness_place

    noninsipid = [pl for pl in surface.places if not pl.insipid]
    i0star = [pl for pl in surface.places
              if pl.kodaira.kind == "I" and pl.kodaira.star
              and pl.kodaira.m == 0]

    f = surface.M.primitive
    g = ONE
    for pl in noninsipid:
        if not pl.is_multiplicative:
            g = g * pl.poly
    g = g.primitive
    liou = 1 if f.degree >= 1 else None

    # sign component: every R factor positive, plus the I0* polynomials
    # (their symbol sees the sign of the value)
    sign_polys = list(data.R_factors)
    for pl in i0star:
        if pl.poly not in sign_polys:
            sign_polys.append(pl.poly)

    # pinning the valuation of every factor of c4, c6, Delta keeps each
    # fiber's local shape (and the stripped residue symbols) constant on
    # the seed class
    control = pinning_polys(surface)

    impaire = app.branch == "I0*-odd-degree"
    if impaire:
        q0 = m0 = None
    else:
        q0, m0 = _q0_avoiding_collisions(surface, witness, control, f, g)

    base_exp = {}
    for p in delta_primes(surface):
        base_exp[p] = 3 if p == 2 else 1
    base_exp.setdefault(2, 3)
    base_exp.setdefault(3, 1)
    for p in _primes_upto(max(f.degree + g.degree, 2)):
        base_exp.setdefault(p, 2)
    if q0 is not None:
        base_exp.pop(q0, None)

    residues, moduli, log_classes = [], [], {}
    for p in sorted(base_exp):
        x, k = _seed_class(p, base_exp[p], control, (f, g))
        residues.append(x)
        moduli.append(p**k)
        log_classes[p] = (x, k)
    a_base, mod_base = crt(residues, moduli)

    def prescription(planted: bool):
        res, mods = [a_base], [mod_base]
        if q0 is not None:
            if planted:
                res.append(m0 % q0**3)
                mods.append(q0**3)
            else:
                x = _avoiding_class(q0, [f, g] + control)
                res.append(x)
                mods.append(q0)
        a, M = crt(res, mods)
        primes, ef, eg = [], [], []
        for p, _ in factorize(M).factors:
            primes.append(p)
            ef.append(_nu(int(f(a)), p) if f.degree >= 1 else 0)
            eg.append(_nu(int(g(a)), p) if g.degree >= 1 else 0)
        flip = witness.poly if (planted and impaire) else None
        signs = tuple((R, -1 if flip is not None and R == flip else 1)
                      for R in sign_polys)
        return SievePrescription(
            progression=ArithProgression(a, M),
            f=f, g=g, primes=tuple(primes),
            exponents_f=tuple(ef), exponents_g=tuple(eg),
            sign_constraints=signs, liouville_target=liou)

    pre1 = prescription(planted=False)
    pre2 = prescription(planted=True)

    # pair the flipped stream against a small pool of base fibers whose
    # delta-prime local product matches
    pool = []
    stream1 = sieve_stream(pre1, bound)
    for t in stream1:
        if q0 is not None and not _clear_of(surface, q0, t):
            continue
        pool.append((t, _delta_w_product(surface, t)))
        if len(pool) >= 8:
            break
    if not pool:
        raise Exhausted(f"base stream dry below |t| <= {bound}")

    t1 = t2 = None
    tried = 0
    for t in sieve_stream(pre2, bound):
        if q0 is not None and not _witness_ok(surface, witness, q0, t):
            continue
        w = _delta_w_product(surface, t)
        hit = next((tt for tt, ww in pool if ww == w), None)
        if hit is not None:
            t1, t2 = hit, t
            break
        tried += 1
        if tried > 300:
            raise Exhausted(
                "no flipped fiber matched the base pool's local root "
                f"numbers at the primes of delta below |t| <= {bound}")
    if t2 is None:
        raise Exhausted(f"flipped stream dry below |t| <= {bound}")

    rep1 = root_number_formula(surface, t1)
    rep2 = root_number_formula(surface, t2)
    if not (rep1.agree and rep2.agree):
        raise SignPredictionFailed(
            f"formula/direct mismatch at t1={t1} or t2={t2}")
    if rep1.W_direct == rep2.W_direct:
        raise SignPredictionFailed(
            f"t1={t1}, t2={t2} came out with equal sign {rep1.W_direct}")

    plus_first = rep1.W_direct == 1
    t_plus, rep_plus = (t1, rep1) if plus_first else (t2, rep2)
    t_minus, rep_minus = (t2, rep2) if plus_first else (t1, rep1)
    log = {
        "branch": app.branch,
        "witness": str(witness),
        "conditional_on": sorted(app.conditional_on),
        "q0": q0,
        "planted_seed": m0,
        "seed_classes": log_classes,
        "stream_plain": {"a": pre1.progression.a, "N": pre1.progression.N},
        "stream_flip": {"a": pre2.progression.a, "N": pre2.progression.N},
        "liouville_target": liou,
        "signs": [repr(R) + (":-" if s < 0 else ":+")
                  for R, s in pre2.sign_constraints],
    }
    return VariationCertificate(
        t_plus=t_plus, t_minus=t_minus, reports=(rep_plus, rep_minus),
        q0=q0, construction_log=log)


def _witness_ok(surface: Surface, witness, q0, t):
    """nu_{q0}(P_o(t)) = 2 exactly, the cofactor squarefree away from the
    class modulus, and q0 clear of every other place value."""
    value = int(witness.poly(t))
    if value == 0:
        return False
    nu, unit = padic_split(value, q0)
    if nu != 2:
        return False
    for pl in surface.places:
        if pl.poly != witness.poly and int(pl.poly(t)) % q0 == 0:
            return False
    fac = factorize(abs(unit))
    return all(e < 2 or surface.delta_const % p == 0 for p, e in fac.factors)


def _clear_of(surface: Surface, q0, t):
    """No place value at t is divisible by q0."""
    return all(int(pl.poly(t)) % q0 for pl in surface.places)


def _avoiding_class(q0, polys):
    """Smallest residue mod q0 at which every polynomial value is a unit."""
    for x in range(q0):
        if all(int(P(x)) % q0 for P in polys):
            return x
    raise Exhausted(f"every class mod {q0} meets a controlled root")


def _q0_avoiding_collisions(surface: Surface, witness, control, f, g,
                            bound=2000, retries=8):
    """select_q0, rejecting primes whose planted seed would drag another
    controlled polynomial to 0 mod q0 or whose residues are fully covered
    by the controlled roots (either would poison one of the streams)."""
    excluded = set(delta_primes(surface)) | {2, 3}
    others = [pl.poly for pl in surface.places if pl.poly != witness.poly]
    for _ in range(retries):
        q0, m0 = select_q0(surface, witness, excluded, bound)
        seed_clear = all(int(P(m0)) % q0 for P in others)
        try:
            _avoiding_class(q0, [f, g] + control)
        except Exhausted:
            seed_clear = False
        if seed_clear:
            return q0, m0
        excluded.add(q0)
    raise Exhausted("no collision-free auxiliary prime "
                    f"after {retries} attempts")


def _primes_upto(n):
    out = []
    for c in range(2, n + 1):
        if all(c % q for q in out):
            out.append(c)
    return out
