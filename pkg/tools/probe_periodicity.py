"""Measure the minimal class modulus making the periodic part constant.

For each catalog family, sample phi_ext(t) = prod_{p|delta} W_p(E_t) *
prod_{finite places} g_P(t) over a window, group the samples by
(t mod N, sign pattern of the R factors and I0* polynomials), keeping
only samples that pin every group prime's valuation of Delta(t) below
the modulus exponent, and report the smallest N of the shape
24 * prod p^k (p running over delta primes and a few extra candidates)
on which every group is constant.
"""

import itertools
import sys
import time

sys.path.insert(0, "src")

from rootnum.catalog_io import catalog_family
from rootnum.intarith import factorize
from rootnum.localdata import instantiate_fiber
from rootnum.polyring import IntPoly
from rootnum.signformula import _reciprocity_chain, g_factor
from rootnum.surface import delta_primes


def sign_polys_of(surface):
    out = []

    def collect(q):
        from rootnum.polyring import factor_irreducible
        for fac, _ in factor_irreducible(q)[1]:
            fac = fac.primitive
            if fac.degree >= 1 and fac not in out:
                out.append(fac)

    for place in surface.places:
        if place.kodaira.kind == "I" and place.kodaira.star \
                and place.kodaira.m == 0:
            collect(place.poly)
            continue
        if place.insipid:
            continue
        if place.is_multiplicative:
            for q in _reciprocity_chain(IntPoly([-1]) * surface.c6,
                                        place.poly):
                collect(q)
        else:
            collect(place.poly)
    return out


def harvest(surface, window):
    rows = {}
    for t in range(-window, window + 1):
        if int(surface.delta(t)) == 0:
            continue
        try:
            fiber = instantiate_fiber(surface, t)
            phi = 1
            for p in delta_primes(surface):
                phi *= fiber.root_number_at(p)
            for place in surface.places:
                phi *= g_factor(surface, place, t)
        except Exception as e:  # table miss or degenerate value: skip
            rows[t] = ("skip", type(e).__name__)
            continue
        rows[t] = ("ok", phi)
    return rows


def test_modulus(surface, rows, signs, exps, stats=None):
    """None if constant on all pinned groups, else a witness tuple."""
    values = [pl.poly for pl in surface.places]
    groups = {}
    for t, (st, phi) in rows.items():
        if st != "ok":
            continue
        if any(int(P(t)) % p**k == 0
               for P in values for p, k in exps.items()):
            continue  # some place valuation not pinned at this level
        N = 1
        for p, k in exps.items():
            N *= p**k
        key = (t % N, tuple(int(R(t)) > 0 for R in signs))
        prev = groups.setdefault(key, (t, phi, 0))
        groups[key] = (prev[0], prev[1], prev[2] + 1)
        if prev[1] != phi:
            return (prev[0], t, key)
    if stats is not None:
        stats["groups"] = len(groups)
        stats["fat"] = sum(1 for v in groups.values() if v[2] >= 2)
        stats["used"] = sum(v[2] for v in groups.values())
    return None


def minimal_modulus(surface, rows, signs, base_exps, bump_order, cap=13):
    exps = dict(base_exps)
    while True:
        bad = test_modulus(surface, rows, signs, exps)
        if bad is None:
            return exps, bad
        for p in bump_order:
            if exps.get(p, 0) < cap:
                exps[p] = exps.get(p, 0) + 1
                break
        else:
            return exps, bad


def shrink(surface, rows, signs, exps):
    """Greedy per-prime reduction of a working exponent pattern."""
    exps = dict(exps)
    changed = True
    while changed:
        changed = False
        for p in sorted(exps):
            while exps[p] > (3 if p == 2 else 1 if p == 3 else 0):
                trial = dict(exps)
                trial[p] -= 1
                if test_modulus(surface, rows, signs, trial) is None:
                    exps = trial
                    changed = True
                else:
                    break
    return exps


def main():
    fams = [("washington", {}), ("F", {"s": 1}), ("G", {"w": 1}),
            ("H", {"w": 1}), ("I", {"w": 1}), ("J", {"m": 1, "w": 1}),
            ("L", {"s": 1, "v": 1, "w": 1}), ("legendre", {})]
    window = int(sys.argv[1]) if len(sys.argv) > 1 else 120
    for name, params in fams:
        t0 = time.time()
        surf = catalog_family(name, **params).surface()
        signs = sign_polys_of(surf)
        rows = harvest(surf, window)
        skips = sum(1 for v in rows.values() if v[0] == "skip")
        dps = list(delta_primes(surf))
        base = {2: 3, 3: 1}
        for p in dps:
            base.setdefault(p, 1)
        bump = [2, 3] + [p for p in dps if p > 3]
        exps, bad = minimal_modulus(surf, rows, signs, base, bump)
        if bad is None:
            exps = shrink(surf, rows, signs, exps)
            N = 1
            for p, k in exps.items():
                N *= p**k
            stats = {}
            test_modulus(surf, rows, signs, exps, stats)
            print(f"{name}: N = {N} = {exps}  signs={len(signs)} "
                  f"samples={len(rows)-skips} skips={skips} "
                  f"groups={stats['groups']} fat={stats['fat']} "
                  f"used={stats['used']} ({time.time()-t0:.0f}s)")
        else:
            print(f"{name}: FAILED at {exps}, witness {bad} "
                  f"skips={skips} ({time.time()-t0:.0f}s)")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
