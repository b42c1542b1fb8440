"""Command-line front end.

Verbs: classify (place table of a family), root (scan a t-range on one or
both evaluation paths), average (truncated mean of the root number), vary
(opposite-sign certificate search), sieve-density / chowla (value censuses
over a polynomial), catalog (list built-in families).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog_io import (CATALOG, FAMILY_NAMES, ScanRow, catalog_family,
                         parse_family_file, write_report)
from .intarith import load_cache, save_cache
from .localdata import BadFiberError, global_root_number_direct, instantiate_fiber
from .polyring import IntPoly
from .sieves import (EVERYTHING, combined_census, density_constant,
                     liouville_census, squarefree_census)
from .signformula import ZeroAtMultiplicativePlace, root_number_formula
from .surface import mu_membership
from .variation import Inapplicable, variation_pair_search


class UsageError(ValueError):
    pass


def _parse_params(pairs):
    out = {}
    for pair in pairs or ():
        key, sep, val = pair.partition("=")
        if not sep or not key:
            raise UsageError(f"--param wants k=v, got {pair!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key}={val!r} is not an integer") from None
    return out


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"--t wants a..b, got {text!r}")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--t bounds must be integers, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"--t range {text!r} is empty")
    return lo, hi


def _parse_poly(text):
    try:
        coeffs = [int(c) for c in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"polynomial wants ascending integer coefficients, "
                         f"got {text!r}") from None
    if not coeffs:
        raise UsageError("polynomial needs at least one coefficient")
    return IntPoly(coeffs)


def _load_family(args):
    if args.catalog and args.file:
        raise UsageError("--catalog and --file are mutually exclusive")
    if args.catalog:
        return catalog_family(args.catalog, **_parse_params(args.param))
    if args.file:
        if args.param:
            raise UsageError("--param only applies to --catalog families")
        with open(args.file, encoding="utf-8") as fh:
            return parse_family_file(fh.read())
    raise UsageError("need a family: --catalog NAME or --file PATH")


def _emit(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def _cmd_catalog(args):
    listing = []
    for name in FAMILY_NAMES:
        pspec, _ = CATALOG[name]
        listing.append({
            "name": name,
            "parameters": [{"name": pn,
                            "required": default is None,
                            "default": default,
                            "nonzero": nz} for pn, default, nz in pspec],
        })
    if args.format == "json":
        _emit((json.dumps(listing, indent=2, sort_keys=True) + "\n").encode())
    else:
        for fam in listing:
            ps = ", ".join(
                p["name"] + ("" if p["required"] else f"={p['default']}")
                + ("" if not p["nonzero"] else " (nonzero)")
                for p in fam["parameters"]) or "-"
            print(f"{fam['name']:12s} {ps}")
    return 0


def _cmd_classify(args):
    spec = _load_family(args)
    surf = spec.surface()
    rows = []
    for pl in surf.places:
        mu = "-"
        if pl.kodaira.kind in ("II", "IV") and not pl.kodaira.star:
            mu = f"mu3={'yes' if mu_membership(pl.poly, 3) else 'no'}"
        elif pl.kodaira.kind == "III" and not pl.kodaira.star:
            mu = f"mu4={'yes' if mu_membership(pl.poly, 4) else 'no'}"
        rows.append({
            "place": str(pl.poly),
            "kodaira": str(pl.kodaira),
            "epsilon": pl.epsilon if not pl.is_multiplicative else None,
            "insipid": pl.insipid,
            "mu_test": mu,
        })
    inf = surf.infinity
    rows.append({
        "place": "-deg",
        "kodaira": str(inf.kodaira),
        "epsilon": inf.epsilon if not inf.is_multiplicative else None,
        "insipid": inf.insipid,
        "mu_test": "-",
    })
    if args.format == "json":
        payload = {"family": spec.name,
                   "parameters": dict(spec.parameters),
                   "isotrivial": surf.is_isotrivial,
                   "places": rows}
        _emit((json.dumps(payload, indent=2, sort_keys=True) + "\n").encode())
        return 0
    print(f"family {spec.name}"
          + (f" {dict(spec.parameters)}" if spec.parameters else ""))
    wide = max(len(r["place"]) for r in rows)
    print(f"{'place':{wide}s}  {'type':6s} {'eps':>4s}  {'insipid':7s}  mu")
    for r in rows:
        eps = "-" if r["epsilon"] is None else str(r["epsilon"])
        print(f"{r['place']:{wide}s}  {r['kodaira']:6s} {eps:>4s}  "
              f"{str(r['insipid']).lower():7s}  {r['mu_test']}")
    return 0


def _scan_one(surface, t, paths):
    try:
        if paths == "direct":
            fiber = instantiate_fiber(surface, t)
            return ScanRow(t=t, w_direct=global_root_number_direct(fiber))
        rep = root_number_formula(surface, t)
    except (BadFiberError, ZeroAtMultiplicativePlace):
        return ScanRow(t=t, flag="singular")
    if paths == "formula":
        return ScanRow(t=t, w_formula=rep.W_formula,
                       lambda_m=rep.lambda_M, phi=rep.phi)
    return ScanRow(t=t, w_direct=rep.W_direct, w_formula=rep.W_formula,
                   lambda_m=rep.lambda_M, phi=rep.phi)


def _scan(surface, ts, paths, jobs):
    if jobs <= 1:
        return [_scan_one(surface, t, paths) for t in ts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_one, [surface] * len(ts), ts,
                             [paths] * len(ts), chunksize=64))


def _cmd_root(args):
    surf = _load_family(args).surface()
    lo, hi = _parse_range(args.t)
    rows = _scan(surf, range(lo, hi + 1), args.paths, args.jobs)
    _emit(write_report(rows, format=args.format))
    bad = sum(1 for r in rows if r.agree is False)
    if bad:
        print(f"error: {bad} fiber(s) disagree between paths", file=sys.stderr)
        return 1
    return 0


def _cmd_average(args):
    surf = _load_family(args).surface()
    T = args.T
    ts = sorted(range(-T, T + 1), key=lambda t: (abs(t), t))
    rows = _scan(surf, ts, "direct", args.jobs)
    total = count = skipped = 0
    partials = []
    step = max(1, T // 10)
    by_t = {r.t: r for r in rows}
    for radius in range(T + 1):
        for t in ({radius, -radius} if radius else {0}):
            r = by_t[t]
            if r.flag == "singular":
                skipped += 1
            else:
                total += r.w_direct
                count += 1
        if radius and radius % step == 0:
            partials.append((radius, total / max(count, 1)))
    mean = total / max(count, 1)
    if args.format == "json":
        payload = {"family": args.catalog or args.file, "T": T,
                   "mean": mean, "fibers": count, "skipped_singular": skipped,
                   "partial_means": [[R, m] for R, m in partials]}
        _emit((json.dumps(payload, indent=2, sort_keys=True) + "\n").encode())
        return 0
    for R, m in partials:
        print(f"T={R:>8d}  mean={m:+.6f}")
    print(f"mean over |t| <= {T}: {mean:+.6f} "
          f"({count} fibers, {skipped} singular skipped)")
    return 0


def _cmd_vary(args):
    surf = _load_family(args).surface()
    try:
        cert = variation_pair_search(surf, bound=args.bound)
    except Inapplicable as exc:
        payload = {"status": "inapplicable", "reason": str(exc)}
        if args.format == "json":
            _emit((json.dumps(payload, indent=2, sort_keys=True) + "\n").encode())
        else:
            print(f"inapplicable: {exc}")
        return 0
    _emit(write_report(cert, format=args.format))
    return 0


def _census_report(args, columns):
    if args.format == "json":
        payload = dict(columns)
        _emit((json.dumps(payload, indent=2, sort_keys=True) + "\n").encode())
    else:
        keys = ",".join(k for k, _ in columns)
        vals = ",".join(str(v) for _, v in columns)
        print(keys)
        print(vals)
    return 0


def _cmd_sieve_density(args):
    f = _parse_poly(args.poly)
    count, density = squarefree_census(f, EVERYTHING, args.X)
    const = float(density_constant(f, EVERYTHING, args.cutoff))
    return _census_report(args, [
        ("X", args.X), ("count", count), ("density", density),
        ("constant", const), ("difference", abs(density - const))])


def _cmd_chowla(args):
    f = _parse_poly(args.poly)
    if args.poly2:
        g = _parse_poly(args.poly2)
        count, density = combined_census(f, g, EVERYTHING, args.X)
        const = float(density_constant((f * g).primitive, EVERYTHING,
                                       args.cutoff)) / 2
        return _census_report(args, [
            ("X", args.X), ("count", count), ("density", density),
            ("constant", const), ("difference", abs(density - const))])
    s, ratio = liouville_census(f, EVERYTHING, args.X)
    return _census_report(args, [
        ("X", args.X), ("count", s), ("density", ratio),
        ("constant", 0.0), ("difference", abs(ratio))])


# ---------------------------------------------------------------------------
# argument surface
# ---------------------------------------------------------------------------

def _family_flags(sub):
    sub.add_argument("--catalog", metavar="NAME",
                     help=f"built-in family ({', '.join(FAMILY_NAMES)})")
    sub.add_argument("--file", metavar="PATH",
                     help="family file (see README for the format)")
    sub.add_argument("--param", action="append", metavar="K=V",
                     help="catalog family parameter (repeatable)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="rootnum",
        description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = ap.add_subparsers(dest="verb", required=True)

    sub.add_parser("catalog", help="list built-in families")

    p = sub.add_parser("classify", help="place table of a family")
    _family_flags(p)

    p = sub.add_parser("root", help="scan root numbers over a t-range")
    _family_flags(p)
    p.add_argument("--t", required=True, metavar="A..B")
    p.add_argument("--paths", choices=("direct", "formula", "both"),
                   default="both")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("average", help="truncated mean of the root number")
    _family_flags(p)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("vary", help="search an opposite-sign fiber pair")
    _family_flags(p)
    p.add_argument("--bound", type=int, default=10**6,
                   help="|t| search bound (default 10^6)")

    p = sub.add_parser("sieve-density",
                       help="squarefree census of polynomial values")
    p.add_argument("--poly", required=True, metavar="C0,C1,...",
                   help="ascending coefficients")
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=10**4,
                   help="prime cutoff for the density constant")

    p = sub.add_parser("chowla",
                       help="Liouville census (or combined census with --poly2)")
    p.add_argument("--poly", required=True, metavar="C0,C1,...")
    p.add_argument("--poly2", metavar="C0,C1,...",
                   help="second factor: count squarefree fg with "
                        "liouville(f) = -1")
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=10**4)

    return ap


_DISPATCH = {
    "catalog": _cmd_catalog,
    "classify": _cmd_classify,
    "root": _cmd_root,
    "average": _cmd_average,
    "vary": _cmd_vary,
    "sieve-density": _cmd_sieve_density,
    "chowla": _cmd_chowla,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    load_cache()
    try:
        return _DISPATCH[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    finally:
        save_cache()


if __name__ == "__main__":
    raise SystemExit(main())
