"""Built-in family catalog, the family file format, and report writers.

A catalog entry is a one-parameter family of elliptic curves given by five
integer polynomials (a1, ..., a6) in the parameter T.  Families stated as
w*y^2 = x^3 + a2 x^2 + a4 x + a6 are folded into short Weierstrass form over
the integers by the usual quadratic-twist substitution

    y^2 = x^3 + w*a2 x^2 + w^2*a4 x + w^3*a6,

which preserves the generic j-invariant.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, is_dataclass, asdict
from fractions import Fraction

from rootnum.polyring import IntPoly
from rootnum.surface import Surface, build_surface


class FamilyFormatError(ValueError):
    """Malformed family file; message carries the offending line number."""


@dataclass(frozen=True)
class FamilySpec:
    """A fully instantiated family: name, chosen parameters, a-invariants."""

    name: str
    parameters: tuple[tuple[str, int], ...]  # sorted (name, value) pairs
    a_polys: tuple[IntPoly, IntPoly, IntPoly, IntPoly, IntPoly]

    def surface(self) -> Surface:
        return build_surface(self.a_polys)

    def param(self, key, default=None):
        for k, v in self.parameters:
            if k == key:
                return v
        return default


def _poly(*asc):
    return IntPoly(list(asc))


def _twist(w, a2, a4, a6):
    """Fold w*y^2 = x^3 + a2 x^2 + a4 x + a6 into y^2 = x^3 + ..."""
    return (_poly(0), a2 * w, _poly(0), a4 * (w * w), a6 * (w**3))


# builders take the validated parameter dict and return (a1,...,a6)

def _build_washington(p):
    return (_poly(0), _poly(0, 1), _poly(0), _poly(-3, -1), _poly(1))


def _build_legendre(p):
    # y^2 = x(x-1)(x-T)
    return (_poly(0), _poly(-1, -1), _poly(0), _poly(0, 1), _poly(0))


def _build_F(p):
    s = p["s"]
    return (_poly(0), _poly(0, 3), _poly(0), _poly(3 * s), _poly(0, s))


def _build_G(p):
    return _twist(p["w"], _poly(0, 3), _poly(0, 3), _poly(0, 0, 1))


def _build_H(p):
    # w y^2 = x^3 + (8T^2-7T+3) x^2 - 3(2T-1) x + (T+1)
    return _twist(p["w"], _poly(3, -7, 8), _poly(3, -6), _poly(1, 1))


def _build_I(p):
    # w y^2 = x^3 + T(T-7) x^2 - 6T(T-6) x + 2T(5T-27)
    return _twist(p["w"], _poly(0, -7, 1), _poly(0, 36, -6), _poly(0, -54, 10))


def _build_J(p):
    m, v = p["m"], p["v"]
    return _twist(p["w"], _poly(3 * v, 0, 3), _poly(0, -3 * m), _poly(m * m))


def _build_L(p):
    s, v = p["s"], p["v"]
    return _twist(p["w"], _poly(3 * v, 0, 3), _poly(3 * s), _poly(s * v, 0, s))


# name -> (ordered (param, default-or-None, nonzero?) list, builder)
# default None means the parameter is required.
CATALOG = {
    "washington": ((), _build_washington),
    "legendre": ((), _build_legendre),
    "F": ((("s", None, True),), _build_F),
    "G": ((("w", None, True),), _build_G),
    "H": ((("w", None, True),), _build_H),
    "I": ((("w", None, True),), _build_I),
    "J": ((("m", None, True), ("w", None, True), ("v", 0, False)), _build_J),
    "L": ((("w", None, True), ("s", None, True), ("v", None, False)), _build_L),
}

FAMILY_NAMES = tuple(sorted(CATALOG))


def catalog_family(name, **parameters) -> FamilySpec:
    """Instantiate a built-in family.  Unknown names, missing/zero-forbidden
    or extraneous parameters raise ValueError."""
    if name not in CATALOG:
        raise ValueError(
            f"unknown family {name!r}; available: {', '.join(FAMILY_NAMES)}")
    pspec, builder = CATALOG[name]
    allowed = {pn for pn, _, _ in pspec}
    extra = set(parameters) - allowed
    if extra:
        raise ValueError(f"family {name}: unexpected parameter(s) "
                         f"{', '.join(sorted(extra))}")
    values = {}
    for pn, default, nonzero in pspec:
        if pn in parameters:
            val = parameters[pn]
        elif default is not None:
            val = default
        else:
            raise ValueError(f"family {name}: missing parameter {pn}")
        if not isinstance(val, int) or isinstance(val, bool):
            raise ValueError(f"family {name}: parameter {pn} must be an integer")
        if nonzero and val == 0:
            raise ValueError(f"family {name}: parameter {pn} must be nonzero")
        values[pn] = val
    a = builder(values)
    return FamilySpec(name, tuple(sorted(values.items())), a)


# ---------------------------------------------------------------------------
# family file format
#
#   name <identifier>
#   param <name> <integer>        (zero or more)
#   a1 <ascending integer coefficients>
#   a2 ...
#   a3 ...
#   a4 ...
#   a6 ...
#
# '#' starts a comment; blank lines are ignored; trailing zero coefficients
# are normalized away.  a1..a6 are the already-instantiated polynomials.
# ---------------------------------------------------------------------------

_A_KEYS = ("a1", "a2", "a3", "a4", "a6")


def serialize_family(spec: FamilySpec) -> str:
    lines = [f"name {spec.name}"]
    for k, v in spec.parameters:
        lines.append(f"param {k} {v}")
    for key, poly in zip(_A_KEYS, spec.a_polys):
        coeffs = " ".join(str(c) for c in poly.coeffs) if poly.coeffs else "0"
        lines.append(f"{key} {coeffs}")
    return "\n".join(lines) + "\n"


def parse_family_file(text: str) -> FamilySpec:
    name = None
    params = {}
    polys = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        key = fields[0]
        if key == "name":
            if len(fields) != 2:
                raise FamilyFormatError(f"line {lineno}: name takes one value")
            if name is not None:
                raise FamilyFormatError(f"line {lineno}: duplicate name")
            name = fields[1]
        elif key == "param":
            if len(fields) != 3:
                raise FamilyFormatError(
                    f"line {lineno}: expected 'param <name> <integer>'")
            try:
                params[fields[1]] = int(fields[2])
            except ValueError:
                raise FamilyFormatError(
                    f"line {lineno}: parameter value {fields[2]!r} is not an "
                    f"integer") from None
        elif key in _A_KEYS:
            if key in polys:
                raise FamilyFormatError(f"line {lineno}: duplicate {key}")
            try:
                coeffs = [int(c) for c in fields[1:]]
            except ValueError:
                raise FamilyFormatError(
                    f"line {lineno}: non-integer coefficient in {key}") from None
            if not coeffs:
                raise FamilyFormatError(f"line {lineno}: {key} needs at least "
                                        f"one coefficient")
            polys[key] = IntPoly(coeffs)
        else:
            raise FamilyFormatError(f"line {lineno}: unknown field {key!r} "
                                    f"(expected name/param/a1/a2/a3/a4/a6)")
    if name is None:
        raise FamilyFormatError("missing 'name' line")
    missing = [k for k in _A_KEYS if k not in polys]
    if missing:
        raise FamilyFormatError(f"missing field(s): {', '.join(missing)}")
    return FamilySpec(name, tuple(sorted(params.items())),
                      tuple(polys[k] for k in _A_KEYS))


# ---------------------------------------------------------------------------
# report writers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    """One fiber of a `root` scan; None entries mean 'not computed' and a
    singular fiber is carried with flag='singular'."""

    t: int
    w_direct: int | None = None
    w_formula: int | None = None
    lambda_m: int | None = None
    phi: int | None = None
    flag: str = ""

    @property
    def agree(self):
        if self.flag == "singular":
            return None
        if self.w_direct is None or self.w_formula is None:
            return None
        return self.w_direct == self.w_formula


CSV_HEADER = ("t", "W_direct", "W_formula", "lambda_M", "phi", "agree")


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _rows_csv(rows) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(rows, key=lambda r: r.t):
        agree = "singular" if r.flag == "singular" else _cell(r.agree)
        w.writerow([r.t, _cell(r.w_direct), _cell(r.w_formula),
                    _cell(r.lambda_m), _cell(r.phi), agree])
    return buf.getvalue().encode()


def _jsonable(obj):
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, IntPoly):
        return str(obj)
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _flat_csv(obj) -> bytes:
    data = _jsonable(obj)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k in sorted(data):
        w.writerow([k, json.dumps(data[k], sort_keys=True)])
    return buf.getvalue().encode()


def write_report(obj, format="csv") -> bytes:
    """Serialize scan rows / a certificate / a census deterministically.

    Lists of ScanRow use the scan CSV schema; everything else is emitted as
    JSON (or a key,value CSV) of its public fields.
    """
    if format not in ("csv", "json"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(obj, (list, tuple)) and all(isinstance(r, ScanRow) for r in obj):
        if format == "csv":
            return _rows_csv(obj)
        payload = []
        for r in sorted(obj, key=lambda r: r.t):
            d = _jsonable(r)
            d["agree"] = "singular" if r.flag == "singular" else r.agree
            payload.append(d)
        return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()
    if format == "json":
        return (json.dumps(_jsonable(obj), sort_keys=True, indent=2)
                + "\n").encode()
    return _flat_csv(obj)
