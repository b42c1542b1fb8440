"""Local root numbers at residue characteristics 2 and 3.

At p in {2, 3} the local root number of an additive, potentially good fiber
is not given by a tame character formula; it is congruence data.  On each
bucket keyed by (Kodaira type, v(c4), v(c6), v(Delta)) of the p-minimal
model, the sign is a function of the unit parts

    c4' = c4 / p^v4,   c6' = c6 / p^v6,   D' = Delta / p^vd

modulo small powers of p.  Replacing the model by a u-scaled one multiplies
the triple by (u^4, u^6, u^12), so the sign is constant along such orbits;
`lookup` folds the residues to an orbit canonical form, letting any
p-minimal model key the same cell.

Rows are fitted against the analytic functional-equation oracle by
tools/fit_local_tables.py and frozen in _tables_data.py.  Very deep c4/c6
valuations are capped: a fiber with v(c4) >= V4CAP[p] sits in the same cell
as one with c4 = 0 (its j-invariant is p-adically indistinguishable from 0
at the depth the tables resolve), and likewise for c6 and j = 1728.
"""

from __future__ import annotations

V4CAP = {2: 9, 3: 9}
V6CAP = {2: 13, 3: 10}

# largest v(Delta) of a p-minimal potentially-good additive model; nothing
# past this should ever reach the tables
_VD_LIMIT = 20


class TableMissError(LookupError):
    """No fitted row/cell for this local datum."""


def canonical_residues(p, moduli, r4, r6, rd):
    """Orbit-minimal representative of (r4, r6, rd) under
    (u^4, u^6, u^12) scaling, u a unit mod p^max(moduli)."""
    m4, m6, md = moduli
    M4, M6, Md = p**m4, p**m6, p**md
    r4 %= M4
    r6 %= M6
    rd %= Md
    span = p ** max(m4, m6, md)
    best = (r4, r6, rd)
    for u in range(2, span):
        if u % p == 0:
            continue
        cand = (r4 * pow(u, 4, M4) % M4,
                r6 * pow(u, 6, M6) % M6,
                rd * pow(u, 12, Md) % Md)
        if cand < best:
            best = cand
    return best


def lookup(p, kodaira, v4, v6, vd, c4u, c6u, du) -> int:
    """Sign for the local datum; raises TableMissError on unfitted cells.

    v4/v6 may be huge sentinels (c4 = 0 / c6 = 0); they and anything past
    the caps collapse onto the capped bucket with zero unit residue.
    """
    if v4 >= V4CAP[p]:
        v4, c4u = V4CAP[p], 0
    if v6 >= V6CAP[p]:
        v6, c6u = V6CAP[p], 0
    if not 0 <= vd <= _VD_LIMIT:
        raise TableMissError(
            f"v(Delta) = {vd} out of range for a p-minimal additive model")
    key = (p, kodaira, v4, v6, vd)
    row = TABLES.get(key)
    if row is None:
        raise TableMissError(f"no table row for {key}")
    moduli, cells = row
    folded = canonical_residues(p, moduli, c4u, c6u, du)
    sign = cells.get(folded)
    if sign is None:
        raise TableMissError(f"no residue cell {folded} in row {key}")
    return sign


try:
    from rootnum._tables_data import TABLES
except ImportError:  # pragma: no cover - before the fit tool has run
    TABLES = {}
