"""Diagnose why specific table cells fail to fit: per-candidate autopsy."""

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
import fit_local_tables as F

from rootnum.localdata import (curve_from_model, local_root_number,
                               model_from_invariants)
from rootnum.localtables import TableMissError


class Probe(F.Fitter):
    def autopsy(self, key, fold):
        exs = sorted((ex for ex in self.exemplars[key].values()
                      if self.cell_of_exemplar(ex) == (key, fold)),
                     key=lambda e: abs(e.delta))
        print(f"== {key} {fold}: {len(exs)} exemplars")
        for ex in exs[:2]:
            print(f"   ex c4={ex.c4} c6={ex.c6} delta={ex.delta} vd={ex.vd}")
        for relax in (False, True):
            for guard in (3, 5):
                ex = exs[0]
                merged = {}
                for x4, L4, x6, L6 in self._lattices(key, ex, guard, relax):
                    for pair in self._candidates(x4, L4, x6, L6):
                        merged.setdefault(pair, abs(pair[0]**3 - pair[1]**2))
                cands = sorted(merged, key=merged.get)
                reasons = Counter()
                for c4c, c6c in cands[: self.opts.tries]:
                    try:
                        ai = model_from_invariants(c4c, c6c)
                        fiber = curve_from_model(ai)
                    except (ValueError, AssertionError, ArithmeticError) as e:
                        reasons[f"model:{type(e).__name__}"] += 1
                        continue
                    if fiber.conductor > self.opts.n_cap:
                        reasons["n_cap"] += 1
                        continue
                    got = self.cell_of(fiber.local_at(key[0]), key[0])
                    if got != (key, fold):
                        reasons[f"cell={got[0][1] if got else None}"] += 1
                        continue
                    deps = []
                    for ld in fiber.local:
                        if ld.p == key[0]:
                            continue
                        try:
                            local_root_number(ld)
                        except TableMissError:
                            deps.append((ld.p, str(ld.kodaira), ld.vd))
                    reasons["OK" if not deps else f"dep:{deps}"] += 1
                print(f"   relax={relax} guard={guard}: "
                      f"{len(cands)} cands -> {dict(reasons)}")


def main():
    class Opts:
        pass

    opts = Opts()
    opts.quick = True
    opts.k0 = {2: 8, 3: 6}
    opts.depth_cap = {2: 20, 3: 13}
    opts.trange = 25
    opts.frange = 60
    opts.delta_cap = 4 * 10**9
    opts.deep_delta_cap = 2 * 10**12
    opts.n_cap = 1.2 * 10**8
    opts.j_window = 44
    opts.tries = 26

    probe = Probe(opts)
    probe.harvest()
    import json
    summary = json.load(open(Path(__file__).parent / "fit_summary.json"))
    targets = [(tuple(k), tuple(f)) for k, f, _ in summary["unfitted"]]
    import time
    mode = sys.argv[2] if len(sys.argv) > 2 else "autopsy"
    for key, fold in targets[: int(sys.argv[1]) if len(sys.argv) > 1 else 6]:
        if key not in probe.exemplars:
            print(f"== {key} {fold}: NOT in this harvest")
            continue
        if mode == "autopsy":
            probe.autopsy(key, fold)
        else:
            t0 = time.time()
            sign = probe.fit_cell(key, fold)
            print(f"== {key} {fold}: sign={sign} "
                  f"({time.time() - t0:.1f}s, {probe.oracle_calls} oracle)",
                  flush=True)


if __name__ == "__main__":
    main()
