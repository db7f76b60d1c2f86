"""Tabulate psi-fixed triangle counts against residues of p.

Writes a CSV with one line per odd prime: p, p mod 3, p mod 6, fixed count,
number of 3-cycles, and the number of roots of k^2 + k + 1 mod p. The last
column explains the fixed count: each root k0 in [1, p) lifts to k0 and k0 + p.
"""

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass

from sympy import primerange

from lambda_norms.triangle_orbits import orbit_decomposition


@dataclass
class CensusConfig:
    p_min: int = 3
    p_max: int = 500
    out: str = "-"


def roots_mod_p(p: int) -> int:
    return sum((k * k + k + 1) % p == 0 for k in range(p))


def census(cfg: CensusConfig):
    for p in primerange(max(cfg.p_min, 3), cfg.p_max + 1):
        od = orbit_decomposition(p)
        yield {
            "p": p,
            "p_mod_3": p % 3,
            "p_mod_6": p % 6,
            "fixed": len(od.fixed),
            "three_cycles": len(od.three_cycles),
            "roots": roots_mod_p(p),
        }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-min", type=int, default=CensusConfig.p_min)
    ap.add_argument("--p-max", type=int, default=CensusConfig.p_max)
    ap.add_argument("--out", default=CensusConfig.out, help="CSV path, '-' for stdout")
    cfg = CensusConfig(**vars(ap.parse_args(argv)))

    rows = list(census(cfg))
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    try:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()

    tally = Counter((r["p_mod_3"], r["fixed"]) for r in rows)
    for (residue, fixed), n in sorted(tally.items()):
        print(f"p = {residue} mod 3: fixed = {fixed} for {n} primes", file=sys.stderr)


if __name__ == "__main__":
    main()
