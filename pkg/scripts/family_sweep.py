#!/usr/bin/env python3
"""Sweep the unitary polygon family N(r) + (1/2)^(n-2r) over both scalings.

For each admissible (n, r) the polygon is read as slope data at a single inert
place and classified: does it carry one common multiplicity (balanced, hence a
simple hypersymmetric point) or merely a common multiset (hypersymmetric)?
Single-place data is always symmetric, so the interesting column is where the
multiplicities equalize -- the n = 3r (r even) and n = 4r (r odd) diagonal
under the times_r reading.

Usage:
    python scripts/family_sweep.py --max-n 12
"""

from __future__ import annotations

import argparse

from newton_strata import (
    PELSlopeDatum,
    PlaceTower,
    bueltel_wedhorn,
    hypersymmetric_verdict,
)
from newton_strata.strata import LITERAL, TIMES_R


def classify(n: int, r: int, scaling: str) -> str:
    poly = bueltel_wedhorn(n, r, scaling)
    tower = PlaceTower.degenerate(["v"])
    level = hypersymmetric_verdict(PELSlopeDatum.of(tower, {"v": poly})).level
    return level.value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()

    print(f"{'n':>3} {'r':>3}  {'literal':<30} {'times_r':<30}")
    for n in range(1, args.max_n + 1):
        for r in range(0, n // 2 + 1):
            lit = bueltel_wedhorn(n, r, LITERAL)
            scaled = bueltel_wedhorn(n, r, TIMES_R)
            print(
                f"{n:>3} {r:>3}  "
                f"{lit.exponent_str():<24} [{classify(n, r, LITERAL)}]  "
                f"{scaled.exponent_str():<24} [{classify(n, r, TIMES_R)}]"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
