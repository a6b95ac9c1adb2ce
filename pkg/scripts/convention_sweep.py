#!/usr/bin/env python3
"""Empirical resolution of the matrix sign convention.

Runs the discriminating checks under both conventions and prints the
witness counts.  The inverse-entry relation and centrality single out
"plain"; the Gauss reconstruction passes under either convention and is
therefore not a discriminator.
"""

import sys

from yangian.algebra import Shape
from yangian.checks import run_check

SHAPES = [(1, 1), (2, 1)]
CHECKS = ["inverse_relation", "gauss", "thm1", "thm2_centrality"]


def main() -> int:
    print(f"{'check':18s} {'shape':6s} {'twisted':>10s} {'plain':>10s}")
    for name in CHECKS:
        for m, n in SHAPES:
            row = []
            for conv in ("twisted", "plain"):
                r = run_check(name, Shape(m, n), 3, convention=conv)
                row.append(len(r.witnesses))
            print(f"{name:18s} ({m}|{n})  {row[0]:>10d} {row[1]:>10d}")
    print("\nwitness counts; 0 = identity holds under that convention")
    return 0


if __name__ == "__main__":
    sys.exit(main())
