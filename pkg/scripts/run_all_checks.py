#!/usr/bin/env python3
"""Run every acceptance-level check configuration and print a summary table.

Usage: python3 scripts/run_all_checks.py [--jobs K]
"""

import argparse
import sys
import time

from yangian.algebra import Shape
from yangian.checks import run_check

CONFIGS = [
    ("rtt_coeff", 1, 1, 5), ("rtt_coeff", 2, 1, 5),
    ("rtt_coeff", 1, 2, 5), ("rtt_coeff", 2, 2, 4),
    ("inverse_relation", 1, 1, 4), ("inverse_relation", 2, 1, 4),
    ("gauss", 1, 1, 4), ("gauss", 2, 1, 4),
    ("gauss", 1, 2, 4), ("gauss", 2, 2, 3),
    ("remark21", 2, 1, 3), ("remark22", 2, 1, 4),
    ("thm1", 1, 1, 5), ("thm1", 2, 1, 4),
    ("thm1", 1, 2, 4), ("thm1", 2, 2, 3),
    ("thm2_centrality", 1, 1, 5), ("thm2_centrality", 2, 1, 4),
    ("case1", 2, 1, 4), ("case2", 1, 2, 4),
    ("case3", 1, 1, 4), ("case3", 2, 1, 4),
]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.monotonic()
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            futures = [ex.submit(run_check, name, Shape(m, n), N)
                       for name, m, n, N in CONFIGS]
            reports = [f.result() for f in futures]
    else:
        reports = [run_check(name, Shape(m, n), N)
                   for name, m, n, N in CONFIGS]

    failed = 0
    for r in reports:
        mark = "ok  " if r.passed else "FAIL"
        print(f"{mark} {r.check:18s} ({r.m}|{r.n}) N={r.order} "
              f"{r.elapsed_ms:6d}ms  witnesses={len(r.witnesses)}")
        failed += not r.passed
    print(f"\n{len(reports) - failed}/{len(reports)} configurations passed "
          f"in {time.monotonic() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
