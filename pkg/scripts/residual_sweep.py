#!/usr/bin/env python3
"""Sweep verification residuals against matrix size.

Runs every verification suite over a size range and prints the worst
residual per (suite, size) cell plus wall-clock time per size, to show how
the numerical error grows with n.  Useful when deciding tolerances: the
shipped defaults should sit several orders of magnitude above every cell
printed here.

Usage:
    python3 scripts/residual_sweep.py
    python3 scripts/residual_sweep.py --sizes 3 12 --samples 100 --seed 1
"""

import argparse
import sys
import time

from ttstokes.verify import SUITES, run_suites


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs=2, type=int, default=[3, 10],
                    metavar=("LO", "HI"), help="inclusive size range")
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ns = ap.parse_args(argv)
    sizes = range(ns.sizes[0], ns.sizes[1] + 1)

    suites = sorted(SUITES)
    cells = {}
    times = {}
    for n1 in sizes:
        t0 = time.perf_counter()
        for r in run_suites([n1], samples=ns.samples, seed=ns.seed):
            cells[(r.suite, n1)] = r
        times[n1] = time.perf_counter() - t0

    width = max(len(s) for s in suites)
    header = " " * width + "".join(f"  n+1={n1:<6d}" for n1 in sizes)
    print(header)
    failed = 0
    for suite in suites:
        row = suite.ljust(width)
        for n1 in sizes:
            r = cells[(suite, n1)]
            mark = " " if r.passed else "*"
            row += f"  {r.max_residual:8.1e}{mark}"
            failed += not r.passed
        print(row)
    print("time".ljust(width)
          + "".join(f"  {times[n1]:7.2f}s " for n1 in sizes))
    if failed:
        print(f"{failed} failing cells (marked *)")
        return 1
    worst = max(r.max_residual for r in cells.values())
    print(f"worst residual anywhere: {worst:.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
