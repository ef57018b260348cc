#!/usr/bin/env python3
"""Print the supported-root census and adapted simple systems for a size range.

For each matrix size this lists the singular directions in a half period,
the supported roots on each one, and the adapted simple system read off the
two distinguished directions, together with the expansion coefficients of
every half-period root in that basis.  A nonzero exit means some closed-form
table disagreed with the direction-by-direction computation.

Usage:
    python3 scripts/reproduce_tables.py            # sizes 4 and 5
    python3 scripts/reproduce_tables.py --sizes 3 12
"""

import argparse
import sys
from math import pi

from ttstokes.roots import (
    order_diagram,
    simple_system_check,
    singular_direction,
    supported_roots,
    table_supported_roots,
)


def census(n1):
    bad = 0
    print(f"== size {n1} ==")
    for ell in range(n1):
        d = singular_direction(n1, ell)
        roots = supported_roots(n1, ell)
        print(f"  ell={ell:<2d} theta/pi = {d.theta / pi:+.4f}"
              f"  roots: " + " ".join(f"({i},{j})" for i, j in roots))
    head = set(table_supported_roots(n1, "head"))
    second = set(table_supported_roots(n1, "second"))
    tail = set(table_supported_roots(n1, "tail"))
    for which, ell, table in (("head", 0, head), ("second", 1, second),
                              ("tail", n1 - 1, tail)):
        if table != set(supported_roots(n1, ell)):
            print(f"  MISMATCH: {which} table != direction ell={ell}")
            bad += 1

    head_part, tail_part = order_diagram(n1).simple_roots()
    cert = simple_system_check(n1, head_part + tail_part)
    print("  adapted simple system:",
          " ".join(f"({i},{j})" for i, j in head_part), "|",
          " ".join(f"({i},{j})" for i, j in tail_part))
    if not cert.ok:
        print(f"  CERTIFICATE FAILED: {cert.reason}")
        bad += 1
    else:
        for root, coeffs in sorted(cert.coefficients.items()):
            print(f"    ({root[0]},{root[1]}) = "
                  + " + ".join(f"{c}*b{k}" for k, c in enumerate(coeffs) if c))
    return bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs=2, type=int, default=[4, 5],
                    metavar=("LO", "HI"), help="inclusive size range")
    ns = ap.parse_args(argv)
    lo, hi = ns.sizes
    bad = 0
    for n1 in range(lo, hi + 1):
        bad += census(n1)
        print()
    if bad:
        print(f"{bad} disagreements")
        return 1
    print("all tables agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
