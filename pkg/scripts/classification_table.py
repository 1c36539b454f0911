#!/usr/bin/env python3
"""Print the full orbit-classification tables for n = 1..7.

For each vertex count: one line per distinct (norm, CMF) value with its
class frequency, for j = 3 (published integer-exponent convention) and
j = 4, plus the per-n averages.  Takes a couple of minutes at n = 7.
"""

import argparse
import time

from twograph.orbits import table1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--j", type=float, nargs="+", default=[3.0, 4.0])
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        for j in args.j:
            t0 = time.perf_counter()
            t = table1(n, j)
            dt = time.perf_counter() - t0
            print(f"n={n} j={j:g} classes={t['classes']}  [{dt:.1f}s]")
            for row in t["rows"]:
                cmf = "" if row["cmf"] is None else f"  cmf={row['cmf']:.6f}"
                print(f"  {row['norm']:.6f}{cmf}  x{row['frequency']}")
            print(f"  average {t['average']:.6f}")
        print()


if __name__ == "__main__":
    main()
