#!/usr/bin/env python3
"""Sweep primes and tabulate minimal privileged coalition counts.

Reproduces the count grid for a threshold and identity bound: one row per
prime, one column per coefficient index, each cell the number of minimal
privileged coalitions aggregated over every valid length.  Handy for
spotting the primes where below-threshold recovery stops existing.

    python scripts/coalition_census.py --t 7 --N 13 --max-p 200
    python scripts/coalition_census.py --t 7 --N 13 --primes 809,5231,31601
"""

import argparse
import sys

from privcoal import CoalitionQuery, PrimeField, is_prime, minimal_privileged_coalitions


def primes_between(lo, hi):
    return [n for n in range(lo, hi + 1) if is_prime(n)]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--t", type=int, default=7)
    parser.add_argument("--N", type=int, default=13)
    parser.add_argument("--max-p", type=int, default=199)
    parser.add_argument("--primes", default=None,
                        help="comma-separated primes (overrides --max-p)")
    parser.add_argument("--shortest", action="store_true",
                        help="also print r_min and the shortest-length count")
    args = parser.parse_args(argv)

    if args.primes:
        primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
    else:
        primes = primes_between(args.t, args.max_p)

    j_range = range(1, args.t - 1)
    header = ["p"] + [f"j={j}" for j in j_range]
    if args.shortest:
        header += [f"r_min(j={j})" for j in j_range]
    print(",".join(header))
    for p in primes:
        field = PrimeField(p)
        counts, shortest = [], []
        for j in j_range:
            report = minimal_privileged_coalitions(
                CoalitionQuery(t=args.t, j=j, field=field, n_max=args.N)
            )
            counts.append(str(report.count))
            shortest.append("" if report.r_min is None else f"{report.r_min}/{report.n_min}")
        row = [str(p)] + counts + (shortest if args.shortest else [])
        print(",".join(row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
