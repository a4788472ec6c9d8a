#!/usr/bin/env python3
"""Census CSV over a grid of (n, r) satisfying the hypotheses."""

import argparse
import csv
import sys
from math import gcd

from goppacount.census import CensusReport, orbit_count_total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[5, 7, 11, 13])
    ap.add_argument("--r-min", type=int, default=3)
    ap.add_argument("--r-max", type=int, default=20)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(CensusReport.CSV_FIELDS)
    for n in args.n:
        for r in range(args.r_min, args.r_max + 1):
            if gcd(n, r) == 1:
                w.writerow(orbit_count_total(n, r).csv_row())


if __name__ == "__main__":
    main()
