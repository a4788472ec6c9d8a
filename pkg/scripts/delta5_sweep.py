#!/usr/bin/env python3
"""Printed |Delta5| against the definitional count and brute force, for 3 | r.

Brute force classifies X directly (elements of GF(2^r)), so it is cheap up
to r = 18 or so. Output is CSV on stdout.
"""

import argparse
import csv
import sys
from math import gcd

from goppacount.census import count_delta5, delta5_definitional, orbit_count_total
from goppacount.oracle import count_A5_fixed_f2_bruteforce, count_delta5_bruteforce, sigma_fixed_orbit_count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 7, 11, 13])
    ap.add_argument("--r-max", type=int, default=18)
    ap.add_argument("--brute-max", type=int, default=15, help="largest r for brute-force columns")
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(
        ["n", "r", "delta5_printed", "delta5_definitional", "delta5_brute", "a5_fixed_binary_brute",
         "s0_printed", "s0_corrected", "s0_brute", "consistent"]
    )
    for n in args.n:
        for r in range(3, args.r_max + 1, 3):
            if gcd(n, r) != 1:
                continue
            rep = orbit_count_total(n, r)
            brute = r <= args.brute_max
            w.writerow(
                [
                    n, r, count_delta5(r), delta5_definitional(r),
                    count_delta5_bruteforce(n, r) if brute else "",
                    count_A5_fixed_f2_bruteforce(r) if brute else "",
                    rep.s0, rep.s0_corrected,
                    sigma_fixed_orbit_count(n, r) if brute else "",
                    rep.consistent,
                ]
            )


if __name__ == "__main__":
    main()
