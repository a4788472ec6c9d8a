#!/usr/bin/env python3
"""Where the diagonal-class term matters: printed N2, class-sum N2 and Burnside.

All pairs here need forced hypotheses: for the usual grid (n in 5, 7, 11, 13
and r <= 20) gcd(r, q - 1) = 1, so the diagonal term vanishes there.
"""

import json

from goppacount.census import orbit_count_total
from goppacount.oracle import burnside_count


def main() -> None:
    rows = []
    for n, r in ((2, 3), (3, 7), (2, 6)):
        rep = orbit_count_total(n, r, force_hypotheses=True)
        rows.append(
            {
                "n": n,
                "r": r,
                "N2_printed": str(rep.N2),
                "N2_classsum": str(rep.N2_classsum),
                "pgl_orbits_printed": str(rep.pgl_orbits),
                "pgl_orbits_classsum": str(rep.pgl_orbits_corrected),
                "burnside": burnside_count(n, r),
            }
        )
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
