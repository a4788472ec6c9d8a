#!/usr/bin/env python3
"""Adjudication reports for every pair whose I_r fits in memory, as JSON lines."""

import argparse
import json

from goppacount.errors import HypothesisError
from goppacount.oracle import OracleConfig, adjudicate


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", nargs="+", default=["5:3", "5:4", "5:6", "5:9", "7:3", "7:6", "11:3"])
    ap.add_argument("--burnside", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for pair in args.pairs:
        n, r = (int(v) for v in pair.split(":"))
        try:
            rep = adjudicate(n, r, OracleConfig(workers=args.workers), burnside=args.burnside)
        except HypothesisError as exc:
            rep = {"n": n, "r": r, "error": str(exc)}
        print(json.dumps(rep))


if __name__ == "__main__":
    main()
