"""Command-line entry point.

Exit codes: 0 pass, 1 printed closed form disagrees with brute force (or a
census consistency flag fired under --strict), 2 usage, 3 capacity,
4 internal failure (a structural law or corrected formula broke).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .census import CensusReport, corollary_formulas, hypothesis_flags, number_to_json, orbit_count_total
from .errors import CapacityError, ConsistencyError, HypothesisError, StructuralLawError
from .gf2 import field_new
from .goppa import GoppaSpecError, equivalence_invariant_check, goppa_report, goppa_spec
from .oracle import PGAML, PGL, DEFAULT_MAX_ITEMS, OracleConfig, adjudicate, enumerate_orbits
from .pgl import conjugacy_table_rows
from .polyring import DEFAULT_MEM_CAP, Poly, iter_irreducible

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    n: tuple[int, ...]
    r: tuple[int, ...] = ()
    format: str = "json"
    heavy: bool = False
    workers: int = 1
    seed: int = 0
    force_hypotheses: bool = False
    strict: bool = False
    mem_cap: int = DEFAULT_MEM_CAP
    max_items: int = DEFAULT_MAX_ITEMS
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("--workers must be at least 1")
        if any(v < 1 for v in self.n):
            raise ValueError("n must be at least 1")
        if any(v < 3 for v in self.r):
            raise ValueError("r must be at least 3")

    @property
    def oracle(self) -> OracleConfig:
        return OracleConfig(self.workers, self.heavy, self.max_items, self.mem_cap)


def int_list(text: str) -> tuple[int, ...]:
    """Parse '5', '3,4,6' or '3-20' (ranges inclusive, may be mixed)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            a, b = int(lo), int(hi)
            if a > b:
                raise argparse.ArgumentTypeError(f"empty range {part}")
            out.extend(range(a, b + 1))
        else:
            out.append(int(part))
    return tuple(out)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _single_or_list(items: list):
    return items[0] if len(items) == 1 else items


# ---------------------------------------------------------------------------
# Subcommands


def _pairs(cfg: RunConfig) -> list[tuple[int, int]]:
    """All (n, r) pairs; in a sweep, pairs violating the hypotheses are dropped."""
    pairs = [(n, r) for n in cfg.n for r in cfg.r]
    if len(pairs) == 1 or cfg.force_hypotheses:
        return pairs
    kept = [(n, r) for n, r in pairs if all(hypothesis_flags(n, r).values())]
    skipped = len(pairs) - len(kept)
    if skipped:
        print(f"skipped {skipped} pair(s) outside the hypotheses", file=sys.stderr)
    if not kept:
        raise HypothesisError("no (n, r) pair satisfies the hypotheses")
    return kept


def cmd_census(cfg: RunConfig, out) -> int:
    reports: list[CensusReport] = [
        orbit_count_total(n, r, force_hypotheses=cfg.force_hypotheses) for n, r in _pairs(cfg)
    ]
    if cfg.format == "csv":
        out.write(_csv(CensusReport.CSV_FIELDS, [rep.csv_row() for rep in reports]))
    else:
        items = []
        for rep in reports:
            d = rep.to_dict()
            d["corollaries"] = [[name, number_to_json(v)] for name, v in corollary_formulas(rep.n, rep.r)]
            items.append(d)
        out.write(_dump(_single_or_list(items)))
    if cfg.strict and not all(rep.consistent for rep in reports):
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    burnside = cfg.extra.get("burnside", False)
    reports = [
        adjudicate(n, r, cfg.oracle, force_hypotheses=cfg.force_hypotheses, burnside=burnside)
        for n, r in _pairs(cfg)
    ]
    if cfg.format == "csv":
        header = ["n", "r", "quantity", "paper_formula", "corrected_formula", "oracle", "paper_matches_oracle"]
        rows = [
            [rep["n"], rep["r"], c["quantity"], c["paper_formula"], c["corrected_formula"], c["oracle"],
             c["paper_matches_oracle"]]
            for rep in reports
            for c in rep["comparisons"]
        ]
        out.write(_csv(header, rows))
    else:
        out.write(_dump(_single_or_list(reports)))
    return EXIT_OK if all(rep["status"] == "PASS" for rep in reports) else EXIT_DISCREPANCY


def cmd_conjugacy(cfg: RunConfig, out) -> int:
    tables = []
    for n in cfg.n:
        rows = conjugacy_table_rows(field_new(n))
        q = 2**n
        tables.append(
            {
                "n": n,
                "q": q,
                "class_count": len(rows),
                "total": sum(row["size"] for row in rows),
                "group_order": q * (q * q - 1),
                "classes": rows,
            }
        )
    if cfg.format == "csv":
        header = ["n", "family", "representative", "size", "order"]
        out.write(
            _csv(header, [[t["n"], *row.values()] for t in tables for row in t["classes"]])
        )
    else:
        out.write(_dump(_single_or_list(tables)))
    bad = [t for t in tables if t["total"] != t["group_order"]]
    return EXIT_INTERNAL if bad else EXIT_OK


def cmd_oracle_orbits(cfg: RunConfig, out) -> int:
    group = cfg.extra.get("group", PGAML)
    results = []
    for n in cfg.n:
        for r in cfg.r:
            part = enumerate_orbits(group, n, r, cfg.oracle)
            results.append((n, r, part))
    if cfg.format == "csv":
        rows = []
        for n, r, part in results:
            ctx = field_new(n)
            rows.extend([n, r, *row] for row in part.csv_rows(ctx))
        out.write(_csv(["n", "r", "representative", "size", "divisor_flag"], rows))
    else:
        items = []
        for n, r, part in results:
            ctx = field_new(n)
            items.append(
                {
                    "group": part.group,
                    "n": n,
                    "r": r,
                    "orbit_count": part.count,
                    "orbits": [
                        {"representative": rep, "size": size, "divisor_flag": flag}
                        for rep, size, flag in part.csv_rows(ctx)
                    ],
                }
            )
        out.write(_dump(_single_or_list(items)))
    return EXIT_OK


def cmd_goppa(cfg: RunConfig, out) -> int:
    if len(cfg.n) != 1 or len(cfg.r) != 1:
        raise ValueError("goppa takes a single --n and --r")
    n, r = cfg.n[0], cfg.r[0]
    ctx = field_new(n)
    text = cfg.extra.get("g")
    g = Poly.parse(ctx, text) if text else next(iter(iter_irreducible(ctx, r)))
    if g.degree != r:
        raise ValueError(f"--g has degree {g.degree}, expected {r}")
    cap = cfg.extra.get("weight_cap", 24)
    report = goppa_report(goppa_spec(g), cfg.extra.get("extended", False), cfg.extra.get("weights", False), cap)
    trials = cfg.extra.get("invariance_trials", 0)
    status = EXIT_OK
    if trials:
        check = equivalence_invariant_check(n, r, trials, cfg.seed, cap)
        report["invariance"] = {
            "trials": trials,
            "seed": cfg.seed,
            "all_equal": check["all_equal"],
            "transports": [
                {k: t[k] for k in ("alpha", "matrix", "frobenius", "beta", "equal")} for t in check["trials"]
            ],
        }
        if not check["all_equal"]:
            status = EXIT_INTERNAL
    out.write(_dump(report))
    return status


COMMANDS = {
    "census": cmd_census,
    "verify": cmd_verify,
    "conjugacy": cmd_conjugacy,
    "oracle-orbits": cmd_oracle_orbits,
    "goppa": cmd_goppa,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goppacount", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, need_r=True):
        sp.add_argument("--n", type=int_list, required=True, help="extension degree(s) of GF(2^n)")
        if need_r:
            sp.add_argument("--r", type=int_list, required=True, help="polynomial degree(s), e.g. 4 or 3-20")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=int, default=1, help="threads for orbit closure")

    def capacity(sp):
        sp.add_argument("--heavy", action="store_true", help="allow tables above the default size limit")
        sp.add_argument("--mem-cap", type=int, default=DEFAULT_MEM_CAP, help="bytes")
        sp.add_argument("--max-items", type=int, default=DEFAULT_MAX_ITEMS)

    s = sub.add_parser("census", help="closed-form orbit counts")
    common(s)
    s.add_argument("--force-hypotheses", action="store_true")
    s.add_argument("--strict", action="store_true", help="exit 1 when a consistency flag fires")

    s = sub.add_parser("verify", help="closed forms against brute force")
    common(s)
    capacity(s)
    s.add_argument("--force-hypotheses", action="store_true")
    s.add_argument("--burnside", action="store_true", help="also sum fixed points over all of PGL")

    s = sub.add_parser("conjugacy", help="conjugacy classes of PGL(2, 2^n)")
    common(s, need_r=False)

    s = sub.add_parser("oracle-orbits", help="orbit partition of I_r")
    common(s)
    capacity(s)
    s.add_argument("--group", choices=(PGL, PGAML), default=PGAML)

    s = sub.add_parser("goppa", help="build an irreducible binary Goppa code")
    common(s)
    s.add_argument("--g", help="Goppa polynomial as c0,c1,...,cr (default: least member of I_r)")
    s.add_argument("--extended", action="store_true")
    s.add_argument("--weights", action="store_true")
    s.add_argument("--weight-cap", type=int, default=24)
    s.add_argument("--invariance-trials", type=int, default=0)
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    extra = {
        k: getattr(args, k)
        for k in ("burnside", "group", "g", "extended", "weights", "weight_cap", "invariance_trials")
        if hasattr(args, k)
    }
    return RunConfig(
        subcommand=args.subcommand,
        n=args.n,
        r=getattr(args, "r", ()),
        format=args.format,
        heavy=getattr(args, "heavy", False),
        workers=args.workers,
        seed=args.seed,
        force_hypotheses=getattr(args, "force_hypotheses", False),
        strict=getattr(args, "strict", False),
        mem_cap=getattr(args, "mem_cap", DEFAULT_MEM_CAP),
        max_items=getattr(args, "max_items", DEFAULT_MAX_ITEMS),
        extra=extra,
    )


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.subcommand](cfg, out)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (StructuralLawError, ConsistencyError) as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HypothesisError, GoppaSpecError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
