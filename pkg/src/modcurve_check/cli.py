"""Command-line front end: modcurve-check {x13-verify, x37-verify, x37-table}."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .pipelines import x13, x37
from .pipelines.common import Check, CheckResult, SuiteConfig, report_dict, run_checks, summary_counts
from .pipelines.jmap import JMapParseError, bundled_jmap_path, load_jmap
from .pipelines.table import export_table, fmt_quad, generate_table

SUITE_IDS = {
    "x13-verify": x13.CHECK_IDS,
    "x37-verify": x37.CHECK_IDS,
    "x37-table": ["table_points", "table_curves"],
}


@dataclass
class CliConfig:
    subcommand: str
    precision: int = 256
    rng_seed: int = 0
    only: frozenset | None = None
    skip: frozenset = frozenset()
    jmap: str | None = None
    json_path: str | None = None
    out: str | None = None
    fmt: str | None = None
    max_k: int = 15
    verbose: bool = False


def _id_list(text: str) -> frozenset:
    return frozenset(s.strip() for s in text.split(",") if s.strip())


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modcurve-check", description=__doc__)
    sub = ap.add_subparsers(dest="subcommand", required=True)
    for name, help_text in (
        ("x13-verify", "checks for X1(13) over K, the real subfield of Q(zeta_13)"),
        ("x37-verify", "checks for X0(37) and its quadratic points"),
        ("x37-table", "generate the table of quadratic points on X0(37)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--precision", type=_positive, default=256, help="bits for embedding square roots")
        p.add_argument("--rng-seed", type=int, default=0)
        p.add_argument("--only", type=_id_list, default=None, help="comma-separated check ids to run")
        p.add_argument("--skip", type=_id_list, default=frozenset(), help="comma-separated check ids to skip")
        p.add_argument("--json", dest="json_path", help="write the machine report here")
        p.add_argument("-v", "--verbose", action="store_true")
        if name != "x13-verify":
            p.add_argument("--jmap", help="j-map data file ('bundled' for the shipped one)")
            p.add_argument("--max-k", type=_positive, default=15)
        if name == "x37-table":
            p.add_argument("--format", dest="fmt", choices=["csv", "json"])
            p.add_argument("--out")
    return ap


def parse_args(argv=None) -> CliConfig:
    ap = build_parser()
    ns = ap.parse_args(argv)
    cfg = CliConfig(
        subcommand=ns.subcommand,
        precision=ns.precision,
        rng_seed=ns.rng_seed,
        only=ns.only,
        skip=ns.skip,
        jmap=getattr(ns, "jmap", None),
        json_path=ns.json_path,
        out=getattr(ns, "out", None),
        fmt=getattr(ns, "fmt", None),
        max_k=getattr(ns, "max_k", 15),
        verbose=ns.verbose,
    )
    known = set(SUITE_IDS[cfg.subcommand])
    for flag, ids in (("--only", cfg.only or ()), ("--skip", cfg.skip)):
        unknown = sorted(set(ids) - known)
        if unknown:
            ap.error(f"{flag}: unknown check ids {unknown}; known: {sorted(known)}")
    if cfg.only and cfg.only & cfg.skip:
        ap.error(f"checks both selected and skipped: {sorted(cfg.only & cfg.skip)}")
    if cfg.fmt == "csv" and not cfg.out:
        ap.error("--format csv requires --out")
    if cfg.out and not cfg.fmt:
        cfg.fmt = "csv" if str(cfg.out).endswith(".csv") else "json"
    return cfg


def _suite_config(cfg: CliConfig, jmap) -> SuiteConfig:
    return SuiteConfig(
        precision=cfg.precision,
        rng_seed=cfg.rng_seed,
        only=cfg.only,
        skip=cfg.skip,
        jmap=jmap,
        max_k=cfg.max_k,
    )


def _load_jmap(path):
    if path is None:
        return None
    if path == "bundled":
        path = bundled_jmap_path()
    # agreement with the tabulated curves is reported by the table_curves check
    return load_jmap(path, validate=False)


def _print_results(suite: str, results: list[CheckResult], out=None):
    out = out or sys.stdout
    for r in results:
        line = f"{r.status.upper():4}  {r.check_id}"
        if r.status != "skip":
            line += f"  ({r.seconds:.2f}s)"
        print(line, file=out)
        if r.status == "fail":
            print(f"      expected: {r.expected}", file=out)
            print(f"      actual:   {r.actual}", file=out)
    c = summary_counts(results)
    print(f"{suite}: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip", file=out)


def run(cfg: CliConfig) -> int:
    try:
        jmap = _load_jmap(cfg.jmap)
    except (OSError, JMapParseError) as exc:
        print(f"error: cannot load j-map: {exc}", file=sys.stderr)
        return 2
    sc = _suite_config(cfg, jmap)
    if cfg.subcommand == "x13-verify":
        results = x13.run_x1_13(sc)
    elif cfg.subcommand == "x37-verify":
        results = x37.run_x0_37(sc)
    else:
        records = generate_table(cfg.max_k, jmap)
        checks = [
            Check("table_points", lambda: x37.check_table_points(sc)),
            Check("table_curves", lambda: x37.check_table_curves(sc)),
        ]
        results = run_checks(checks, sc)
        try:
            if cfg.out:
                export_table(records, cfg.fmt, cfg.out)
            else:
                for rec in records:
                    print(f"k={rec.k:<3d} D={rec.D:<8d} x={fmt_quad(rec.x)}")
        except OSError as exc:
            print(f"error: cannot write table: {exc}", file=sys.stderr)
            return 2
    _print_results(cfg.subcommand, results)
    if cfg.json_path:
        try:
            with open(cfg.json_path, "w") as fh:
                json.dump(report_dict(cfg.subcommand, results, cfg.rng_seed), fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 2
    return 1 if any(r.status == "fail" for r in results) else 0


def main(argv=None) -> int:
    cfg = parse_args(argv)
    logging.basicConfig(level=logging.INFO if cfg.verbose else logging.WARNING, format="%(message)s")
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
