"""Check records, suite configuration and report serialisation."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "skip"
    expected: str
    actual: str
    seconds: float = 0.0


@dataclass
class SuiteConfig:
    precision: int = 256
    rng_seed: int = 0
    only: frozenset | None = None
    skip: frozenset = frozenset()
    heavy: bool = True
    # model overrides, used for negative controls
    x13_coeffs: list | None = None
    x37_g: list | None = None
    jmap: object = None
    max_k: int = 15


@dataclass(frozen=True)
class Check:
    check_id: str
    run: object  # callable -> (expected, actual, ok)
    heavy: bool = False


def run_checks(checks: list[Check], config: SuiteConfig) -> list[CheckResult]:
    results = []
    for chk in checks:
        cid = chk.check_id
        if config.only is not None and cid not in config.only:
            results.append(CheckResult(cid, "skip", "", "not selected"))
            continue
        if cid in config.skip:
            results.append(CheckResult(cid, "skip", "", "excluded by --skip"))
            continue
        if chk.heavy and not config.heavy:
            results.append(CheckResult(cid, "skip", "", "heavy checks disabled"))
            continue
        start = time.perf_counter()
        try:
            outcome = chk.run()
        except Exception as exc:  # failures are data
            log.debug("check %s raised", cid, exc_info=True)
            outcome = ("", f"{type(exc).__name__}: {exc}", False)
        elapsed = time.perf_counter() - start
        if outcome is None:
            results.append(CheckResult(cid, "skip", "", "not applicable", elapsed))
            continue
        expected, actual, ok = outcome
        results.append(CheckResult(cid, "pass" if ok else "fail", expected, actual, elapsed))
        log.info("%s: %s (%.2fs)", cid, results[-1].status, elapsed)
    return results


def report_dict(suite: str, results: list[CheckResult], rng_seed: int, timings: bool = True):
    checks = []
    for r in results:
        d = asdict(r)
        if not timings:
            d["seconds"] = 0.0
        checks.append(d)
    return {"suite": suite, "rng_seed": rng_seed, "checks": checks}


def write_report(path, suite: str, results: list[CheckResult], rng_seed: int, timings=True):
    with open(path, "w") as fh:
        json.dump(report_dict(suite, results, rng_seed, timings), fh, indent=2)
        fh.write("\n")


def summary_counts(results) -> dict:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for r in results:
        counts[r.status] += 1
    return counts
