#!/usr/bin/env python3
"""Sweep every proven statement in the catalog over its default grid.

Prints one summary line per statement and exits nonzero if any sweep
fails.  Optionally writes each full report as JSON into --out-dir.

    python3 scripts/run_theorem_suite.py
    python3 scripts/run_theorem_suite.py --jobs 4 --out-dir reports/
    python3 scripts/run_theorem_suite.py --ids T1.1,T2.1
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from flecklab.errors import UnknownStatementError
from flecklab.statements import STATEMENTS
from flecklab.verifier import DEFAULT_FAILURE_CAP, run_statement

THEOREM_IDS = tuple(sid for sid, st in STATEMENTS.items() if st.kind == "theorem")


@dataclass(frozen=True)
class SuiteConfig:
    ids: tuple[str, ...]
    jobs: int
    failure_cap: int
    out_dir: "Path | None"


def parse_config(argv: "list[str] | None" = None) -> SuiteConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--ids",
        default=None,
        help=f"comma-separated statement ids (default: all {len(THEOREM_IDS)} proven ones)",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes per sweep")
    parser.add_argument(
        "--failure-cap",
        type=int,
        default=DEFAULT_FAILURE_CAP,
        help="maximum failures to record per sweep",
    )
    parser.add_argument(
        "--out-dir", default=None, help="write one <id>.json report per statement here"
    )
    args = parser.parse_args(argv)
    ids = tuple(args.ids.split(",")) if args.ids else THEOREM_IDS
    return SuiteConfig(
        ids=ids,
        jobs=args.jobs,
        failure_cap=args.failure_cap,
        out_dir=Path(args.out_dir) if args.out_dir else None,
    )


def main(argv: "list[str] | None" = None) -> int:
    cfg = parse_config(argv)
    if cfg.out_dir:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
    failed: list[str] = []
    for sid in cfg.ids:
        start = time.perf_counter()
        try:
            report = run_statement(sid, jobs=cfg.jobs, failure_cap=cfg.failure_cap)
        except UnknownStatementError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        elapsed = time.perf_counter() - start
        print(
            f"{sid:<12} {report.status:<8} checked={report.checked:<8} "
            f"skipped={report.skipped:<8} failures={len(report.failures):<3} "
            f"{elapsed:7.2f}s"
        )
        if cfg.out_dir:
            (cfg.out_dir / f"{sid}.json").write_text(report.to_json() + "\n", encoding="utf-8")
        if not report.passed:
            failed.append(sid)
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=sys.stderr)
        return 1
    noun = "statement" if len(cfg.ids) == 1 else "statements"
    print(f"all {len(cfg.ids)} {noun} verified")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
