#!/usr/bin/env python3
"""Search every conjectural statement for counterexamples on its default grid.

Prints one summary line per conjecture and exits 3 if any counterexample
is found (mirroring the CLI convention).  Optionally writes each full
report as JSON into --out-dir.

    python3 scripts/search_conjectures.py
    python3 scripts/search_conjectures.py --jobs 4 --out-dir reports/
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from flecklab.errors import UnknownStatementError
from flecklab.statements import SEARCH_IDS
from flecklab.verifier import DEFAULT_FAILURE_CAP, search_conjecture


@dataclass(frozen=True)
class SearchConfig:
    ids: tuple[str, ...]
    jobs: int
    failure_cap: int
    out_dir: "Path | None"


def parse_config(argv: "list[str] | None" = None) -> SearchConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--ids",
        default=None,
        help=f"comma-separated conjecture ids (default: {', '.join(SEARCH_IDS)})",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes per sweep")
    parser.add_argument(
        "--failure-cap",
        type=int,
        default=DEFAULT_FAILURE_CAP,
        help="maximum counterexamples to record per sweep",
    )
    parser.add_argument(
        "--out-dir", default=None, help="write one <id>.json report per conjecture here"
    )
    args = parser.parse_args(argv)
    ids = tuple(args.ids.split(",")) if args.ids else SEARCH_IDS
    return SearchConfig(
        ids=ids,
        jobs=args.jobs,
        failure_cap=args.failure_cap,
        out_dir=Path(args.out_dir) if args.out_dir else None,
    )


def main(argv: "list[str] | None" = None) -> int:
    cfg = parse_config(argv)
    if cfg.out_dir:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
    refuted: list[str] = []
    for sid in cfg.ids:
        start = time.perf_counter()
        try:
            report = search_conjecture(sid, jobs=cfg.jobs, failure_cap=cfg.failure_cap)
        except UnknownStatementError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        elapsed = time.perf_counter() - start
        print(
            f"{sid:<12} {report.status:<21} checked={report.checked:<8} "
            f"skipped={report.skipped:<8} counterexamples={len(report.failures):<3} "
            f"{elapsed:7.2f}s"
        )
        if cfg.out_dir:
            (cfg.out_dir / f"{sid}.json").write_text(report.to_json() + "\n", encoding="utf-8")
        if not report.passed:
            refuted.append(sid)
            for failure in report.failures[:3]:
                print(f"  counterexample: {failure['params']}", file=sys.stderr)
    if refuted:
        print(f"COUNTEREXAMPLES FOUND: {', '.join(refuted)}", file=sys.stderr)
        return 3
    noun = "conjecture" if len(cfg.ids) == 1 else "conjectures"
    noun = "conjecture" if len(cfg.ids) == 1 else "conjectures"
    print(f"no counterexamples on the default grids of {len(cfg.ids)} {noun}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
