#!/usr/bin/env python3
"""Run every verification suite and write JSON/CSV reports.

Usage:
    python scripts/run_all_suites.py [--n 1000000] [--seed 0] [--out reports]
"""

import argparse
import sys
import time
from pathlib import Path

from stable_hitting.verify import (SUITE_NAMES, all_passed, report_to_csv,
                                   report_to_json, run_suite)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for suite in SUITE_NAMES:
        t0 = time.perf_counter()
        reports = run_suite(suite, seed=args.seed, n_samples=args.n)
        elapsed = time.perf_counter() - t0
        (out / f"{suite}.json").write_text(report_to_json(reports))
        (out / f"{suite}.csv").write_text(report_to_csv(reports))
        n_pass = sum(r.passed for r in reports)
        status = "ok" if all_passed(reports) else "FAIL"
        print(f"{suite:16s} {n_pass:4d}/{len(reports):<4d} checks pass "
              f"[{status}] ({elapsed:.1f}s)")
        ok = ok and all_passed(reports)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
