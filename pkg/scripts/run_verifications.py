#!/usr/bin/env python3
"""Run every verification suite over a range of degrees and print a table.

Degrees 2..5 run in seconds; pass --long to include n = 6 (the KL table is
warmed once and shared, and written to --cache-dir when given).
"""

import argparse
import sys

from rscells.kl import KLTable
from rscells.verify import SUITES, run_suite

# crystal suites enumerate r**n words; keep them to the documented bounds
SUITE_MAX_N = {"crystal-djm": 5}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--long", action="store_true", help="include n = 6")
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args()

    top = 6 if args.long else min(args.max_n, 5)
    failures = 0
    for n in range(2, top + 1):
        table = KLTable(n, cache_dir=args.cache_dir)
        table.warm()
        if args.cache_dir:
            table.save()
        for name in sorted(SUITES):
            if n > SUITE_MAX_N.get(name, 6):
                continue
            report = run_suite(name, n, table)
            status = "PASS" if report.ok else "FAIL"
            extra = " ".join(f"{k}={v}" for k, v in sorted(report.info.items()))
            print(
                f"n={n} {name:<18} cases={report.cases:<7} {status}"
                f" ({report.wall_time:.2f}s) {extra}"
            )
            if not report.ok:
                failures += 1
                for line in report.violations[:5]:
                    print(f"    {line}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
