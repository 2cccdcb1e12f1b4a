#!/usr/bin/env python3
"""Deep fuzz run: structural families plus seeded random tables.

Writes the full FuzzReport as JSON and prints a one-line summary. The
default configuration matches the widest corpus the test suite pins:
structural families to order 64 plus 1000 random tables of order <= 8.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import starorder as so


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--max-order", type=int, default=64)
    parser.add_argument("--random-tables", type=int, default=1000)
    parser.add_argument("--out", default=None, help="write the JSON report here")
    args = parser.parse_args()

    structural = len(
        so.structural_specs(
            so.FuzzConfig(args.max_order, ("matrix", "modular", "product"), args.seed, 1)
        )
    )
    config = so.FuzzConfig(
        args.max_order,
        ("matrix", "modular", "product", "random-table"),
        args.seed,
        structural + args.random_tables,
    )
    t0 = time.time()
    report = so.fuzz(config)
    payload = json.dumps(report.to_json_dict(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    counts = report.verdict_counts
    print(
        f"# rings={report.rings_checked} pass={counts['pass']} "
        f"fail={counts['fail']} skipped={counts['skipped']} "
        f"red_alerts={len(report.red_alerts)} elapsed={time.time() - t0:.1f}s",
        file=sys.stderr,
    )
    return 1 if report.red_alerts else 0


if __name__ == "__main__":
    sys.exit(main())
