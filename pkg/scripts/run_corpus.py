#!/usr/bin/env python3
"""Run the full theorem suite over the curated carrier corpus.

Prints one line per ring with pass/fail/skip counts and exits nonzero if
any theorem fails on a carrier whose hypotheses were satisfied.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import combinations_with_replacement

import starorder as so


def is_squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def curated_rings(limit: int):
    for n in range(1, limit + 1):
        if is_squarefree(n):
            yield so.build_modular(n)
    for k in (1, 2, 3):
        for combo in combinations_with_replacement((2, 3, 5), k):
            yield so.build_product([so.build_modular(p) for p in combo])
    yield so.build_matrix(so.build_modular(2), 2)
    yield so.build_matrix(so.build_modular(3), 2)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=30, help="modular family bound")
    args = parser.parse_args()

    red_alerts = 0
    t0 = time.time()
    for ring in curated_rings(args.limit):
        verdicts = so.run_suite(ring)
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for v in verdicts:
            counts[v.status] += 1
            if v.status == "fail" and v.hypothesis_met:
                red_alerts += 1
                print(f"  RED ALERT {ring.label}: {v.theorem} witness={v.witness}")
        print(
            f"{ring.label:<18} order={ring.order:<4} "
            f"pass={counts['pass']:<3} fail={counts['fail']:<2} "
            f"skipped={counts['skipped']}"
        )
    print(f"done in {time.time() - t0:.1f}s, red alerts: {red_alerts}")
    return 1 if red_alerts else 0


if __name__ == "__main__":
    sys.exit(main())
