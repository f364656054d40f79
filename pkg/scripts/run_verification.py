#!/usr/bin/env python3
"""Sweep the value dictionary against the exhaustive solver.

Prints per-depth multiset counts and wall-clock times; depth 4 is the
long run (~5e6 multisets).
"""

import argparse
import sys
import time

from notakto import InferenceConfig, Solver, infer_value_table, verify_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-boards", type=int, choices=(1, 2, 3, 4), default=3)
    args = parser.parse_args()

    solver = Solver()
    t0 = time.perf_counter()
    table = infer_value_table(solver, InferenceConfig())
    print(f"inference: {time.perf_counter() - t0:.1f}s "
          f"({solver.cache_size} solver states)")

    total_bad = 0
    for depth in range(1, args.max_boards + 1):
        report = verify_table(table, solver, depth)
        print(f"depth {depth}: {report.checked} multisets, "
              f"{len(report.mismatches)} mismatches, {report.elapsed:.1f}s")
        total_bad += len(report.mismatches)
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
