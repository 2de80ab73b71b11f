#!/usr/bin/env python3
"""Robustness of each strategy to the value order, from `symbreak bench` CSV.

For every (instance, strategy) the median backtrack count over seeds is taken
for each value order; the ratio max/min (zero counted as one) across the value
orders measures sensitivity. Restarts are judged more robust on an instance
when their ratio is strictly smaller than the static ratio.
"""

import argparse
import csv
import statistics
import sys
from collections import defaultdict


def ratio(a, b):
    a, b = max(a, 1), max(b, 1)
    return max(a, b) / min(a, b)


def load(paths):
    rows = []
    for path in paths:
        with open(path, newline="") as f:
            lines = (line for line in f if not line.startswith("#"))
            rows.extend(csv.DictReader(lines))
    return rows


def summarize(rows):
    counts = defaultdict(list)
    for r in rows:
        counts[(r["instance"], r["strategy"], r["valueOrder"])].append(int(r["backtracks"]))
    medians = {k: statistics.median(v) for k, v in counts.items()}

    table = defaultdict(dict)
    for (instance, strategy, order), m in medians.items():
        table[(instance, strategy)][order] = m
    result = defaultdict(dict)
    for (instance, strategy), by_order in table.items():
        if len(by_order) >= 2:
            values = list(by_order.values())
            result[instance][strategy] = ratio(max(values), min(values))
    return result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv", nargs="+", help="bench CSV files")
    ap.add_argument("--baseline", default="static")
    ap.add_argument("--candidate", default="model-restarts")
    args = ap.parse_args(argv)

    result = summarize(load(args.csv))
    wins = compared = 0
    print(f"{'instance':<28}{args.baseline:>14}{args.candidate:>16}  more robust")
    for instance in sorted(result):
        r = result[instance]
        if args.baseline not in r or args.candidate not in r:
            continue
        compared += 1
        better = r[args.candidate] < r[args.baseline]
        wins += better
        print(f"{instance:<28}{r[args.baseline]:>14.2f}{r[args.candidate]:>16.2f}  {'yes' if better else 'no'}")
    if compared == 0:
        print("no instance has both strategies with two value orders", file=sys.stderr)
        return 2
    print(f"{args.candidate} more robust on {wins}/{compared} instances")
    return 0 if 2 * wins > compared else 1


if __name__ == "__main__":
    sys.exit(main())
