#!/usr/bin/env python3
"""Sweep the banded numberings across n for a fixed beta = b/n and
report bandwidth/n^k against the asymptotic coefficient bracket.

Examples:
    python3 scripts/asymptotic_sweep.py --beta 9/20 --k 2 --n 40,80,160,320
    python3 scripts/asymptotic_sweep.py --beta 7/20 --k 2 --n 80,160 --csv out.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

from bandgraph.bounds import asymptotic_coefficient_interval, beta_decomposition
from bandgraph.core_graph import Params
from bandgraph.numbering import (
    bandwidth_of_numbering,
    high_remainder_numbering,
    low_remainder_numbering,
)


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", required=True, help="target b/n as a fraction, e.g. 9/20")
    ap.add_argument("--k", type=int, default=2, help="subset size (default 2)")
    ap.add_argument(
        "--n",
        default="40,80,160,320",
        help="comma-separated n values; each must make beta*n an integer",
    )
    ap.add_argument("--csv", default=None, help="write rows to this CSV file")
    return ap.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    beta = Fraction(args.beta)
    dec = beta_decomposition(beta)
    build = low_remainder_numbering if dec.regime == "low" else high_remainder_numbering
    lower, upper = asymptotic_coefficient_interval(beta, args.k)

    print(f"beta = {beta} (q = {dec.q}, r = {dec.r}, {dec.regime} remainder)")
    print(f"coefficient bracket: [{lower} ~ {float(lower):.8f}, {upper} ~ {float(upper):.8f}]")

    rows = []
    for tok in args.n.split(","):
        n = int(tok)
        b = beta * n
        if b.denominator != 1:
            print(f"  n = {n}: beta*n = {b} not integral, skipped", file=sys.stderr)
            continue
        p = Params(n=n, k=args.k, b=int(b))
        bw = bandwidth_of_numbering(build(p))
        ratio = Fraction(bw, n**args.k)
        gap = float(ratio - upper)
        rows.append((n, int(b), bw, float(ratio), gap))
        print(
            f"  n = {n:6d}  b = {int(b):5d}  bandwidth = {bw:10d}"
            f"  ratio = {float(ratio):.8f}  ratio - upper = {gap:+.2e}"
        )

    if args.csv:
        with open(args.csv, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["n", "b", "bandwidth", "ratio", "ratio_minus_upper"])
            w.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
