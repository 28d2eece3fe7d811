#!/usr/bin/env python
"""Spread of V2 degrees across random B as n grows, at fixed (q, d, w)."""
from __future__ import annotations

import argparse
import statistics

from cwcodes.constraints import sample_B
from cwcodes.core import CodeParams
from cwcodes.degrees import expected_degree, paper_degree
from cwcodes.matching import derive_seed

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--q", type=int, default=3)
ap.add_argument("--d", type=int, default=4)
ap.add_argument("--w", type=int, default=3)
ap.add_argument("--ns", type=int, nargs="+", default=[8, 12, 16, 24, 32])
ap.add_argument("--samples", type=int, default=500)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

print("n,expected,mean,stdev,rel_spread")
for n in args.ns:
    p = CodeParams(args.q, n, args.d, args.w)
    v = tuple((i, 1) for i in range(1, p.t + 1))
    ds = [paper_degree(v, sample_B(p, derive_seed(args.seed, s))) for s in range(args.samples)]
    mean, sd = statistics.mean(ds), statistics.pstdev(ds)
    print(f"{n},{expected_degree(p)},{mean:.4f},{sd:.4f},{sd / mean:.4f}")
