#!/usr/bin/env python
"""Regenerate results/ratio_sweep_q3_d4_w3.csv (code size vs. bound as n grows)."""
from __future__ import annotations

import argparse
from pathlib import Path

from cwcodes.experiments import sweep, write_rows

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=[10, 20, 40, 60])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--restarts", type=int, default=64)
    ap.add_argument("--out", type=Path, default=ROOT / "results" / "ratio_sweep_q3_d4_w3.csv")
    args = ap.parse_args()

    rows = sweep(3, 4, 3, args.ns, args.seed, args.restarts)
    for r in rows:
        print(f"n={r.n:3d} |X|={r.x_size:6d} code={r.code_size:5d} floor={r.johnson_floor:5d} ratio={r.ratio}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    write_rows(rows, args.out)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
