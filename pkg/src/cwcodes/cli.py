"""Command-line entry point: ``cwcodes <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .bounds import johnson_bound
from .constraints import sample_B, write_b
from .core import CodeParams, FormatError, read_code, verify_code, write_code
from .degrees import (
    DegreeReport,
    degree_census,
    degree_concentration_mc,
    degree_exact_report,
    tuple_panel,
)
from .experiments import SweepRow, build, sweep, write_rows
from .oracle import DEFAULT_NODE_LIMIT, max_code_exact

DEGREE_HEADER = "n,q,d,w,t,mode,samples,expected,obs_min,obs_mean,obs_max,stderr,seed"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _add_params(sp: argparse.ArgumentParser) -> None:
    for flag in ("--q", "--n", "--d", "--w"):
        sp.add_argument(flag, type=int, required=True)


def _params(args) -> CodeParams:
    return CodeParams(args.q, args.n, args.d, args.w)


def _frac(f) -> str:
    return "" if f is None else f"{f.numerator}/{f.denominator}"


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cwcodes", description="Constant-weight codes: bounds, construction, verification.")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for restarts")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("bound", help="Johnson-type upper bound")
    _add_params(sp)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("oracle", help="exact A_q(n,d,w) by clique search")
    _add_params(sp)
    sp.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--out")

    sp = sub.add_parser("construct", help="randomized matching construction")
    _add_params(sp)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--restarts", type=int, default=32)
    sp.add_argument("--improve", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--emit-b")

    sp = sub.add_parser("verify", help="check a code file")
    sp.add_argument("--file", required=True)

    sp = sub.add_parser("degrees", help="V2 degree statistics")
    _add_params(sp)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--samples", type=int, default=0)
    sp.add_argument("--exact", action="store_true")

    sp = sub.add_parser("sweep", help="construction ratio over a range of n")
    for flag in ("--q", "--d", "--w", "--n-start", "--n-end", "--n-step", "--seed"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--restarts", type=int, default=32)
    sp.add_argument("--csv", required=True)
    return parser


def _cmd_bound(args) -> int:
    p = _params(args)
    b = johnson_bound(p)
    parity = "even" if p.even else "odd"
    if args.json:
        print(json.dumps({"floor": b.floor_value, "numerator": b.numerator, "denominator": b.denominator, "t": p.t, "parity": parity}))
    else:
        print(f"{b} t={p.t} parity={parity}")
    return 0


def _cmd_oracle(args) -> int:
    res = max_code_exact(_params(args), node_limit=args.max_nodes)
    print(f"A={res.value} exact={str(res.exhausted).lower()} nodes={res.nodes_explored}")
    if args.out:
        write_code(res.witness, args.out)
    return 0


def _cmd_construct(args) -> int:
    p = _params(args)
    report = build(p, args.seed, args.restarts, args.improve, args.threads)
    if args.out:
        write_code(report.code, args.out)
    if args.emit_b:
        if report.b is None:
            raise ValueError("--emit-b needs even d (odd d uses no B assignment)")
        write_b(report.b, args.emit_b)
    row = SweepRow.from_report(p, report, args.seed)
    print(f"size={row.code_size} x_size={row.x_size} johnson_floor={row.johnson_floor} "
          f"ratio={row.ratio} best_restart={report.best_restart}")
    print(f"elapsed_ms={row.elapsed_ms}", file=sys.stderr)
    return 0 if verify_code(report.code).passed else 1


def _cmd_verify(args) -> int:
    try:
        code = read_code(args.file)
    except (OSError, FormatError) as e:
        print(f"FAIL\n{e}")
        return 1
    rep = verify_code(code)
    if rep.passed:
        print("PASS")
        return 0
    print(f"FAIL\n{rep.witness}")
    return 1


def _degree_line(r: DegreeReport, seed: int) -> str:
    p = r.params
    se = "" if r.stderr is None else f"{r.stderr:.6f}"
    return ",".join(map(str, (
        p.n, p.q, p.d, p.w, p.t, r.mode, r.samples, _frac(r.expected),
        _frac(r.observed_min), _frac(r.observed_mean), _frac(r.observed_max), se, seed,
    )))


def _cmd_degrees(args) -> int:
    p = _params(args)
    reports = []
    if args.exact:
        reports.append(degree_exact_report(p, tuple_panel(p, args.seed, k=2)[:2]))
    if args.samples > 0:
        reports.append(degree_concentration_mc(p, args.samples, args.seed))
    if not reports:
        reports.append(degree_census(p, sample_B(p, args.seed)))
    print(DEGREE_HEADER)
    for r in reports:
        print(_degree_line(r, args.seed))
    return 0


def _cmd_sweep(args) -> int:
    if args.n_step <= 0:
        raise ValueError("--n-step must be positive")
    ns = range(args.n_start, args.n_end + 1, args.n_step)
    rows = sweep(args.q, args.d, args.w, ns, args.seed, args.restarts, args.threads)
    write_rows(rows, args.csv)
    for row in rows:
        print(f"n={row.n} code_size={row.code_size} johnson_floor={row.johnson_floor} ratio={row.ratio}")
    return 0 if all(r.code_size <= r.johnson_floor for r in rows) else 1


COMMANDS = {
    "bound": _cmd_bound,
    "oracle": _cmd_oracle,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "degrees": _cmd_degrees,
    "sweep": _cmd_sweep,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        print(f"cwcodes: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
