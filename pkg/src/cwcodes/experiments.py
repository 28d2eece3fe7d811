"""Sweep rows: construction size against the bound as n grows."""
from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from .bounds import johnson_bound
from .core import CodeParams
from .matching import BuildReport, construct_code, construct_code_odd

SWEEP_HEADER = "n,q,d,w,t,x_size,code_size,johnson_floor,main_term,ratio,seed,restarts,elapsed_ms"


def format_ratio(value: Fraction, digits: int = 6) -> str:
    """Fixed-point decimal, rounded half-to-even at ``digits`` places."""
    scaled = round(value * 10**digits)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass
class SweepRow:
    n: int
    q: int
    d: int
    w: int
    t: int
    x_size: int
    code_size: int
    johnson_floor: int
    main_term: str
    ratio: str
    seed: int
    restarts: int
    elapsed_ms: int

    @classmethod
    def from_report(cls, p: CodeParams, report: BuildReport, seed: int) -> "SweepRow":
        # for odd d the bound column and ratio use the odd Johnson bound
        bound = johnson_bound(p)
        return cls(
            p.n, p.q, p.d, p.w, p.t, report.x_size, len(report.code), bound.floor_value,
            f"{bound.numerator}/{bound.denominator}",
            format_ratio(Fraction(len(report.code)) / bound.fraction),
            seed, report.restarts_run, int(round(report.elapsed * 1000)),
        )

    @classmethod
    def from_strings(cls, rec: dict) -> "SweepRow":
        kw = {}
        for f in fields(cls):
            kw[f.name] = rec[f.name] if f.name in ("main_term", "ratio") else int(rec[f.name])
        return cls(**kw)


def build(p: CodeParams, seed: int, restarts: int = 32, improve: bool = False, threads: int = 1) -> BuildReport:
    if p.even:
        return construct_code(p, seed, restarts, improve, threads)
    return construct_code_odd(p, seed, restarts, improve, threads)


def sweep(q: int, d: int, w: int, ns: Iterable[int], seed: int, restarts: int = 32, threads: int = 1) -> list[SweepRow]:
    rows = []
    for n in ns:
        p = CodeParams(q, n, d, w)
        rows.append(SweepRow.from_report(p, build(p, seed, restarts, threads=threads), seed))
    return rows


def dumps_rows(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    buf.write(SWEEP_HEADER + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(astuple(row))
    return buf.getvalue()


def write_rows(rows: Iterable[SweepRow], path: Union[str, Path]) -> None:
    Path(path).write_bytes(dumps_rows(rows).encode("utf-8"))


def read_rows(path: Union[str, Path]) -> list[SweepRow]:
    text = Path(path).read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO(text))
    if ",".join(reader.fieldnames or []) != SWEEP_HEADER:
        raise ValueError("unexpected sweep CSV header")
    return [SweepRow.from_strings(rec) for rec in reader]


def compliance_grid(max_words: int = 5000) -> list[CodeParams]:
    """q in {2,3,4}, w <= 4, 2 <= d <= 2w, w <= n <= 8, at most ``max_words`` weight-w words."""
    from .oracle import count_words

    out = []
    for q in (2, 3, 4):
        for w in range(1, 5):
            for d in range(2, 2 * w + 1):
                for n in range(w, 9):
                    p = CodeParams(q, n, d, w)
                    if count_words(p) <= max_words:
                        out.append(p)
    return out
