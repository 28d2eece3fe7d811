"""Degrees of V2-type vertices in the conflict hypergraph.

For a tuple v = {(i_1, x_1), ..., (i_t, x_t)} the degree D(v) counts the
words that contain v and satisfy every constraint except possibly the one
on v's own index set. The formula

    E[D] = (q-1)^(w - t - C(w,t) + 1) * C(n-t, w-t)

is checked here exactly (averaging over every B) and by Monte Carlo.
"""
from __future__ import annotations

import random
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Optional, Sequence

from .constraints import BAssignment, CandidateFamily, residue, sample_B, t_subsets, words_on_support
from .core import CodeParams
from .matching import derive_seed, v1_keys, v2_keys

Tuple = tuple[tuple[int, int], ...]

MODES = ("exact-over-B", "fixed-B-census", "monte-carlo")


@dataclass
class DegreeReport:
    params: CodeParams
    expected: Fraction
    observed_min: Optional[Fraction]
    observed_mean: Optional[Fraction]
    observed_max: Optional[Fraction]
    samples: int
    mode: str
    stderr: Optional[float] = None
    seed: Optional[int] = None
    v1_degrees: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


def expected_degree(p: CodeParams) -> Fraction:
    if not p.even:
        raise ValueError(f"expected degree formula is for even d, got d={p.d}")
    t = p.t
    exp = p.w - t - comb(p.w, t) + 1
    return Fraction(p.q - 1) ** exp * comb(p.n - t, p.w - t)


def tuple_degree(v: Sequence[tuple[int, int]], X: CandidateFamily) -> int:
    """Number of words in X that contain every (index, value) pair of v."""
    v = tuple(sorted(v))
    return sum(1 for x in X if all(x[i - 1] == a for i, a in v))


def _degree_by_support(v: Tuple, b: BAssignment) -> int:
    """tuple_degree over the supports containing v, without building all of X."""
    p = b.params
    idx = tuple(i for i, _ in v)
    rest = [i for i in range(1, p.n + 1) if i not in idx]
    total = 0
    for extra in combinations(rest, p.w - p.t):
        S = tuple(sorted(idx + extra))
        total += sum(1 for x in words_on_support(S, b) if all(x[i - 1] == a for i, a in v))
    return total


def paper_degree(v: Sequence[tuple[int, int]], b: BAssignment) -> int:
    """D(v): degree of v once B on v's own index set is set to make v consistent."""
    p = b.params
    v = tuple(sorted(v))
    T = tuple(i for i, _ in v)
    own = sum(a for _, a in v)
    if b.residue(T) != residue(own, p.q):
        b = b.with_value(T, (own - 1) % (p.q - 1) + 1)
    return _degree_by_support(v, b)


def all_tuples(p: CodeParams) -> list[Tuple]:
    return [
        tuple(zip(T, vals))
        for T in combinations(range(1, p.n + 1), p.t)
        for vals in product(range(1, p.q), repeat=p.t)
    ]


def exact_mean_degree_over_B(p: CodeParams, v: Sequence[tuple[int, int]], max_assignments: int = 1 << 16) -> Fraction:
    """Average of D(v) over every assignment of B on the other t-subsets."""
    v = tuple(sorted(v))
    T = tuple(i for i, _ in v)
    if len(T) != p.t or len(set(T)) != p.t:
        raise ValueError(f"tuple must have {p.t} distinct indices")
    others = [S for S in t_subsets(p) if S != T]
    total_assignments = (p.q - 1) ** len(others)
    if total_assignments > max_assignments:
        raise ValueError(f"{total_assignments} B assignments exceeds cap {max_assignments}")
    own = (sum(a for _, a in v) - 1) % (p.q - 1) + 1
    total = 0
    for vals in product(range(1, p.q), repeat=len(others)):
        values = dict(zip(others, vals))
        values[T] = own
        total += _degree_by_support(v, BAssignment(p, values))
    return Fraction(total, total_assignments)


def tuple_panel(p: CodeParams, seed: int, k: int = 4) -> list[Tuple]:
    """First k tuples in canonical order plus k more drawn with ``seed``."""
    tuples = all_tuples(p)
    head = tuples[:k]
    rng = random.Random(derive_seed(seed, -1))
    tail = rng.sample(tuples[k:], min(k, max(0, len(tuples) - k)))
    return head + tail


def degree_concentration_mc(p: CodeParams, samples: int, seed: int, panel: Optional[list[Tuple]] = None) -> DegreeReport:
    """D over a fixed tuple panel for ``samples`` independent B draws.

    The standard error is that of the per-sample panel mean, which is the
    quantity that is independent across samples.
    """
    expected = expected_degree(p)
    if samples <= 0:
        return DegreeReport(p, expected, None, None, None, 0, "monte-carlo", None, seed)
    panel = panel if panel is not None else tuple_panel(p, seed)
    per_sample = []
    lo = hi = None
    for s in range(samples):
        b = sample_B(p, derive_seed(seed, s))
        ds = [paper_degree(v, b) for v in panel]
        lo = min(ds) if lo is None else min(lo, min(ds))
        hi = max(ds) if hi is None else max(hi, max(ds))
        per_sample.append(Fraction(sum(ds), len(ds)))
    mean = sum(per_sample, Fraction(0)) / samples
    se = statistics.stdev(float(x) for x in per_sample) / samples ** 0.5 if samples > 1 else None
    return DegreeReport(p, expected, Fraction(lo), mean, Fraction(hi), samples, "monte-carlo", se, seed)


def degree_census(p: CodeParams, b: BAssignment) -> DegreeReport:
    """D(v) for every tuple under a fixed B, plus V1 degrees within X."""
    from .constraints import enumerate_X

    ds = [paper_degree(v, b) for v in all_tuples(p)]
    X = enumerate_X(p, b)
    v1 = {}
    for x in X:
        for key in v1_keys(x, p.t):
            v1[key] = v1.get(key, 0) + 1
    mean = Fraction(sum(ds), len(ds))
    se = statistics.pstdev(ds) / len(ds) ** 0.5 if len(ds) > 1 else None
    return DegreeReport(
        p, expected_degree(p), Fraction(min(ds)), mean, Fraction(max(ds)),
        len(ds), "fixed-B-census", se, b.seed, v1,
    )


def degree_exact_report(p: CodeParams, panel: list[Tuple]) -> DegreeReport:
    means = [exact_mean_degree_over_B(p, v) for v in panel]
    return DegreeReport(
        p, expected_degree(p), min(means), sum(means, Fraction(0)) / len(means), max(means),
        len(panel), "exact-over-B",
    )


def census_by_keys(X: CandidateFamily) -> dict:
    """tuple_degree for every V2 key occurring in X, by direct key counting."""
    counts: dict = {}
    for x in X:
        for key in v2_keys(x, X.params.t):
            counts[key] = counts.get(key, 0) + 1
    return counts
