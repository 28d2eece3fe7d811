import statistics
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from cwcodes.constraints import CandidateFamily, check_constraints, enumerate_X, sample_B
from cwcodes.core import CodeParams
from cwcodes.degrees import (
    DegreeReport,
    all_tuples,
    census_by_keys,
    degree_census,
    degree_concentration_mc,
    exact_mean_degree_over_B,
    expected_degree,
    paper_degree,
    tuple_degree,
    tuple_panel,
)
from cwcodes.oracle import enumerate_all_words


def test_expected_degree():
    assert expected_degree(CodeParams(3, 6, 4, 3)) == 2
    assert expected_degree(CodeParams(3, 5, 4, 3)) == Fraction(3, 2)
    for q in (2, 3, 5):
        for w in (1, 2, 3):
            assert expected_degree(CodeParams(q, w + 3, 2, w)) == 1
    assert expected_degree(CodeParams(3, 10, 4, 3)) == 4
    with pytest.raises(ValueError):
        expected_degree(CodeParams(3, 6, 3, 3))


def test_tuple_degree_violating_is_zero():
    p = CodeParams(3, 6, 4, 3)
    b = sample_B(p, 1)
    X = enumerate_X(p, b)
    for v in all_tuples(p):
        T = tuple(i for i, _ in v)
        if (sum(a for _, a in v) - b[T]) % 2:
            assert tuple_degree(v, X) == 0


def test_tuple_degree_w_equals_t():
    p = CodeParams(4, 5, 2, 2)
    X = enumerate_X(p, sample_B(p, 2))
    assert {tuple_degree(v, X) for v in all_tuples(p)} <= {0, 1}


def test_census_double_count():
    p = CodeParams(3, 6, 4, 3)
    b = sample_B(p, 8)
    X = enumerate_X(p, b)
    filtered = CandidateFamily(p, b, tuple(x for x in enumerate_all_words(p) if check_constraints(x, b)))
    counts = census_by_keys(X)
    for v in all_tuples(p):
        d = tuple_degree(v, filtered)
        assert d == counts.get(v, 0) == tuple_degree(v, X)


def test_paper_degree_matches_filter_path():
    p = CodeParams(3, 6, 4, 3)
    for seed in range(5):
        b = sample_B(p, seed)
        for v in all_tuples(p)[:20]:
            T = tuple(i for i, _ in v)
            fixed = b.with_value(T, (sum(a for _, a in v) - 1) % 2 + 1)
            brute = sum(
                1
                for x in enumerate_all_words(p)
                if all(x[i - 1] == a for i, a in v) and check_constraints(x, fixed)
            )
            assert paper_degree(v, b) == brute


def test_exact_mean_examples():
    p = CodeParams(3, 5, 4, 3)
    assert exact_mean_degree_over_B(p, ((1, 1), (2, 2))) == Fraction(3, 2)
    p = CodeParams(2, 6, 4, 3)
    assert exact_mean_degree_over_B(p, ((1, 1), (4, 1))) == comb(4, 1)
    p = CodeParams(3, 4, 2, 2)
    assert exact_mean_degree_over_B(p, ((2, 2), (3, 1))) == 1


def test_exact_mean_q2_every_assignment():
    p = CodeParams(2, 7, 4, 3)
    for seed in range(5):
        b = sample_B(p, seed)
        assert {paper_degree(v, b) for v in all_tuples(p)} == {comb(p.n - p.t, p.w - p.t)}


@pytest.mark.parametrize("params", [(3, 5, 4, 3), (3, 4, 2, 2), (4, 4, 4, 3), (3, 6, 6, 3)])
def test_exact_mean_equals_formula(params):
    p = CodeParams(*params)
    for v in all_tuples(p)[:3]:
        assert exact_mean_degree_over_B(p, v) == expected_degree(p)


def test_mc_degenerate():
    rep = degree_concentration_mc(CodeParams(3, 6, 4, 3), 0, 1)
    assert rep.samples == 0 and rep.observed_mean is None and rep.stderr is None


def test_mc_q2_zero_variance():
    p = CodeParams(2, 8, 4, 3)
    rep = degree_concentration_mc(p, 30, 1)
    assert rep.stderr == 0
    assert rep.observed_min == rep.observed_max == rep.expected


def test_mc_deterministic():
    p = CodeParams(3, 8, 4, 3)
    a = degree_concentration_mc(p, 40, 9)
    b = degree_concentration_mc(p, 40, 9)
    assert (a.observed_mean, a.stderr) == (b.observed_mean, b.stderr)
    assert a.observed_min <= a.observed_mean <= a.observed_max


def test_panel():
    p = CodeParams(3, 8, 4, 3)
    panel = tuple_panel(p, 3)
    assert panel[:4] == all_tuples(p)[:4]
    assert len(set(panel)) == 8 and panel == tuple_panel(p, 3)


def test_relative_spread_shrinks():
    cvs = []
    for n in (8, 12, 16):
        p = CodeParams(3, n, 4, 3)
        v = ((1, 1), (2, 1))
        ds = [paper_degree(v, sample_B(p, s)) for s in range(300)]
        cvs.append(statistics.pstdev(ds) / statistics.mean(ds))
    assert cvs[0] > cvs[1] > cvs[2]


def test_census_report():
    p = CodeParams(3, 7, 4, 3)
    rep = degree_census(p, sample_B(p, 1))
    assert rep.mode == "fixed-B-census" and rep.samples == len(all_tuples(p))
    assert rep.observed_min <= rep.observed_mean <= rep.observed_max
    # V1 keys here are whole supports, so their degree is a per-support count
    assert set(rep.v1_degrees.values()) <= {2}


def test_v1_degree_grows_with_n():
    means = []
    for n in (6, 9, 12):
        p = CodeParams(3, n, 6, 4)
        rep = degree_census(p, sample_B(p, 0))
        means.append(statistics.mean(rep.v1_degrees.values()))
    assert means[0] < means[1] < means[2]


def test_report_mode_checked():
    with pytest.raises(ValueError):
        DegreeReport(CodeParams(3, 6, 4, 3), Fraction(2), None, None, None, 0, "bogus")
