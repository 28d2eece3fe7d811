from fractions import Fraction
from functools import lru_cache

import pytest

from cwcodes.bounds import BoundValue, johnson_bound, johnson_t, main_term
from cwcodes.core import CodeParams


@lru_cache(maxsize=None)
def pascal(n, k):
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return pascal(n - 1, k - 1) + pascal(n - 1, k)


def test_johnson_t():
    assert johnson_t(6, 3) == 1
    assert johnson_t(4, 3) == 2
    assert johnson_t(3, 4) == 3
    for w in range(1, 8):
        assert johnson_t(2 * w, w) == 1
    with pytest.raises(ValueError):
        johnson_t(7, 3)


@pytest.mark.parametrize(
    "params, floor, frac",
    [
        ((3, 6, 4, 3), 10, Fraction(10)),
        ((2, 7, 4, 3), 7, Fraction(7)),
        ((5, 10, 6, 3), 3, Fraction(10, 3)),
        ((2, 7, 3, 3), 7, Fraction(7)),
    ],
)
def test_johnson_bound_examples(params, floor, frac):
    b = johnson_bound(CodeParams(*params))
    assert b.floor_value == floor
    assert b.fraction == frac


def test_main_term():
    assert main_term(CodeParams(3, 6, 4, 3)).floor_value == 10
    assert main_term(CodeParams(3, 2, 2, 2)).fraction == 2
    with pytest.raises(ValueError):
        main_term(CodeParams(3, 6, 3, 3))


def test_main_term_q2_collapse():
    for n in range(4, 12):
        for w in range(1, 5):
            for d in range(2, 2 * w + 1, 2):
                p = CodeParams(2, n, d, w)
                assert main_term(p).fraction == Fraction(pascal(n, p.t), pascal(w, p.t))


def test_exact_against_pascal_and_monotone():
    for q in (2, 3, 4, 7):
        for w in range(1, 6):
            for d in range(1, 2 * w + 1):
                prev = None
                for n in range(w, 40):
                    p = CodeParams(q, n, d, w)
                    t = p.t
                    exp = t - 1 if d % 2 == 0 else t
                    b = johnson_bound(p)
                    assert b.fraction == Fraction((q - 1) ** exp * pascal(n, t), pascal(w, t))
                    if d % 2 == 0:
                        assert main_term(p) == b
                    if prev is not None:
                        assert b.fraction >= prev
                    prev = b.fraction


def test_bound_value_lowest_terms():
    b = BoundValue(20, 6)
    assert (b.numerator, b.denominator, b.floor_value) == (10, 3, 3)
    assert str(b) == "3 (10/3)"


def multiplicative(n, k):
    out = Fraction(1)
    for i in range(k):
        out = out * (n - i) / (i + 1)
    return int(out)


def test_big_n_exact():
    p = CodeParams(5, 2000, 4, 6)
    assert p.t == 5
    b = johnson_bound(p)
    assert b.fraction == Fraction(4**4 * multiplicative(2000, 5), multiplicative(6, 5))
    assert multiplicative(30, 7) == pascal(30, 7)
