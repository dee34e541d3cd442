from fractions import Fraction
from math import comb

import pytest

from lightcodes.wilcoxon import (
    NullDistribution,
    q_count,
    wmw_critical,
    wmw_distribution,
    wmw_pvalue,
)
from lightcodes.words import iter_words


def brute_counts(n: int, w: int) -> list[int]:
    """Histogram of discordant-pair counts against an increasing score.

    For strictly increasing scores the pair (1-labeled i, 0-labeled j) is
    discordant exactly when j > i; direct enumeration over S(n,w).
    """
    counts = [0] * (w * (n - w) + 1)
    for word in iter_words(n, w):
        errs = sum(1 for i in word.support() for j in word.zeros() if j > i)
        counts[errs] += 1
    return counts


def test_q_base_cases():
    assert q_count(1, 5, 1) == 2
    assert q_count(8, 4, 2) == 6
    assert q_count(-1, 6, 3) == 0
    for n in range(2, 10):
        for w in range(1, n):
            assert q_count(0, n, w) == 1


def test_q_invalid():
    with pytest.raises(ValueError):
        q_count(0, 4, 0)
    with pytest.raises(ValueError):
        q_count(0, 4, 4)


def test_distribution_small():
    assert wmw_distribution(4, 2).counts == (1, 1, 2, 1, 1)
    assert wmw_distribution(2, 1).counts == (1, 1)


def test_distribution_matches_enumeration():
    for n in range(2, 9):
        for w in range(1, n):
            assert list(wmw_distribution(n, w).counts) == brute_counts(n, w)


def test_distribution_sum_and_symmetry():
    for n in (10, 20, 30, 40):
        for w in (1, 2, n // 3, n // 2):
            dist = wmw_distribution(n, w)
            assert dist.total() == comb(n, w)
            m = dist.max_errors
            assert all(dist.counts[k] == dist.counts[m - k] for k in range(m + 1))


def test_complement_identity():
    for n in (6, 9, 13):
        for w in range(1, n):
            for W in (0, 1, n, w * (n - w) // 2):
                assert q_count(W, n, w) == q_count(W, n, n - w)


def test_big_instance_exact():
    # C(70,35) > 2^64; counts must stay exact integers.
    total = comb(70, 35)
    assert total > 2**64
    assert q_count(35 * 35, 70, 35) == total
    mid = q_count(35 * 35 // 2, 70, 35)
    assert 0 < mid < total
    # Symmetry of the cumulative at the midpoint minus one step.
    top = 35 * 35
    assert q_count(top // 2 - 1, 70, 35) + q_count(top - top // 2, 70, 35) == total


def test_pvalues():
    assert wmw_pvalue(0, 4, 2) == Fraction(1, 6)
    assert wmw_pvalue(8, 4, 2) == 1
    prev = Fraction(0)
    for e in range(0, 17):
        p = wmw_pvalue(e, 8, 4)
        assert p >= prev
        prev = p


def test_critical_examples():
    assert wmw_critical(0.05, 4, 2) is None
    crit = wmw_critical(0.05, 30, 15)
    total = comb(30, 15)
    assert Fraction(q_count(crit, 30, 15), total) < Fraction(1, 20)
    assert Fraction(q_count(crit + 1, 30, 15), total) >= Fraction(1, 20)


def test_critical_brute_force():
    # Oracle: largest W whose cumulative enumeration count is < alpha * C(n,w).
    for n, w in [(10, 5), (8, 3), (7, 2)]:
        counts = brute_counts(n, w)
        total = comb(n, w)
        best = None
        cum = 0
        for W, c in enumerate(counts):
            cum += c
            if Fraction(cum, total) < Fraction(1, 20):
                best = W
        assert wmw_critical(0.05, n, w) == best


def test_critical_median_bound():
    for n, w in [(10, 5), (12, 4)]:
        crit = wmw_critical(0.5, n, w)
        assert crit is not None and crit < w * (n - w) / 2


def test_critical_strictness_uses_decimal_alpha():
    # At alpha = 1/6 exactly, the (4,2) cumulative 1/6 must NOT pass (strict).
    assert wmw_critical(Fraction(1, 6), 4, 2) is None
    assert wmw_critical("0.2", 4, 2) == 0


def test_distribution_unimodal_to_middle():
    counts = wmw_distribution(30, 15).counts
    mid = len(counts) // 2
    for k in range(mid):
        assert counts[k] <= counts[k + 1]


def test_nulldistribution_helpers():
    d = wmw_distribution(4, 2)
    assert d.cumulative(-1) == 0
    assert d.cumulative(0) == 1
    assert d.cumulative(100) == 6
    assert d.mean() == Fraction(2)
    assert isinstance(d, NullDistribution)
