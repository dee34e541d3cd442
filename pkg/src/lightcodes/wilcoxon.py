"""Exact Wilcoxon-Mann-Whitney null distribution for fixed scoring functions.

Counts, over all fixed-proportion labelings of a sample ranked by a fixed
strictly monotone score, how many labelings produce at most a given number
of discordant pairs.  Everything is exact: big-integer counts and rational
p-values, floats only at presentation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

_q_memo: dict[tuple[int, int, int], int] = {}


def _as_fraction(alpha) -> Fraction:
    """Normalize a significance level to an exact rational.

    Floats go through their shortest decimal repr so that e.g. 0.05 means
    exactly 1/20; strict critical-value comparisons must not depend on
    binary rounding.
    """
    if isinstance(alpha, Fraction):
        return alpha
    if isinstance(alpha, float):
        return Fraction(str(alpha))
    return Fraction(alpha)


def q_count(W: int, n: int, w: int) -> int:
    """Number of labelings in S(n,w) with at most ``W`` discordant pairs.

    Four-case recursion, memoized; the complement identity
    Q(W,n,w) = Q(W,n,n-w) halves the table.
    """
    if not 0 < w < n:
        raise ValueError(f"need 0 < w < n, got n={n}, w={w}")
    w = min(w, n - w)
    return _q(W, n, w)


def _q(W: int, n: int, w: int) -> int:
    if W < 0:
        return 0
    if W >= w * (n - w):
        return comb(n, w)
    if w == 1 or n - w == 1:
        return W + 1
    key = (W, n, w)
    got = _q_memo.get(key)
    if got is None:
        got = _q(W, n - 1, w) + _q(W - n + w, n - 1, w - 1)
        _q_memo[key] = got
    return got


@dataclass(frozen=True, slots=True)
class NullDistribution:
    """Exact labeling counts per discordant-pair count 0..w(n-w)."""

    n: int
    w: int
    counts: tuple[int, ...]

    @property
    def max_errors(self) -> int:
        return self.w * (self.n - self.w)

    def total(self) -> int:
        return sum(self.counts)

    def cumulative(self, W: int) -> int:
        if W < 0:
            return 0
        return sum(self.counts[: min(W, self.max_errors) + 1])

    def mean(self) -> Fraction:
        return Fraction(
            sum(k * c for k, c in enumerate(self.counts)), self.total()
        )

    def variance(self) -> Fraction:
        mu = self.mean()
        total = self.total()
        second = Fraction(sum(k * k * c for k, c in enumerate(self.counts)), total)
        return second - mu * mu


def wmw_distribution(n: int, w: int) -> NullDistribution:
    """Exact null distribution of the discordant-pair count for S(n,w)."""
    top = w * (n - w)
    counts = []
    prev = 0
    for k in range(top + 1):
        cur = q_count(k, n, w)
        counts.append(cur - prev)
        prev = cur
    return NullDistribution(n, w, tuple(counts))


def wmw_pvalue(errors: int, n: int, w: int) -> Fraction:
    """Exact one-sided p-value for observing at most ``errors`` discordant pairs."""
    if errors < 0:
        raise ValueError("errors must be nonnegative")
    return Fraction(q_count(errors, n, w), comb(n, w))


def wmw_critical(alpha, n: int, w: int) -> int | None:
    """Largest W with Q(W,n,w)/C(n,w) strictly below ``alpha``; None if none."""
    a = _as_fraction(alpha)
    if not 0 < a < 1:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    total = comb(n, w)
    best = None
    for W in range(w * (n - w) + 1):
        if Fraction(q_count(W, n, w), total) < a:
            best = W
        else:
            break
    return best
