"""Divisor-gap statistics and the shifted-factorization subsequences.

The gap statistic is G(n) = max_{1<=m<n}(m + d(m)) - n.  Writing
n - 1 = p_1^a_1 ... p_s^a_s (s the index of the largest prime factor,
interior zero exponents allowed) splits the integers >= 3 into disjoint
subsequences indexed by s, and gives the pointwise lower bound
G(n) >= d(n-1) - 1 = prod(a_i + 1) - 1.  Record points of G are the
desk-scale evidence that the statistic is unbounded along a subsequence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .arith import (
    U64_MAX,
    BudgetError,
    FactorSieve,
    checked_mul,
    divisor_count,
    factorize,
    nth_primes,
    prime_at,
)

DEFAULT_GAP_BUDGET = 1 << 24


@dataclass(frozen=True)
class GapRecord:
    """G(n) with the largest attaining m and the d(n-1) - 1 lower bound.

    gap is signed on purpose: no negative value occurs for n >= 2, and the
    signed type keeps that invariant falsifiable instead of clamped.
    """

    n: int
    gap: int
    argmax_m: int
    lemma_bound: int


@dataclass(frozen=True)
class ExponentVector:
    """Exponent layout of n - 1 over the initial primes p_1 .. p_s.

    s is the prime index of the largest prime factor of n - 1.  Only nonzero
    entries are stored (1-based prime index, exponent, ascending); `alphas`
    materializes the dense padded vector, whose interior entries may be zero
    and whose final entry is always >= 1.
    """

    s: int
    entries: tuple[tuple[int, int], ...]

    @property
    def alphas(self) -> tuple[int, ...]:
        dense = [0] * self.s
        for i, a in self.entries:
            dense[i - 1] = a
        return tuple(dense)


def gap_stat(n: int, sieve: FactorSieve) -> GapRecord:
    """Single-n brute force over every m in [1, n-1] (d(0) is undefined).

    Independent of the table-driven scan; serves as its oracle.  Ties in the
    maximum resolve to the largest m.
    """
    if n < 2:
        raise ValueError(f"gap statistic needs n >= 2, got {n}")
    if n - 1 > sieve.limit:
        raise ValueError(f"n={n} needs a sieve limit of at least {n - 1}")
    best = -1
    arg = 0
    for m in range(1, n):
        v = m + divisor_count(m, sieve)
        if v >= best:
            best = v
            arg = m
    return GapRecord(n, best - n, arg, divisor_count(n - 1, sieve) - 1)


def divisor_table(limit: int, budget: int = DEFAULT_GAP_BUDGET) -> np.ndarray:
    """d(m) for m in [1, limit - 1] by harmonic strided adds (d[0] unused)."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > budget:
        raise BudgetError(f"divisor table of {limit} entries exceeds the budget {budget}")
    d = np.zeros(limit, dtype=np.int32)
    d[1:] += 1  # every m divides itself
    for i in range(1, limit // 2 + 1):
        d[2 * i :: i] += 1
    return d


def _gap_arrays(limit: int, budget: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = divisor_table(limit, budget)
    m = np.arange(limit, dtype=np.int64)
    vals = m + d  # vals[0] = 0 never attains the maximum for n >= 2
    runmax = np.maximum.accumulate(vals)
    arg = np.maximum.accumulate(np.where(vals == runmax, m, 0))
    return d, runmax, arg


def scan_gap_stats(limit: int, *, budget: int = DEFAULT_GAP_BUDGET) -> Iterator[GapRecord]:
    """One GapRecord per n in [2, limit] from a single divisor-table pass."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    d, runmax, arg = _gap_arrays(limit, budget)
    for n in range(2, limit + 1):
        yield GapRecord(n, int(runmax[n - 1]) - n, int(arg[n - 1]), int(d[n - 1]) - 1)


def record_points(limit: int, *, budget: int = DEFAULT_GAP_BUDGET) -> list[GapRecord]:
    """The n where G(n) strictly exceeds every earlier gap value."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    d, runmax, arg = _gap_arrays(limit, budget)
    ns = np.arange(2, limit + 1, dtype=np.int64)
    gap = runmax[1:limit] - ns
    prev_best = np.maximum.accumulate(gap)
    is_record = np.empty(gap.size, dtype=bool)
    is_record[0] = True
    is_record[1:] = gap[1:] > prev_best[:-1]
    out = []
    for i in np.flatnonzero(is_record):
        n = int(ns[i])
        out.append(GapRecord(n, int(gap[i]), int(arg[n - 1]), int(d[n - 1]) - 1))
    return out


def canonical_rep(n: int, sieve: FactorSieve) -> ExponentVector:
    """The unique exponent layout with n = prod p_i^alpha_i + 1."""
    if n < 3:
        raise ValueError(f"the representation exists for n >= 3 only, got {n}")
    if n - 1 > sieve.limit:
        raise ValueError(f"n={n} needs a sieve limit of at least {n - 1}")
    pairs = factorize(n - 1, sieve)
    entries = tuple((sieve.prime_index(p), e) for p, e in pairs)
    return ExponentVector(entries[-1][0], entries)


def reconstruct(vec: ExponentVector) -> int:
    """Rebuild n from its exponent layout: prod p_i^alpha_i + 1."""
    value = 1
    for i, a in vec.entries:
        p = prime_at(i)
        for _ in range(a):
            value = checked_mul(value, p)
    return value + 1


def classify_subsequence(n: int, sieve: FactorSieve) -> int:
    """Index s of the subsequence containing n: the prime index of the
    largest prime factor of n - 1.  Total and unique on n >= 3."""
    return canonical_rep(n, sieve).s


def _smooth_stream(primes: list[int], bound: int) -> Iterator[int]:
    """All primes-smooth integers <= bound, ascending, starting at 1.

    Heap entries carry the index of the largest prime used; children only
    multiply by primes of equal or higher index, so each value is pushed
    exactly once and duplicates cannot occur.
    """
    heap: list[tuple[int, int]] = [(1, 0)]
    while heap:
        value, i = heapq.heappop(heap)
        yield value
        for j in range(i, len(primes)):
            child = value * primes[j]
            if child <= bound:
                heapq.heappush(heap, (child, j))


def gen_subsequence(s: int, count: int) -> list[int]:
    """First `count` members of the index-s subsequence, strictly increasing.

    The members are exactly (p_s-smooth multiples of p_s) + 1; dividing one
    p_s out, they are p_s*k + 1 for k running over all p_s-smooth integers
    in order.
    """
    if s < 1 or count < 1:
        raise ValueError(f"need s >= 1 and count >= 1, got s={s}, count={count}")
    primes = nth_primes(s)
    p_s = primes[-1]
    out = []
    for k in _smooth_stream(primes, (U64_MAX - 1) // p_s):
        out.append(k * p_s + 1)
        if len(out) == count:
            return out
    raise OverflowError(
        f"only {len(out)} members of subsequence s={s} fit the 64-bit range, "
        f"requested {count}"
    )


def subsequence_upto(s: int, bound: int) -> list[int]:
    """All members of the index-s subsequence that are <= bound."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    primes = nth_primes(s)
    p_s = primes[-1]
    if bound < p_s + 1:
        return []
    return [k * p_s + 1 for k in _smooth_stream(primes, (bound - 1) // p_s)]


def gap_bound_check(n: int, sieve: FactorSieve) -> tuple[int, bool]:
    """The lower bound prod(alpha_i + 1) - 1 for G(n), and whether it holds.

    The bound equals d(n-1) - 1 and always dominates sum(alpha_i).
    """
    vec = canonical_rep(n, sieve)
    bound = 1
    for _, a in vec.entries:
        bound *= a + 1  # zero exponents contribute a factor of 1
    bound -= 1
    assert bound >= sum(a for _, a in vec.entries)
    return bound, gap_stat(n, sieve).gap >= bound
