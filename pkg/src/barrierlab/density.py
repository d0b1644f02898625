"""Primorial-interval decomposition and low-omega density counts.

The intervals I_r = [primorial(r), primorial(r+1)) partition the integers
above 1.  For each r the density row records how many members have
1 <= omega(n) <= t, together with the exact ratio of that count to the
interval length; the tables track how fast the ratio falls as r grows.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import segments
from .arith import (
    MAX_PRIMORIAL_INDEX,
    PRIMORIALS,
    BudgetError,
    Eps,
    base_primes,
    primorial,
)

# One flat omega table covers r <= 7; the r = 8 interval (ending at
# primorial(9) = 223,092,870) is counted segment by segment.
FULL_TABLE_LIMIT = PRIMORIALS[7]
DEFAULT_COUNT_BUDGET = PRIMORIALS[8]


@dataclass(frozen=True)
class IntervalSpec:
    r: int
    lo: int  # primorial(r)
    hi: int  # primorial(r+1), exclusive


@dataclass(frozen=True)
class DensityRow:
    r: int
    t: int
    count: int
    interval_len: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.count, self.interval_len)


def interval_index(n: int) -> int:
    """The unique r with primorial(r) <= n < primorial(r+1)."""
    if n < 2:
        raise ValueError(f"the intervals cover integers >= 2, got {n}")
    if n >= PRIMORIALS[MAX_PRIMORIAL_INDEX - 1]:
        raise OverflowError(f"{n} is beyond the primorial ladder")
    return bisect_right(PRIMORIALS, n)


def interval_spec(r: int) -> IntervalSpec:
    if r < 1 or r > MAX_PRIMORIAL_INDEX - 1:
        raise ValueError(f"interval rank must be in [1, {MAX_PRIMORIAL_INDEX - 1}], got {r}")
    return IntervalSpec(r, primorial(r), primorial(r + 1))


def omega_table_upto(hi: int) -> np.ndarray:
    """omega(n) for n in [0, hi) as one flat uint8 table."""
    if hi < 2:
        raise ValueError(f"table bound must be >= 2, got {hi}")
    om = np.zeros(hi, dtype=np.uint8)
    primes = base_primes(hi - 1)
    cut = int(np.searchsorted(primes, (hi - 1) // 2, side="right"))
    for p in primes[:cut].tolist():
        om[p::p] += 1
    om[primes[cut:]] += 1  # primes above half have a single multiple in range
    return om


def _count_full(table: np.ndarray, lo: int, hi: int, t: int) -> int:
    seg = table[lo:hi]
    return int(np.count_nonzero((seg >= 1) & (seg <= t)))


def count_low_omega(
    r: int,
    t: int,
    *,
    threads: int = 1,
    seg_len: int = segments.DEFAULT_SEGMENT_LEN,
    budget: int = DEFAULT_COUNT_BUDGET,
) -> DensityRow:
    """Density row for interval r: members with 1 <= omega(n) <= t."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    spec = interval_spec(r)
    if spec.hi > budget:
        raise BudgetError(
            f"interval {r} reaches {spec.hi}, beyond the counting budget {budget}"
        )
    if spec.hi <= FULL_TABLE_LIMIT:
        count = _count_full(omega_table_upto(spec.hi), spec.lo, spec.hi, t)
    else:
        count = segments.count_omega_between(
            spec.lo, spec.hi, t, seg_len=seg_len, threads=threads
        )
    return DensityRow(r, t, count, spec.hi - spec.lo)


def density_table(
    r_max: int,
    eps: Eps | None = None,
    *,
    t: int | None = None,
    threads: int = 1,
    seg_len: int = segments.DEFAULT_SEGMENT_LEN,
    budget: int = DEFAULT_COUNT_BUDGET,
) -> list[DensityRow]:
    """One density row per r in [1, r_max].

    t defaults to floor(den/num) for eps <= 1, the same t as the guaranteed
    barrier bound; pass t explicitly to override.
    """
    if t is None:
        if eps is None:
            raise ValueError("density table needs eps or an explicit t")
        if not eps.le_one():
            raise ValueError(f"eps must be <= 1 to induce t >= 1, got {eps}")
        t = eps.den // eps.num
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if r_max < 1 or r_max > MAX_PRIMORIAL_INDEX - 1:
        raise ValueError(f"r_max must be in [1, {MAX_PRIMORIAL_INDEX - 1}], got {r_max}")
    hi_needed = primorial(r_max + 1)
    if hi_needed > budget:
        raise BudgetError(
            f"r_max={r_max} reaches {hi_needed}, beyond the counting budget {budget}"
        )
    table = omega_table_upto(min(hi_needed, FULL_TABLE_LIMIT))
    rows = []
    for r in range(1, r_max + 1):
        spec = interval_spec(r)
        if spec.hi <= table.size:
            count = _count_full(table, spec.lo, spec.hi, t)
        else:
            count = segments.count_omega_between(
                spec.lo, spec.hi, t, seg_len=seg_len, threads=threads
            )
        rows.append(DensityRow(r, t, count, spec.hi - spec.lo))
    return rows


def verify_partition(limit: int) -> bool:
    """True when every n in [2, limit] lies in exactly one interval."""
    if limit >= PRIMORIALS[MAX_PRIMORIAL_INDEX - 1]:
        raise OverflowError(f"{limit} is beyond the primorial ladder")
    if limit < 2:
        return True  # nothing to cover below 2
    ns = np.arange(2, limit + 1, dtype=np.int64)
    ladder = np.asarray(PRIMORIALS, dtype=np.int64)
    ranks = np.searchsorted(ladder, ns, side="right")
    if not np.all(ranks >= 1):
        return False
    inside = (ladder[ranks - 1] <= ns) & (ns < ladder[ranks])
    if not np.all(inside):
        return False
    covered = sum(int(np.count_nonzero(ranks == r)) for r in range(1, int(ranks.max()) + 1))
    return covered == limit - 1
