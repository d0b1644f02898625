"""Segmented range computations for scans past the flat-table budget.

Segment boundaries depend only on the segment length, never on the thread
count, so partitioned results merge into the same answer every time.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

import numpy as np

from .arith import base_primes

DEFAULT_SEGMENT_LEN = 1 << 20

T = TypeVar("T")
R = TypeVar("R")


def segment_bounds(lo: int, hi: int, seg_len: int = DEFAULT_SEGMENT_LEN) -> Iterator[tuple[int, int]]:
    """Split [lo, hi) into consecutive chunks of at most seg_len."""
    a = lo
    while a < hi:
        b = min(a + seg_len, hi)
        yield a, b
        a = b


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int) -> Iterator[R]:
    """map() over a bounded thread pool, yielding results in input order."""
    if threads <= 1:
        for item in items:
            yield fn(item)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending: deque = deque()
        for item in items:
            pending.append(pool.submit(fn, item))
            if len(pending) >= threads * 2:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def omega_range(lo: int, hi: int, primes: np.ndarray | None = None) -> np.ndarray:
    """omega(n) for n in [lo, hi) as uint8, without a full factor table.

    Divides base primes (<= sqrt(hi)) out of a cofactor array; whatever is
    left above 1 is a single prime factor beyond the base set.
    """
    if lo < 0 or hi <= lo:
        raise ValueError(f"bad range [{lo}, {hi})")
    if primes is None:
        primes = base_primes(math.isqrt(max(hi - 1, 0)))
    om = np.zeros(hi - lo, dtype=np.uint8)
    cof = np.arange(lo, hi, dtype=np.int64)
    for p in primes.tolist():
        if p * p >= hi:
            break  # such primes appear at most once and the cofactor pass counts them
        start = -(-lo // p) * p
        if start >= hi:
            continue
        om[start - lo :: p] += 1
        q = p
        while q < hi:
            qs = -(-lo // q) * q
            if qs >= hi:
                break
            cof[qs - lo :: q] //= p
            q *= p
    om += cof > 1
    if lo == 0:
        om[0] = 0  # 0 is a multiple of every prime; omega(0) = 0 by convention
    return om


def count_omega_between(
    lo: int,
    hi: int,
    t: int,
    *,
    seg_len: int = DEFAULT_SEGMENT_LEN,
    threads: int = 1,
) -> int:
    """|{ n in [lo, hi) : 1 <= omega(n) <= t }| by segmented tables."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    primes = base_primes(math.isqrt(max(hi - 1, 0)))

    def count(bounds: tuple[int, int]) -> int:
        om = omega_range(bounds[0], bounds[1], primes)
        return int(np.count_nonzero((om >= 1) & (om <= t)))

    return sum(ordered_map(count, segment_bounds(lo, hi, seg_len), threads))
