"""Barrier verdicts and scans for the weighted distinct-prime-factor statistic.

An integer n is a barrier for m -> eps*omega(m) when m + eps*omega(m) <= n
holds for every m < n.  All checks run in the scaled integer form
den*m + num*omega(m) <= den*n, so boundary equalities (which flip verdicts)
are decided exactly; no floating point appears anywhere.

Three routes produce verdicts:

* naive      -- examine every m < n (the oracle),
* windowed   -- only m in {n-r+1, ..., n-1} can fail when eps <= 1, where r
                is the primorial-interval rank of n,
* streaming  -- a running prefix maximum of den*m + num*omega(m) decides a
                whole range in one pass and partitions cleanly into segments.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from . import segments
from .arith import (
    MAX_PRIMORIAL_INDEX,
    PRIMORIALS,
    U64_MAX,
    Eps,
    FactorSieve,
    base_primes,
    checked_mul,
    nth_primes,
    omega,
    primorial,
)

METHOD_NAIVE = "naive"
METHOD_WINDOWED = "windowed"
METHOD_STREAMING = "streaming"

_INT64_GUARD = 2**62


@dataclass(frozen=True)
class BarrierVerdict:
    """Decision for one n; witness is the largest failing m when negative."""

    n: int
    is_barrier: bool
    witness: int | None
    method: str


@dataclass(frozen=True)
class BarrierBound:
    """Greatest t with t*eps <= 1 and the bound primorial(t+1) below which
    every n is a barrier."""

    t: int
    bound: int


def relation_holds(m: int, n: int, eps: Eps, sieve: FactorSieve) -> bool:
    """Exact check of m + eps*omega(m) <= n."""
    if m < 0 or m >= n:
        raise ValueError(f"need 0 <= m < n, got m={m}, n={n}")
    if m > sieve.limit:
        raise ValueError(f"m={m} beyond sieve limit {sieve.limit}")
    return eps.den * m + eps.num * omega(m, sieve) <= eps.den * n


def _largest_above(vals: np.ndarray, threshold: int, chunk: int = 4096) -> int:
    """Largest index with vals[index] > threshold, scanning backward."""
    hi = vals.size
    while hi > 0:
        lo = max(0, hi - chunk)
        idx = np.flatnonzero(vals[lo:hi] > threshold)
        if idx.size:
            return int(idx[-1]) + lo
        hi = lo
    raise AssertionError("no failing m although the maximum exceeds the threshold")


def is_barrier_naive(n: int, eps: Eps, sieve: FactorSieve) -> BarrierVerdict:
    """Brute-force verdict: the maximum over every m in [0, n-1].

    Works for any eps > 0.  The maximum is taken over the sieve's cached
    den*m + num*omega(m) table with no window or cross-call shortcuts.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n - 1 > sieve.limit:
        raise ValueError(f"n={n} needs a sieve limit of at least {n - 1}")
    vals = sieve.eps_values(eps)
    prefix = vals[:n]
    threshold = eps.den * n
    if int(prefix.max()) <= threshold:
        return BarrierVerdict(n, True, None, METHOD_NAIVE)
    return BarrierVerdict(n, False, _largest_above(prefix, threshold), METHOD_NAIVE)


def interval_rank(n: int) -> int:
    """r with primorial(r) <= n < primorial(r+1); r = 15 covers the 64-bit tail."""
    if n < 2:
        raise ValueError(f"no primorial interval contains {n}")
    return bisect_right(PRIMORIALS, n)


def is_barrier_windowed(n: int, eps: Eps, sieve: FactorSieve) -> BarrierVerdict:
    """Fast verdict checking only m in {n-r+1, ..., n-1}.

    Valid for eps <= 1: any m <= n-r satisfies the relation automatically
    because omega(m) <= r below primorial(r+1).  n = 1 and n = 2 are the
    trivial barriers and return positively without window logic.  The window
    is scanned downward from n-1, so a failure reports the largest failing m.
    """
    if not eps.le_one():
        raise ValueError(f"windowed check requires eps <= 1, got {eps}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n < 3:
        return BarrierVerdict(n, True, None, METHOD_WINDOWED)
    if n - 1 > sieve.limit:
        raise ValueError(f"n={n} needs a sieve limit of at least {n - 1}")
    r = interval_rank(n)
    den, num = eps.den, eps.num
    threshold = den * n
    for m in range(n - 1, max(n - r, 0), -1):
        if den * m + num * omega(m, sieve) > threshold:
            return BarrierVerdict(n, False, m, METHOD_WINDOWED)
    return BarrierVerdict(n, True, None, METHOD_WINDOWED)


def scan_barriers(
    lo: int,
    hi: int,
    eps: Eps,
    *,
    threads: int = 1,
    seg_len: int = segments.DEFAULT_SEGMENT_LEN,
) -> list[BarrierVerdict]:
    """All barriers in [lo, hi], streaming a prefix maximum from m = 0.

    n is a barrier exactly when max_{m<n}(den*m + num*omega(m)) <= den*n.
    Segments are merged left to right carrying the running maximum, so the
    output is identical for every thread count and segment length.
    """
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    den, num = eps.den, eps.num
    if den * hi + num * 64 > _INT64_GUARD:
        raise OverflowError(f"scan to {hi} with eps {eps} leaves the exact comparison range")
    base = base_primes(math.isqrt(max(hi - 1, 0)))

    def prepared(bounds: tuple[int, int]) -> tuple[int, int, np.ndarray]:
        a, b = bounds
        om = segments.omega_range(a, b, base)
        vals = den * np.arange(a, b, dtype=np.int64) + num * om.astype(np.int64)
        return a, b, np.maximum.accumulate(vals)

    out: list[BarrierVerdict] = []
    carry = -1
    bounds = segments.segment_bounds(0, hi, seg_len)
    for a, b, pref in segments.ordered_map(prepared, bounds, threads):
        n_lo = max(lo, a + 1)
        n_hi = min(hi, b)
        if n_lo <= n_hi:
            best = np.maximum(pref[n_lo - 1 - a : n_hi - a], carry)
            ns = np.arange(n_lo, n_hi + 1, dtype=np.int64)
            for n in ns[best <= den * ns]:
                out.append(BarrierVerdict(int(n), True, None, METHOD_STREAMING))
        carry = max(carry, int(pref[-1]))
    return out


def guaranteed_barrier_bound(eps: Eps) -> BarrierBound:
    """The bound primorial(t+1) with t = floor(den/num); every n below it is
    a barrier for eps <= 1."""
    if not eps.le_one():
        raise ValueError(f"no guaranteed bound exists for eps > 1, got {eps}")
    t = eps.den // eps.num
    if t + 1 > MAX_PRIMORIAL_INDEX:
        raise OverflowError(
            f"t={t}: the bound primorial({t + 1}) is not representable in 64 bits"
        )
    return BarrierBound(t, primorial(t + 1))


def non_barrier_family(
    eps: Eps,
    s: int,
    k: int,
    prime_indices: list[int],
    exponents: list[int],
) -> tuple[int, int]:
    """Construct a certified non-barrier n = (product of s prime powers) + k.

    Requires s*eps > k.  Returns (n, witness) with witness = n - k built from
    s distinct primes, so omega(witness) = s and
    witness + eps*omega(witness) = n - k + eps*s > n.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(prime_indices) != s or len(exponents) != s:
        raise ValueError("prime_indices and exponents must both have s entries")
    if len(set(prime_indices)) != s:
        raise ValueError(f"prime indices must be distinct, got {prime_indices}")
    if min(prime_indices) < 1:
        raise ValueError("prime indices are 1-based and must be >= 1")
    if min(exponents) < 1:
        raise ValueError("exponents must all be >= 1")
    if s * eps.num <= k * eps.den:
        raise ValueError(f"family condition s*eps > k violated: s={s}, k={k}, eps={eps}")
    primes = nth_primes(max(prime_indices))
    witness = 1
    for i, a in zip(prime_indices, exponents):
        p = primes[i - 1]
        for _ in range(a):
            witness = checked_mul(witness, p)
    n = witness + k
    if n > U64_MAX:
        raise OverflowError(f"n = {witness} + {k} exceeds the 64-bit range")
    return n, witness


def barrier_census(
    limit: int, eps_list: list[Eps], *, threads: int = 1
) -> list[tuple[Eps, int]]:
    """Barrier counts up to limit for each eps, in the given order."""
    return [
        (eps, len(scan_barriers(1, limit, eps, threads=threads))) for eps in eps_list
    ]
