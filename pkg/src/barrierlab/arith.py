"""Core arithmetic: smallest-prime-factor sieve, factorization, omega and
divisor counts, primorials, and exact rational weights.

Every other module queries these primitives.  All quantities are kept inside
the unsigned 64-bit range; constructions that would leave it raise
OverflowError instead of wrapping, and comparisons never touch floating
point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

U64_MAX = 2**64 - 1

# Largest flat table one build may allocate (entries); bigger ranges must go
# through the segmented scan paths.
DEFAULT_SIEVE_BUDGET = 1 << 26

MAX_PRIMORIAL_INDEX = 15
_PRIMORIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class BudgetError(RuntimeError):
    """A request needs more memory than the configured budget allows."""


def checked_mul(a: int, b: int) -> int:
    """a * b, refusing to leave the unsigned 64-bit range."""
    product = a * b
    if product > U64_MAX:
        raise OverflowError(f"{a} * {b} = {product} exceeds the 64-bit range")
    return product


@dataclass(frozen=True)
class Eps:
    """Positive rational weight num/den, kept in lowest terms.

    Barrier comparisons scale through den so every check is an exact integer
    comparison; use make_eps/parse_eps to construct normalized values.
    """

    num: int
    den: int

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def le_one(self) -> bool:
        return self.num <= self.den


def make_eps(num: int, den: int) -> Eps:
    """Normalized Eps; both parts must be positive."""
    if num < 1 or den < 1:
        raise ValueError(f"eps must be a positive rational, got {num}/{den}")
    g = math.gcd(num, den)
    return Eps(num // g, den // g)


def parse_eps(text: str) -> Eps:
    """Parse 'NUM/DEN' with positive integer parts; decimal input is rejected."""
    parts = text.strip().split("/")
    if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
        raise ValueError(f"eps must be NUM/DEN with positive integers, got {text!r}")
    return make_eps(int(parts[0]), int(parts[1]))


def base_primes(limit: int) -> np.ndarray:
    """All primes <= limit, ascending (empty below 2)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


_prime_cache: list[int] = []


def _ensure_primes(count: int) -> list[int]:
    # Grows a shared prime list; callers must not mutate the returned object.
    if len(_prime_cache) < count:
        if count < 6:
            bound = 13
        else:
            bound = int(count * (math.log(count) + math.log(math.log(count)))) + 10
        primes = base_primes(bound)
        while primes.size < count:
            bound *= 2
            primes = base_primes(bound)
        _prime_cache[:] = [int(p) for p in primes]
    return _prime_cache


def nth_primes(count: int) -> list[int]:
    """The first `count` primes, 1-based convention p_1 = 2."""
    if count < 1:
        raise ValueError(f"prime count must be >= 1, got {count}")
    return _ensure_primes(count)[:count]


def prime_at(i: int) -> int:
    """p_i with 1-based indexing, independent of any sieve."""
    if i < 1:
        raise ValueError(f"prime index must be >= 1, got {i}")
    return _ensure_primes(i)[i - 1]


class FactorSieve:
    """Immutable smallest-prime-factor table over [0, limit].

    spf[n] is the least prime dividing n for n >= 2, with spf[n] == n exactly
    when n is prime; entries 0 and 1 hold 0.  Built single-threaded, then
    read-only: all queries are safe from any number of threads.  Derived
    tables (primes, omega, per-eps scan values) are cached on first use.
    """

    __slots__ = ("limit", "spf", "_primes", "_omega", "_eps_vals")

    def __init__(self, limit: int, budget: int = DEFAULT_SIEVE_BUDGET):
        if limit < 2:
            raise ValueError(f"sieve limit must be >= 2, got {limit}")
        if limit + 1 > budget:
            raise BudgetError(
                f"sieve of {limit + 1} entries exceeds the budget of {budget}; "
                "use the segmented scan paths instead"
            )
        dtype = np.uint32 if limit < 2**32 else np.int64
        spf = np.zeros(limit + 1, dtype=dtype)
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == 0:
                seg = spf[p * p :: p]
                seg[seg == 0] = p
        untouched = np.flatnonzero(spf == 0)
        spf[untouched] = untouched  # remaining entries are primes (plus 0, 1)
        spf[0] = spf[1] = 0
        self.limit = limit
        self.spf = spf
        self._primes: np.ndarray | None = None
        self._omega: np.ndarray | None = None
        self._eps_vals: dict[tuple[int, int], np.ndarray] = {}

    def primes(self) -> np.ndarray:
        """Primes <= limit ascending; index i-1 holds p_i."""
        if self._primes is None:
            mask = self.spf == np.arange(self.spf.size, dtype=self.spf.dtype)
            mask[:2] = False
            self._primes = np.flatnonzero(mask).astype(np.int64)
        return self._primes

    def prime(self, i: int) -> int:
        """p_i with 1-based indexing (p_1 = 2)."""
        primes = self.primes()
        if i < 1 or i > primes.size:
            raise ValueError(f"prime index {i} outside [1, {primes.size}]")
        return int(primes[i - 1])

    def prime_index(self, p: int) -> int:
        """The i with p_i == p; errors when p is not a prime in the table."""
        primes = self.primes()
        pos = int(np.searchsorted(primes, p))
        if pos >= primes.size or int(primes[pos]) != p:
            raise ValueError(f"{p} is not a prime <= {self.limit}")
        return pos + 1

    def omega_table(self) -> np.ndarray:
        """omega(n) for every n in [0, limit] as uint8; built lazily once."""
        if self._omega is None:
            om = np.zeros(self.limit + 1, dtype=np.uint8)
            primes = self.primes()
            half = self.limit // 2
            cut = int(np.searchsorted(primes, half, side="right"))
            for p in primes[:cut].tolist():
                om[p::p] += 1
            om[primes[cut:]] += 1  # primes above limit/2 divide only themselves
            self._omega = om
        return self._omega

    def eps_values(self, eps: Eps) -> np.ndarray:
        """den*m + num*omega(m) for m in [0, limit]; cached per eps."""
        key = (eps.num, eps.den)
        vals = self._eps_vals.get(key)
        if vals is None:
            if eps.den * self.limit + eps.num * 64 > 2**62:
                raise OverflowError(
                    f"eps {eps} over a sieve to {self.limit} leaves the exact comparison range"
                )
            om = self.omega_table()
            vals = eps.den * np.arange(self.limit + 1, dtype=np.int64)
            vals += eps.num * om.astype(np.int64)
            if len(self._eps_vals) >= 8:
                self._eps_vals.pop(next(iter(self._eps_vals)))
            self._eps_vals[key] = vals
        return vals


def build_sieve(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> FactorSieve:
    """Smallest-prime-factor sieve over [0, limit]."""
    return FactorSieve(limit, budget)


Factorization = list[tuple[int, int]]


def factorize(n: int, sieve: FactorSieve) -> Factorization:
    """Prime factorization of n as ascending (prime, exponent) pairs.

    The product of prime**exponent over the pairs reconstructs n exactly.
    """
    if n < 2 or n > sieve.limit:
        raise ValueError(f"factorize needs 2 <= n <= {sieve.limit}, got {n}")
    spf = sieve.spf
    pairs: Factorization = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    return pairs


def omega(n: int, sieve: FactorSieve) -> int:
    """Number of distinct prime factors; omega(0) = omega(1) = 0."""
    if n < 0 or n > sieve.limit:
        raise ValueError(f"omega needs 0 <= n <= {sieve.limit}, got {n}")
    if n < 2:
        return 0
    spf = sieve.spf
    count = 0
    while n > 1:
        p = int(spf[n])
        count += 1
        while n % p == 0:
            n //= p
    return count


def divisor_count(n: int, sieve: FactorSieve) -> int:
    """d(n) = product of (exponent + 1) over the factorization; d(1) = 1."""
    if n == 0:
        raise ValueError("divisor count is undefined at 0")
    if n < 0 or n > sieve.limit:
        raise ValueError(f"divisor_count needs 1 <= n <= {sieve.limit}, got {n}")
    if n == 1:
        return 1
    d = 1
    for _, e in factorize(n, sieve):
        d *= e + 1
    return d


def primorial(r: int) -> int:
    """p_1 * p_2 * ... * p_r; representable for 1 <= r <= 15 only."""
    if r < 1:
        raise ValueError(f"primorial index must be >= 1, got {r}")
    if r > MAX_PRIMORIAL_INDEX:
        raise OverflowError(f"primorial({r}) exceeds the 64-bit range")
    out = 1
    for p in _PRIMORIAL_PRIMES[:r]:
        out = checked_mul(out, p)
    return out


PRIMORIALS = tuple(primorial(r) for r in range(1, MAX_PRIMORIAL_INDEX + 1))
