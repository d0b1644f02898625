"""Verification suites aggregating each module's invariants.

Each suite returns CheckResult rows; the CLI `verify` command renders them
and exits nonzero when any check fails.  Randomized suites draw from a fixed
seed so two runs always produce the same rows.  Trial-division helpers here
are deliberately independent of the sieve-backed code they judge.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import barriers as bar
from . import density as dens
from . import gaps as gp
from .arith import (
    Eps,
    build_sieve,
    divisor_count,
    factorize,
    make_eps,
    nth_primes,
    omega,
    primorial,
)

FAMILY_SEED = 20240817

# Barriers up to 30 for eps = 1/1, frozen from the trial-division oracle
# (22 is excluded: m = 21 = 3*7 gives 21 + 2 > 22).
GOLDEN_BARRIERS_30 = (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 17, 18, 20, 24, 26, 28, 30)

DENSITY_GOLDEN = ((1, Fraction(1)), (2, Fraction(1, 2)), (3, Fraction(44, 180)))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    passed: bool
    detail: str


def _omega_trial(m: int) -> int:
    """Distinct prime factors by trial division; no sieve involved."""
    count = 0
    d = 2
    while d * d <= m:
        if m % d == 0:
            count += 1
            while m % d == 0:
                m //= d
        d += 1
    return count + (1 if m > 1 else 0)


def _divisor_count_trial(m: int) -> int:
    """Divisors of m by direct enumeration up to sqrt(m)."""
    count = 0
    i = 1
    while i * i <= m:
        if m % i == 0:
            count += 1 if i * i == m else 2
        i += 1
    return count


def _barriers_trial(hi: int, eps: Eps) -> list[int]:
    """Barrier list by definition, with trial-division omega."""
    best = -1
    out = []
    for n in range(1, hi + 1):
        best = max(best, eps.den * (n - 1) + eps.num * _omega_trial(n - 1))
        if best <= eps.den * n:
            out.append(n)
    return out


def _row(suite: str, check: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(suite, check, bool(passed), detail)


def suite_arith(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    rows = []
    sieve = build_sieve(100_000)
    spf = sieve.spf

    ns = np.arange(2, sieve.limit + 1, dtype=np.int64)
    factors = spf[2:].astype(np.int64)
    divides = bool(np.all(ns % factors == 0))
    prime_entries = bool(np.all(spf[factors] == factors))
    rows.append(_row("arith", "spf-divides-and-prime", divides and prime_entries,
                     f"checked n <= {sieve.limit}"))

    minimal = True
    for p in sieve.primes()[:1229].tolist():  # primes <= 10^4 cover all composites here
        if not np.all(spf[p::p] <= p):
            minimal = False
            break
    rows.append(_row("arith", "spf-minimal", minimal, "no smaller prime divides any multiple"))

    bad = 0
    for n in range(2, 50_001):
        value = 1
        for p, e in factorize(n, sieve):
            value *= p**e
        if value != n:
            bad += 1
    rows.append(_row("arith", "factorize-roundtrip", bad == 0, f"n <= 50000, {bad} mismatches"))

    bad = sum(1 for n in range(1, 2001) if divisor_count(n, sieve) != _divisor_count_trial(n))
    rows.append(_row("arith", "divisor-count-vs-enumeration", bad == 0, f"n <= 2000, {bad} mismatches"))

    bad = sum(1 for n in range(2, 20_001) if omega(n, sieve) != len(factorize(n, sieve)))
    ok_small = omega(0, sieve) == 0 and omega(1, sieve) == 0
    rows.append(_row("arith", "omega-counts-distinct-primes", bad == 0 and ok_small,
                     "n <= 20000 plus omega(0) = omega(1) = 0"))

    rng = random.Random(FAMILY_SEED + 1)
    product_sieve = build_sieve(1_000_000)  # products of coprime a, b <= 1000
    bad = 0
    trials = 0
    while trials < 500:
        a, b = rng.randint(1, 1000), rng.randint(1, 1000)
        if math.gcd(a, b) != 1:
            continue
        trials += 1
        if divisor_count(a * b, product_sieve) != divisor_count(
            a, product_sieve
        ) * divisor_count(b, product_sieve):
            bad += 1
    rows.append(_row("arith", "divisor-count-multiplicative", bad == 0,
                     f"500 coprime pairs <= 1000, {bad} mismatches"))

    primes = nth_primes(15)
    chain = all(primorial(r + 1) == primorial(r) * primes[r] for r in range(1, 15))
    rows.append(_row("arith", "primorial-recurrence", chain and primorial(4) == 210,
                     "primorial(r+1) = primorial(r) * p_{r+1} for r <= 14"))
    return rows


def _eps_list(eps: Eps | None, default: list[tuple[int, int]], need_le_one: bool) -> list[Eps]:
    if eps is not None and (eps.le_one() or not need_le_one):
        return [eps]
    return [make_eps(*nd) for nd in default]


def suite_oracle(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 30_030
    sieve = build_sieve(hi)
    rows = []
    start = time.perf_counter()
    for e in _eps_list(eps, [(1, 3), (1, 2), (2, 3), (1, 1)], need_le_one=True):
        mismatches = 0
        for n in range(3, hi + 1):
            if bar.is_barrier_windowed(n, e, sieve).is_barrier != bar.is_barrier_naive(n, e, sieve).is_barrier:
                mismatches += 1
        rows.append(_row("oracle", f"windowed-vs-naive-eps-{e.num}-{e.den}", mismatches == 0,
                         f"n in [3, {hi}], {mismatches} mismatches"))
    elapsed = time.perf_counter() - start
    rows.append(_row("oracle", "runtime", elapsed < 10.0, f"{elapsed:.2f}s for all eps"))
    return rows


def suite_streaming(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 10_000
    sieve = build_sieve(hi)
    rows = []
    for e in _eps_list(eps, [(1, 2), (1, 1)], need_le_one=False):
        scanned = {v.n for v in bar.scan_barriers(1, hi, e)}
        oracle = {n for n in range(1, hi + 1) if bar.is_barrier_naive(n, e, sieve).is_barrier}
        rows.append(_row("streaming", f"scan-vs-naive-eps-{e.num}-{e.den}",
                         scanned == oracle,
                         f"n <= {hi}, {len(scanned ^ oracle)} differing verdicts"))
    return rows


def suite_big_eps(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 100_000
    candidates = [make_eps(3, 2), make_eps(7, 5), make_eps(100, 1)]
    if eps is not None and not eps.le_one():
        candidates = [eps]
    rows = []
    for e in candidates:
        found = [v.n for v in bar.scan_barriers(1, hi, e)]
        rows.append(_row("big-eps", f"only-trivial-barriers-eps-{e.num}-{e.den}",
                         found == [1, 2], f"barriers <= {hi}: {found[:5]}"))
    return rows


def suite_bound(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    rows = []
    for e in _eps_list(eps, [(1, 1), (1, 2), (1, 3)], need_le_one=True):
        bound = bar.guaranteed_barrier_bound(e)
        expected_t = e.den // e.num
        found = [v.n for v in bar.scan_barriers(1, bound.bound, e)]
        ok = (
            bound.t == expected_t
            and bound.bound == primorial(bound.t + 1)
            and found == list(range(1, bound.bound + 1))
        )
        rows.append(_row("bound", f"all-barriers-up-to-bound-eps-{e.num}-{e.den}", ok,
                         f"t={bound.t}, bound={bound.bound}, "
                         f"{bound.bound - len(found)} counterexamples"))
    return rows


def _random_family_case(rng: random.Random, pool: list[Eps]) -> tuple:
    while True:
        eps = rng.choice(pool)
        s = rng.randint(1, 4)
        k_top = (s * eps.num - 1) // eps.den
        if k_top < 1:
            continue
        k = rng.randint(1, min(k_top, 3))
        indices = sorted(rng.sample(range(1, 13), s))
        exponents = [rng.randint(1, 2) for _ in range(s)]
        witness = 1
        for i, a in zip(indices, exponents):
            witness *= nth_primes(i)[-1] ** a
        if witness <= 150_000:
            return eps, s, k, indices, exponents


def suite_family(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    rng = random.Random(FAMILY_SEED)
    pool = [make_eps(*nd) for nd in ((1, 1), (1, 2), (2, 3), (3, 4), (1, 3), (3, 2), (5, 2))]
    if eps is not None:
        pool = [eps]
    sieve = build_sieve(200_000)
    failures = 0
    for _ in range(100):
        e, s, k, indices, exponents = _random_family_case(rng, pool)
        n, witness = bar.non_barrier_family(e, s, k, indices, exponents)
        ok = (
            witness == n - k
            and omega(witness, sieve) == s
            and not bar.relation_holds(witness, n, e, sieve)
            and not bar.is_barrier_naive(n, e, sieve).is_barrier
        )
        if not ok:
            failures += 1
    return [_row("family", "random-constructions-certified", failures == 0,
                 f"100 cases, {failures} failures")]


def suite_golden(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    e = make_eps(1, 1)
    oracle = tuple(_barriers_trial(30, e))
    scanned = tuple(v.n for v in bar.scan_barriers(1, 30, e))
    rows = [
        _row("golden", "trial-oracle-matches-frozen", oracle == GOLDEN_BARRIERS_30,
             f"{len(oracle)} barriers <= 30"),
        _row("golden", "scan-matches-frozen", scanned == GOLDEN_BARRIERS_30,
             "streaming scan reproduces the frozen list"),
    ]
    return rows


def suite_partition(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 100_000
    rows = [
        _row("partition", "exhaustive", dens.verify_partition(hi),
             f"every n in [2, {hi}] in exactly one interval"),
        _row("partition", "boundary-handoff",
             dens.interval_index(5) == 1 and dens.interval_index(6) == 2
             and dens.interval_index(29) == 2 and dens.interval_index(30) == 3,
             "ranks flip exactly at primorials"),
    ]
    return rows


def suite_density(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    rows = []
    start = time.perf_counter()
    table = dens.density_table(7, make_eps(1, 1))
    elapsed = time.perf_counter() - start

    golden_ok = all(table[r - 1].ratio == ratio for r, ratio in DENSITY_GOLDEN)
    low_count = sum(1 for n in range(30, 210) if _omega_trial(n) == 1)
    rows.append(_row("density", "golden-ratios", golden_ok and table[2].count == low_count,
                     f"r<=3 ratios with t=1; trial recount of r=3 gives {low_count}"))

    ratios = [row.ratio for row in table]
    rows.append(_row("density", "strictly-decreasing",
                     all(a > b for a, b in zip(ratios, ratios[1:])),
                     f"t=1 ratios for r=1..7"))
    rows.append(_row("density", "runtime", elapsed < 5.0, f"{elapsed:.2f}s for r<=7"))

    sieve = build_sieve(primorial(5))
    consistent = True
    for r in range(1, 5):
        spec = dens.interval_spec(r)
        for t in (1, 2, 3):
            brute = sum(1 for n in range(spec.lo, spec.hi) if 1 <= omega(n, sieve) <= t)
            if dens.count_low_omega(r, t).count != brute:
                consistent = False
    rows.append(_row("density", "count-vs-brute-filter", consistent, "r <= 4, t in {1,2,3}"))

    saturated = all(
        dens.count_low_omega(r, t).count == dens.interval_spec(r).hi - dens.interval_spec(r).lo
        for r in range(1, 5)
        for t in (r, r + 1)
    )
    rows.append(_row("density", "saturation-at-t-ge-r", saturated, "r <= 4"))
    return rows


def suite_gaps(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 1_000_000
    rows = []
    d = gp.divisor_table(hi)
    vals = np.arange(hi, dtype=np.int64) + d
    vals[0] = 0
    runmax = np.maximum.accumulate(vals)

    idx = np.arange(2, hi, dtype=np.int64)  # n - 1 for n in [3, hi]
    violations = int(np.count_nonzero(runmax[idx] - (idx + 1) < d[idx] - 1))
    rows.append(_row("gaps", "lower-bound-pointwise", violations == 0,
                     f"G(n) >= d(n-1) - 1 for 3 <= n <= {hi}, {violations} violations"))

    gaps_arr = runmax[1:hi] - np.arange(2, hi + 1, dtype=np.int64)
    recurrence_ok = bool(np.all(np.diff(gaps_arr) >= -1))
    rows.append(_row("gaps", "prefix-max-recurrence", recurrence_ok,
                     f"G(n+1) >= G(n) - 1 for n in [2, {hi - 1}]"))

    records = gp.record_points(hi)
    increasing = all(a.gap < b.gap for a, b in zip(records, records[1:]))
    max_gap = records[-1].gap
    witness_ok = True
    if hi >= 720_721:
        witness_ok = _divisor_count_trial(720_720) == 240 and max_gap >= 239
    rows.append(_row("gaps", "record-table", len(records) >= 10 and increasing and witness_ok,
                     f"{len(records)} records, max gap {max_gap}"))

    sieve = build_sieve(2_000)
    mismatch = 0
    for rec in gp.scan_gap_stats(800):
        if rec != gp.gap_stat(rec.n, sieve):
            mismatch += 1
    rows.append(_row("gaps", "scan-vs-brute", mismatch == 0, f"n <= 800, {mismatch} mismatches"))
    return rows


def suite_subseq(eps: Eps | None, limit: int | None) -> list[CheckResult]:
    hi = limit or 100_000
    sieve = build_sieve(hi)
    rows = []

    bad = sum(1 for n in range(3, hi + 1) if gp.reconstruct(gp.canonical_rep(n, sieve)) != n)
    rows.append(_row("subseq", "representation-roundtrip", bad == 0,
                     f"3 <= n <= {hi}, {bad} mismatches"))

    bad = 0
    for n in range(3, 20_001):
        vec = gp.canonical_rep(n, sieve)
        product = 1
        for _, a in vec.entries:
            product *= a + 1
        if product - 1 < sum(a for _, a in vec.entries):
            bad += 1
        if product - 1 != divisor_count(n - 1, sieve) - 1:
            bad += 1
    rows.append(_row("subseq", "bound-identities", bad == 0,
                     "prod(a_i+1)-1 >= sum(a_i) and equals d(n-1)-1, n <= 20000"))

    counts = {1: 63, 2: 200, 3: 200, 4: 200}  # s=1 has 63 terms inside 64 bits
    seqs = {s: gp.gen_subsequence(s, c) for s, c in counts.items()}
    increasing = all(all(a < b for a, b in zip(v, v[1:])) for v in seqs.values())
    disjoint = True
    keys = sorted(seqs)
    for i, s1 in enumerate(keys):
        for s2 in keys[i + 1 :]:
            if set(seqs[s1]) & set(seqs[s2]):
                disjoint = False
    classify_ok = True
    for s, values in seqs.items():
        p_s = nth_primes(s)[-1]
        for value in values:
            rest = value - 1
            if rest % p_s != 0:
                classify_ok = False
                break
            for p in nth_primes(s):
                while rest % p == 0:
                    rest //= p
            if rest != 1:
                classify_ok = False
                break
            if value - 1 <= sieve.limit and gp.classify_subsequence(value, sieve) != s:
                classify_ok = False
                break
    rows.append(_row("subseq", "disjoint-increasing-classified",
                     increasing and disjoint and classify_ok,
                     f"s <= 4 with counts {counts}"))

    horizon = 10_000
    merged = sorted(x for s in range(1, 5) for x in gp.subsequence_upto(s, horizon))
    classified = [n for n in range(3, horizon + 1) if gp.classify_subsequence(n, sieve) <= 4]
    rows.append(_row("subseq", "merge-matches-classifier", merged == classified,
                     f"s <= 4 over [3, {horizon}]"))

    all_s = [s for s in range(1, 1230) if nth_primes(s)[-1] <= horizon - 1]
    union = set()
    for s in all_s:
        union.update(gp.subsequence_upto(s, horizon))
    rows.append(_row("subseq", "full-coverage", union == set(range(3, horizon + 1)),
                     f"all s with p_s < {horizon} cover [3, {horizon}] exactly"))
    return rows


SUITES = {
    "arith": suite_arith,
    "oracle": suite_oracle,
    "streaming": suite_streaming,
    "big-eps": suite_big_eps,
    "bound": suite_bound,
    "family": suite_family,
    "golden": suite_golden,
    "partition": suite_partition,
    "density": suite_density,
    "gaps": suite_gaps,
    "subseq": suite_subseq,
}


def run_suites(
    names: list[str],
    eps: Eps | None = None,
    limit: int | None = None,
) -> list[CheckResult]:
    """Run the named suites ('all' expands to every suite) in a fixed order."""
    selected: list[str] = []
    for name in names:
        if name == "all":
            selected.extend(SUITES)
        elif name in SUITES:
            selected.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    rows: list[CheckResult] = []
    for name in dict.fromkeys(selected):
        rows.extend(SUITES[name](eps, limit))
    return rows
