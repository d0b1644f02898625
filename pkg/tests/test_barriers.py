import random

import pytest

from _oracles import barriers_trial
from barrierlab import (
    barrier_census,
    build_sieve,
    guaranteed_barrier_bound,
    is_barrier_naive,
    is_barrier_windowed,
    make_eps,
    non_barrier_family,
    omega,
    relation_holds,
    scan_barriers,
)
from barrierlab.barriers import interval_rank

EPS_1 = make_eps(1, 1)
EPS_HALF = make_eps(1, 2)
EPS_BIG = make_eps(3, 2)

# Frozen from barriers_trial(30, 1, 1); 22 is not a barrier (21 = 3*7).
GOLDEN_30 = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 17, 18, 20, 24, 26, 28, 30]


def test_relation_boundary_cases(sieve_2k):
    assert relation_holds(2, 3, EPS_1, sieve_2k)          # equality counts
    assert not relation_holds(2, 3, EPS_BIG, sieve_2k)    # 2 + 1.5 > 3
    assert relation_holds(6, 7, EPS_HALF, sieve_2k)       # 6 + 1 = 7
    with pytest.raises(ValueError):
        relation_holds(3, 3, EPS_1, sieve_2k)
    with pytest.raises(ValueError):
        relation_holds(2001, 2002, EPS_1, sieve_2k)


def test_naive_examples(sieve_2k):
    verdict = is_barrier_naive(7, EPS_1, sieve_2k)
    assert (verdict.is_barrier, verdict.witness, verdict.method) == (False, 6, "naive")
    assert is_barrier_naive(8, EPS_1, sieve_2k).is_barrier
    assert is_barrier_naive(1, make_eps(5, 1), sieve_2k).is_barrier
    with pytest.raises(ValueError):
        is_barrier_naive(0, EPS_1, sieve_2k)


def test_naive_witness_is_largest_failing(sieve_2k):
    for eps in (EPS_1, make_eps(2, 3), EPS_BIG):
        for n in range(1, 301):
            verdict = is_barrier_naive(n, eps, sieve_2k)
            failing = [
                m for m in range(n)
                if eps.den * m + eps.num * omega(m, sieve_2k) > eps.den * n
            ]
            if failing:
                assert not verdict.is_barrier
                assert verdict.witness == failing[-1]
                assert eps.den * (n - verdict.witness) < eps.num * omega(verdict.witness, sieve_2k)
            else:
                assert verdict.is_barrier and verdict.witness is None


def test_windowed_examples(sieve_2k):
    assert is_barrier_windowed(8, EPS_1, sieve_2k).is_barrier
    verdict = is_barrier_windowed(7, EPS_1, sieve_2k)
    assert (verdict.is_barrier, verdict.witness, verdict.method) == (False, 6, "windowed")
    with pytest.raises(ValueError):
        is_barrier_windowed(100, EPS_BIG, sieve_2k)
    # trivial barriers skip the window logic
    assert is_barrier_windowed(1, EPS_HALF, sieve_2k).is_barrier
    assert is_barrier_windowed(2, EPS_HALF, sieve_2k).is_barrier


def test_windowed_matches_naive_small_scale():
    sieve = build_sieve(3_000)
    for num, den in ((1, 3), (1, 2), (2, 3), (1, 1)):
        eps = make_eps(num, den)
        for n in range(3, 3_001):
            assert (
                is_barrier_windowed(n, eps, sieve).is_barrier
                == is_barrier_naive(n, eps, sieve).is_barrier
            )


def test_interval_rank_boundaries():
    assert interval_rank(2) == 1
    assert interval_rank(5) == 1
    assert interval_rank(6) == 2
    assert interval_rank(29) == 2
    assert interval_rank(30) == 3
    assert interval_rank(2309) == 4
    assert interval_rank(2310) == 5
    with pytest.raises(ValueError):
        interval_rank(1)


def test_scan_golden_30_matches_trial_oracle():
    assert barriers_trial(30, 1, 1) == GOLDEN_30
    assert [v.n for v in scan_barriers(1, 30, EPS_1)] == GOLDEN_30
    for v in scan_barriers(1, 30, EPS_1):
        assert v.is_barrier and v.witness is None and v.method == "streaming"


def test_scan_examples():
    assert [v.n for v in scan_barriers(1, 100, EPS_BIG)] == [1, 2]
    assert [v.n for v in scan_barriers(1, 6, EPS_1)] == [1, 2, 3, 4, 5, 6]
    assert [v.n for v in scan_barriers(10, 30, EPS_1)] == [n for n in GOLDEN_30 if n >= 10]
    with pytest.raises(ValueError):
        scan_barriers(5, 4, EPS_1)
    with pytest.raises(ValueError):
        scan_barriers(0, 10, EPS_1)


def test_scan_matches_naive_to_10k():
    sieve = build_sieve(10_000)
    for num, den in ((1, 2), (1, 1)):
        eps = make_eps(num, den)
        scanned = {v.n for v in scan_barriers(1, 10_000, eps)}
        oracle = {
            n for n in range(1, 10_001) if is_barrier_naive(n, eps, sieve).is_barrier
        }
        assert scanned == oracle


def test_scan_partitioning_is_invisible():
    reference = [v.n for v in scan_barriers(1, 20_000, EPS_HALF)]
    for seg_len, threads in ((97, 1), (1_000, 3), (1 << 14, 8)):
        got = [v.n for v in scan_barriers(1, 20_000, EPS_HALF, threads=threads, seg_len=seg_len)]
        assert got == reference


def test_guaranteed_bound_examples():
    bound = guaranteed_barrier_bound(EPS_1)
    assert (bound.t, bound.bound) == (1, 6)
    bound = guaranteed_barrier_bound(EPS_HALF)
    assert (bound.t, bound.bound) == (2, 30)
    assert [v.n for v in scan_barriers(1, 30, EPS_HALF)] == list(range(1, 31))
    bound = guaranteed_barrier_bound(make_eps(2, 3))
    assert (bound.t, bound.bound) == (1, 6)
    with pytest.raises(ValueError):
        guaranteed_barrier_bound(EPS_BIG)
    with pytest.raises(OverflowError, match="t=20"):
        guaranteed_barrier_bound(make_eps(1, 20))


def test_family_examples():
    assert non_barrier_family(EPS_1, 2, 1, [1, 2], [1, 1]) == (7, 6)
    assert non_barrier_family(EPS_HALF, 3, 1, [1, 2, 3], [1, 1, 1]) == (31, 30)
    with pytest.raises(ValueError):
        non_barrier_family(EPS_HALF, 2, 1, [1, 2], [1, 1])  # 2*(1/2) = 1 is not > 1
    with pytest.raises(ValueError):
        non_barrier_family(EPS_1, 2, 1, [3, 3], [1, 1])
    with pytest.raises(OverflowError):
        non_barrier_family(EPS_1, 2, 1, [1, 2], [80, 80])


def test_family_randomized_certified(sieve_100k):
    rng = random.Random(99)
    pool = [make_eps(*nd) for nd in ((1, 1), (1, 2), (2, 3), (3, 4), (3, 2), (5, 2))]
    produced = 0
    while produced < 100:
        eps = rng.choice(pool)
        s = rng.randint(1, 4)
        k_top = (s * eps.num - 1) // eps.den
        if k_top < 1:
            continue
        k = rng.randint(1, min(k_top, 3))
        indices = sorted(rng.sample(range(1, 13), s))
        exponents = [rng.randint(1, 2) for _ in range(s)]
        n, witness = 0, 1
        try:
            n, witness = non_barrier_family(eps, s, k, indices, exponents)
        except OverflowError:
            continue
        if n - 1 > sieve_100k.limit:
            continue
        produced += 1
        assert witness == n - k
        assert omega(witness, sieve_100k) == s
        assert not relation_holds(witness, n, eps, sieve_100k)
        assert not is_barrier_naive(n, eps, sieve_100k).is_barrier
    assert produced == 100


def test_census():
    counts = barrier_census(210, [EPS_1, EPS_HALF, make_eps(1, 3)])
    values = [count for _, count in counts]
    assert values[0] <= values[1] <= values[2]
    assert barrier_census(100, [EPS_BIG])[0][1] == 2
    assert barrier_census(6, [EPS_1])[0][1] == 6
