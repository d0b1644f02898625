import numpy as np
import pytest

from _oracles import divisor_count_trial, gap_trial
from barrierlab import (
    BudgetError,
    build_sieve,
    canonical_rep,
    classify_subsequence,
    divisor_count,
    gap_bound_check,
    gap_stat,
    gen_subsequence,
    reconstruct,
    record_points,
    scan_gap_stats,
    subsequence_upto,
)
from barrierlab.arith import nth_primes
from barrierlab.gaps import divisor_table


def test_gap_stat_examples(sieve_2k):
    rec = gap_stat(3, sieve_2k)
    assert (rec.gap, rec.argmax_m, rec.lemma_bound) == (1, 2, 1)
    rec = gap_stat(13, sieve_2k)
    assert (rec.gap, rec.argmax_m, rec.lemma_bound) == (5, 12, 5)
    assert gap_stat(7, sieve_2k).gap == 3
    with pytest.raises(ValueError):
        gap_stat(1, sieve_2k)


def test_gap_stat_matches_trial_oracle(sieve_2k):
    for n in (2, 3, 6, 7, 13, 100, 721):
        rec = gap_stat(n, sieve_2k)
        assert (rec.gap, rec.argmax_m) == gap_trial(n)


def test_gap_stat_argmax_prefers_largest(sieve_2k):
    # at n = 6 the maximum 7 is attained at both m = 4 and m = 5
    assert gap_stat(6, sieve_2k).argmax_m == 5


def test_scan_examples():
    records = list(scan_gap_stats(13))
    assert records[-1] == gap_stat(13, build_sieve(13))
    assert (records[-1].n, records[-1].gap, records[-1].argmax_m, records[-1].lemma_bound) == (13, 5, 12, 5)
    only = list(scan_gap_stats(2))
    assert len(only) == 1
    assert (only[0].n, only[0].gap, only[0].argmax_m, only[0].lemma_bound) == (2, 0, 1, 0)
    nontrivial = [r for r in scan_gap_stats(3) if r.gap > 0]
    assert nontrivial == [records[1]]
    assert (nontrivial[0].n, nontrivial[0].gap) == (3, 1)


def test_scan_agrees_with_brute_force(sieve_2k):
    for rec in scan_gap_stats(2_000):
        assert rec == gap_stat(rec.n, sieve_2k)


def test_scan_record_invariants(sieve_2k):
    for rec in scan_gap_stats(2_000):
        assert rec.argmax_m < rec.n
        assert rec.argmax_m + divisor_count(rec.argmax_m, sieve_2k) == rec.gap + rec.n
        assert rec.gap >= rec.lemma_bound >= 0


def test_prefix_max_recurrence_to_100k():
    gaps = np.array([rec.gap for rec in scan_gap_stats(100_000)], dtype=np.int64)
    assert np.all(np.diff(gaps) >= -1)


def test_record_points_small():
    records = record_points(13)
    assert [(r.n, r.gap) for r in records] == [(2, 0), (3, 1), (5, 2), (7, 3), (13, 5)]
    assert [r.n for r in record_points(2)] == [2]


def test_canonical_rep_examples(sieve_2k):
    vec = canonical_rep(13, sieve_2k)
    assert (vec.s, vec.alphas) == (2, (2, 1))
    assert canonical_rep(3, sieve_2k).alphas == (1,)
    assert canonical_rep(4, sieve_2k).alphas == (0, 1)  # 3 = 2^0 * 3^1
    for n in (0, 1, 2):
        with pytest.raises(ValueError):
            canonical_rep(n, sieve_2k)


def test_canonical_roundtrip_to_10k(sieve_100k):
    for n in range(3, 10_001):
        vec = canonical_rep(n, sieve_100k)
        assert vec.alphas[-1] >= 1
        assert reconstruct(vec) == n


def test_classify_examples(sieve_2k):
    assert classify_subsequence(9, sieve_2k) == 1
    assert classify_subsequence(10, sieve_2k) == 2
    assert classify_subsequence(31, sieve_2k) == 3


def test_gen_subsequence_examples():
    assert gen_subsequence(1, 5) == [3, 5, 9, 17, 33]
    assert gen_subsequence(2, 5) == [4, 7, 10, 13, 19]
    assert gen_subsequence(2, 1) == [4]
    for s, count in ((0, 1), (1, 0)):
        with pytest.raises(ValueError):
            gen_subsequence(s, count)


def test_gen_subsequence_overflow():
    assert gen_subsequence(1, 63)[-1] == 2**63 + 1
    with pytest.raises(OverflowError):
        gen_subsequence(1, 64)


def test_subsequences_grow_without_bound():
    # term k of s=1 is 2^k + 1, so the sequence passes any fixed bound
    assert gen_subsequence(1, 30)[-1] == 2**30 + 1 > 10**9
    for s, count in ((1, 63), (2, 200), (3, 200), (4, 200)):
        values = gen_subsequence(s, count)
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] > 10**4


def test_subsequence_upto():
    assert subsequence_upto(1, 40) == [3, 5, 9, 17, 33]
    assert subsequence_upto(2, 20) == [4, 7, 10, 13, 19]
    assert subsequence_upto(5, 10) == []  # p_5 = 11, smallest member is 12


def test_subsequences_disjoint_increasing_classified(sieve_100k):
    counts = {1: 63, 2: 200, 3: 200, 4: 200}  # s=1 has 63 terms inside 64 bits
    seqs = {s: gen_subsequence(s, c) for s, c in counts.items()}
    for s, values in seqs.items():
        assert all(a < b for a, b in zip(values, values[1:]))
        p_s = nth_primes(s)[-1]
        for value in values:
            rest = value - 1
            assert rest % p_s == 0
            for p in nth_primes(s):
                while rest % p == 0:
                    rest //= p
            assert rest == 1  # no prime factor beyond p_s
            if value - 1 <= sieve_100k.limit:
                assert classify_subsequence(value, sieve_100k) == s
    keys = sorted(seqs)
    for i, s1 in enumerate(keys):
        for s2 in keys[i + 1 :]:
            assert not set(seqs[s1]) & set(seqs[s2])


def test_merge_matches_classifier(sieve_100k):
    horizon = 10_000
    merged = sorted(x for s in range(1, 5) for x in subsequence_upto(s, horizon))
    classified = [
        n for n in range(3, horizon + 1) if classify_subsequence(n, sieve_100k) <= 4
    ]
    assert merged == classified


def test_full_coverage_at_horizon():
    horizon = 10_000
    union = set()
    for s in range(1, 1_230):
        if nth_primes(s)[-1] > horizon - 1:
            continue
        union.update(subsequence_upto(s, horizon))
    assert union == set(range(3, horizon + 1))


def test_gap_bound_check(sieve_2k):
    assert gap_bound_check(13, sieve_2k) == (5, True)
    assert gap_bound_check(721, sieve_2k) == (29, True)
    for n in range(3, 2_001):
        vec = canonical_rep(n, sieve_2k)
        product = 1
        total = 0
        for _, a in vec.entries:
            product *= a + 1
            total += a
        assert product - 1 >= total
        assert product - 1 == divisor_count(n - 1, sieve_2k) - 1


def test_divisor_table_matches_trial():
    d = divisor_table(2_000)
    for m in range(1, 2_000):
        assert int(d[m]) == divisor_count_trial(m)
    with pytest.raises(BudgetError):
        divisor_table(100, budget=50)
