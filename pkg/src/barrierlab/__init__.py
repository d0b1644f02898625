"""Toolkit for barrier verdicts of eps-weighted omega, primorial-interval
densities, and divisor-gap record tables."""

__version__ = "0.1.0"

from .arith import (
    BudgetError,
    Eps,
    FactorSieve,
    build_sieve,
    divisor_count,
    factorize,
    make_eps,
    omega,
    parse_eps,
    primorial,
)
from .barriers import (
    BarrierBound,
    BarrierVerdict,
    barrier_census,
    guaranteed_barrier_bound,
    is_barrier_naive,
    is_barrier_windowed,
    non_barrier_family,
    relation_holds,
    scan_barriers,
)
from .density import (
    DensityRow,
    IntervalSpec,
    count_low_omega,
    density_table,
    interval_index,
    interval_spec,
    verify_partition,
)
from .gaps import (
    ExponentVector,
    GapRecord,
    canonical_rep,
    classify_subsequence,
    gap_bound_check,
    gap_stat,
    gen_subsequence,
    reconstruct,
    record_points,
    scan_gap_stats,
    subsequence_upto,
)
