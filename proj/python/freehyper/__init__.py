"""Spin/free-group semigroup contractivity toolkit."""

from ._core import (
    beta_scan,
    doubled_time,
    group_lp_norm,
    group_trace_power,
    hc_margin_spin,
    improvement_time,
    mc_moment_study,
    optimal_time,
    pair_partition_count,
    run_suite,
    suite_names,
    weighted_pair_moment,
)

__all__ = [
    "beta_scan",
    "doubled_time",
    "group_lp_norm",
    "group_trace_power",
    "hc_margin_spin",
    "improvement_time",
    "mc_moment_study",
    "optimal_time",
    "pair_partition_count",
    "run_suite",
    "suite_names",
    "weighted_pair_moment",
]
