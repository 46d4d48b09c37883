"""Smoke test for the python bindings."""

import json
import math
import os
import sys


def load_module():
    core_dir = os.environ.get("FREEHYPER_CORE_DIR")
    if core_dir:
        sys.path.insert(0, core_dir)
        import _core as fh
        return fh
    import freehyper as fh
    return fh


def main():
    fh = load_module()

    # pair-partition counts: (s-1)!! for even s
    assert fh.pair_partition_count(2) == 1
    assert fh.pair_partition_count(4) == 3
    assert fh.pair_partition_count(6) == 15
    assert fh.pair_partition_count(3) == 0

    # closed-form limit moments
    assert fh.weighted_pair_moment([(0, 0)] * 4, "constant", 1, 0.5) == 2.5
    assert fh.weighted_pair_moment([(0, 0), (1, 0), (1, 0), (0, 0)]) == 1.0
    assert fh.weighted_pair_moment([(0, 0), (1, 0), (0, 0), (1, 0)]) == 0.0

    # time rules
    assert abs(fh.optimal_time(2, 4) - 0.5 * math.log(3)) < 1e-15
    assert fh.optimal_time(2, 2) == 0.0
    assert fh.beta_scan() <= 0.0

    # group-algebra norm of u + u*: ||.||_4 = 6^(1/4)
    zeta = json.dumps(
        {"flavor": "free", "terms": [{"word": [1], "re": 1, "im": 0},
                                     {"word": [-1], "re": 1, "im": 0}]}
    )
    value, _stab, _k = fh.group_lp_norm(zeta, 4.0, 6)
    assert abs(value - 6.0 ** 0.25) < 1e-8
    assert fh.group_trace_power(zeta, 4) == 6.0 + 0.0j

    # spin hypercontractivity margin at optimal time is nonpositive
    _lhs, _rhs, margin = fh.hc_margin_spin(1, 2, 1, 2.0, 4.0, "optimal", 7)
    assert margin <= 1e-9

    # a fast acceptance suite end-to-end
    ok, records = fh.run_suite("beta", 1)
    assert ok and records and all(r["pass"] for r in records)

    print("python smoke: OK")


if __name__ == "__main__":
    main()
