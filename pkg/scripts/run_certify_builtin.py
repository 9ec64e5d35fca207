"""
scripts/run_certify_builtin.py
==============================

Runs the genericity certificate over the builtin sweep and prints one
✅/❌ line per group. Exits non-zero if any tuple fails.
"""

import sys
import time

from subtrans.certificate import certify_group
from symmetry.builtin_groups import parse_group_spec
from symmetry.tuples import TupleMode

SWEEP = [
    ("c4:rotation2d", 2, TupleMode.exhaustive()),
    ("symmetric:3:natural", 2, TupleMode.exhaustive()),
    ("cyclic:5:regular", 3, TupleMode.exhaustive()),
    ("hyperoctahedral:3", 3, TupleMode.sampled(seed=0, count=1000)),
]


def main() -> int:
    all_ok = True
    for spec, d, mode in SWEEP:
        started = time.perf_counter()
        summary = certify_group(parse_group_spec(spec), d, mode)
        elapsed = time.perf_counter() - started
        mark = "✅" if summary.ok else "❌"
        print(f"{mark}  {spec:<22} d={d}  {summary.passed}/{summary.checked} pass "
              f"(max n' = {summary.max_n_prime}, {elapsed:.1f}s)")
        all_ok &= summary.ok
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
