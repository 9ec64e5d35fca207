"""
scripts/run_oracle_agreement.py
===============================

Compares the rank test against the full-system oracle on random instances.
"""

import argparse
import sys

import numpy as np

from core.entities import Outcome
from subtrans.decision import decide
from subtrans.oracle import oracle_decide, random_instance
from symmetry.builtin_groups import parse_group_spec

GROUPS = [
    "cyclic:2:regular", "cyclic:3:regular", "cyclic:4:regular",
    "cyclic:5:regular", "cyclic:6:regular",
    "symmetric:3:natural", "hyperoctahedral:2", "c4:rotation2d",
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    groups = [parse_group_spec(s) for s in GROUPS]
    rng = np.random.default_rng(args.seed)
    agree = witnesses = 0
    for _ in range(args.instances):
        inst = random_instance(rng, groups, d_choices=(2, 3), denom_bound=20)
        outcome = decide(inst).outcome
        if outcome == oracle_decide(inst):
            agree += 1
        else:
            print(f"❌ disagreement: {inst.describe()}")
        witnesses += outcome is Outcome.WITNESS

    mark = "✅" if agree == args.instances else "❌"
    print(f"{mark} {agree}/{args.instances} instances agree ({witnesses} witnesses)")
    return 0 if agree == args.instances else 1


if __name__ == "__main__":
    sys.exit(main())
