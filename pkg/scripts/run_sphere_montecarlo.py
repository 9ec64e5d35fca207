"""
scripts/run_sphere_montecarlo.py
================================

Desk-scale Monte Carlo: 1000 random circle configurations (d = 2) searched
exhaustively against C4, C5 and C6. Runs the plan twice to confirm the
JSON reports match byte for byte, then writes report + CSV under runs/.
"""

import argparse
import os
import sys

from experiments.montecarlo import run_montecarlo
from experiments.report import ExperimentPlan, verify_report

GROUPS = ("c4:rotation2d", "cyclic:5:regular", "cyclic:6:regular")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--denom-bound", type=int, default=50)
    parser.add_argument("--out", default="runs")
    args = parser.parse_args()

    plan = ExperimentPlan(
        d=2, group_specs=GROUPS, trials=args.trials,
        seed=args.seed, denom_bound=args.denom_bound,
    )

    print(f"🚀 Monte Carlo run 1 ({args.trials} trials, seed {args.seed})")
    first = run_montecarlo(plan)
    print("🚀 Monte Carlo run 2 (determinism check)")
    second = run_montecarlo(plan)

    same = first.dumps(include_timing=False) == second.dumps(include_timing=False)
    print(f"{'✅' if same else '❌'} reports identical (timing excluded)")

    ok, problems = verify_report(first.to_json())
    print(f"{'✅' if ok else '❌'} report replay: {len(first.witnesses)} witness(es) re-verified")
    for problem in problems:
        print(f"   • {problem}")

    os.makedirs(args.out, exist_ok=True)
    stem = os.path.join(args.out, f"montecarlo_seed{args.seed}")
    with open(f"{stem}.json", "w") as fh:
        fh.write(first.dumps())
    first.to_csv(f"{stem}.csv")
    print(f"📄 Saved → {stem}.json, {stem}.csv")

    print()
    print(first.render_text())
    return 0 if same and ok else 1


if __name__ == "__main__":
    sys.exit(main())
