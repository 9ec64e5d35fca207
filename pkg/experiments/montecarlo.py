"""
experiments/montecarlo.py
=========================

MonteCarloRunner – samples spherical configurations trial by trial and
                   searches every planned group for witnessing tuples.

Trial k draws from ``np.random.default_rng([seed, k])``, so a report is a
pure function of the plan (wall-clock fields aside). Witnesses are
verified, logged and counted; judging them is left to the caller.
"""

import time
from typing import Callable

from core.log import log
from core.settings import REPORT_INTERVAL
from geometry.sphere_sampler import sample_configuration
from subtrans.search import TupleSearcher
from symmetry.builtin_groups import parse_group_spec

from .report import ExperimentPlan, ExperimentReport, TrialRecord, WitnessRecord

# (d, denom_bound, seed, trial) -> (PointConfiguration, discarded draws)
Sampler = Callable[..., tuple]


class MonteCarloRunner:
    """
    Runs an ExperimentPlan.

    For each trial:
        * sample d+2 points (degenerate draws are resampled and counted)
        * search every group for witnessing tuples
        * record the per-group witness counts and timings
        * print running progress
    """

    def __init__(self, plan: ExperimentPlan, sampler: Sampler | None = None,
                 report_interval: int = REPORT_INTERVAL):
        self.plan = plan
        self.sampler = sampler or sample_configuration
        self.report_interval = report_interval
        # groups are parsed up front so a bad spec fails before any trial runs
        self.groups = {
            spec: parse_group_spec(spec, plan.closure_cap) for spec in plan.group_specs
        }

    def log(self, msg: str):
        log(msg, tag="MC")

    def run_trial(self, trial: int, report: ExperimentReport) -> TrialRecord:
        plan = self.plan
        config, discarded = self.sampler(plan.d, plan.denom_bound, plan.seed, trial)
        record = TrialRecord(trial, config.digest(), discarded)
        for spec, group in self.groups.items():
            started = time.perf_counter()
            searcher = TupleSearcher(config, group)
            found = searcher.run(
                plan.tuple_mode, first_only=plan.stop_on_first_witness, cap=plan.tuple_cap
            )
            record.millis[spec] = int((time.perf_counter() - started) * 1000)
            record.witnesses[spec] = len(found)
            for _, decision in found:
                report.witnesses.append(WitnessRecord.from_decision(trial, spec, config, decision))
                self.log(f"⚠️  trial {trial}: witness for {spec} at {config.to_strings()}")
        return record

    def run(self) -> ExperimentReport:
        plan = self.plan
        report = ExperimentReport(plan)
        self.log(f"🚀  {plan.trials} trials, d = {plan.d}, groups {list(self.groups)}")
        started = time.perf_counter()
        for trial in range(plan.trials):
            report.records.append(self.run_trial(trial, report))
            done = trial + 1
            if done % self.report_interval == 0:
                self.log(f"🟢  {done} / {plan.trials} trials, {report.total_witnesses} witnesses")
        report.wall_time = time.perf_counter() - started
        self.log(
            f"✅  finished: {report.total_witnesses} witnesses, "
            f"{report.total_discarded} degenerate draws discarded"
        )
        return report


def run_montecarlo(plan: ExperimentPlan, sampler: Sampler | None = None) -> ExperimentReport:
    return MonteCarloRunner(plan, sampler).run()
