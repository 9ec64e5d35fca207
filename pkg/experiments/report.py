"""
experiments/report.py
=====================

Plans and reports for Monte Carlo runs.

ExperimentPlan    –  validated run parameters.
TrialRecord       –  one sampled configuration and its per-group counts.
WitnessRecord     –  everything needed to replay one witness.
ExperimentReport  –  records + aggregates; JSON, CSV and text renderings.
verify_report     –  replays a saved JSON report.

JSON is written with sorted keys so two runs of one plan give identical
bytes once the timing field is left out.
"""

import json
from dataclasses import dataclass, field

import pandas as pd

from core.entities import OUTSIDE_HULL, PointConfiguration, SubtransInstance
from core.errors import InputError, SubtransError
from core.exactlin import RationalMatrix, format_vector, vector
from core.settings import (
    CLOSURE_CAP,
    DEFAULT_DENOM_BOUND,
    DEFAULT_SEED,
    REPORT_FORMAT_VERSION,
    TUPLE_SPACE_CAP,
)
from geometry.configuration import phi
from subtrans.decision import verify_witness
from symmetry.builtin_groups import parse_group_spec
from symmetry.matrix_group import ElementTuple
from symmetry.tuples import TupleMode


@dataclass(frozen=True)
class ExperimentPlan:
    d: int
    group_specs: tuple
    trials: int
    seed: int = DEFAULT_SEED
    denom_bound: int = DEFAULT_DENOM_BOUND
    tuple_mode: TupleMode = TupleMode()
    stop_on_first_witness: bool = False
    tuple_cap: int = TUPLE_SPACE_CAP
    closure_cap: int = CLOSURE_CAP

    def __post_init__(self):
        object.__setattr__(self, "group_specs", tuple(self.group_specs))
        if self.d < 2:
            raise InputError(f"must be >= 2, got {self.d}", field="d")
        if self.trials < 1:
            raise InputError(f"must be >= 1, got {self.trials}", field="trials")
        if self.denom_bound < 1:
            raise InputError(f"must be >= 1, got {self.denom_bound}", field="denom_bound")
        if self.seed < 0:
            raise InputError(f"must be non-negative, got {self.seed}", field="seed")
        if not self.group_specs:
            raise InputError("at least one group is required", field="group")

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "groups": list(self.group_specs),
            "trials": self.trials,
            "seed": self.seed,
            "denom_bound": self.denom_bound,
            "tuple_mode": self.tuple_mode.describe(),
            "stop_on_first_witness": self.stop_on_first_witness,
        }


@dataclass
class TrialRecord:
    trial: int
    digest: str
    discarded: int
    witnesses: dict = field(default_factory=dict)  # group spec -> count
    millis: dict = field(default_factory=dict)     # group spec -> int, not serialized

    @property
    def degenerate(self) -> bool:
        return self.discarded > 0

    @property
    def witness_total(self) -> int:
        return sum(self.witnesses.values())

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "digest": self.digest,
            "discarded": self.discarded,
            "witnesses": dict(self.witnesses),
        }


@dataclass(frozen=True)
class WitnessRecord:
    trial: int
    group: str
    tuple: tuple
    points: list
    alpha: list
    b: list
    A: list

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "group": self.group,
            "tuple": list(self.tuple),
            "points": self.points,
            "alpha": self.alpha,
            "b": self.b,
            "A": self.A,
        }

    @classmethod
    def from_decision(cls, trial: int, group: str, config: PointConfiguration, decision):
        return cls(
            trial=trial,
            group=group,
            tuple=tuple(decision.instance.tuple.indices),
            points=config.to_strings(),
            alpha=decision.instance.alpha.to_strings(),
            b=format_vector(decision.b),
            A=decision.A.to_strings(),
        )


@dataclass
class ExperimentReport:
    plan: ExperimentPlan
    records: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    wall_time: float = 0.0

    # -------------------------- aggregates -------------------------------- #
    @property
    def total_trials(self) -> int:
        return len(self.records)

    @property
    def total_witnesses(self) -> int:
        return sum(r.witness_total for r in self.records)

    @property
    def total_discarded(self) -> int:
        return sum(r.discarded for r in self.records)

    @property
    def degenerate_trials(self) -> int:
        return sum(1 for r in self.records if r.degenerate)

    def aggregate(self) -> dict:
        return {
            "total_trials": self.total_trials,
            "total_witnesses": self.total_witnesses,
            "total_discarded": self.total_discarded,
            "degenerate_trials": self.degenerate_trials,
        }

    # -------------------------- renderings -------------------------------- #
    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "format_version": REPORT_FORMAT_VERSION,
            "plan": self.plan.to_json(),
            "aggregate": self.aggregate(),
            "trials": [r.to_json() for r in self.records],
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if include_timing:
            out["aggregate"]["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), indent=2, sort_keys=True)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "trial": r.trial,
                "group": spec,
                "witnesses": count,
                "degenerate": r.discarded,
                "millis": r.millis.get(spec, 0),
            }
            for r in self.records
            for spec, count in r.witnesses.items()
        ]
        return pd.DataFrame(rows, columns=["trial", "group", "witnesses", "degenerate", "millis"])

    def to_csv(self, path):
        self.to_frame().to_csv(path, index=False)

    def render_text(self) -> str:
        plan = self.plan
        lines = [
            f"Monte Carlo: d = {plan.d}, {plan.trials} trials, seed {plan.seed}, "
            f"denominators <= {plan.denom_bound}, tuples {plan.tuple_mode.describe()}",
            f"groups: {', '.join(plan.group_specs)}",
            f"trials run        : {self.total_trials}",
            f"witnesses         : {self.total_witnesses}",
            f"degenerate trials : {self.degenerate_trials} ({self.total_discarded} draws discarded)",
        ]
        if self.witnesses:
            lines.append("witnessing configurations:")
            for w in self.witnesses:
                lines.append(f"  trial {w.trial} {w.group} tuple {list(w.tuple)} points {w.points}")
        else:
            lines.append("none found")
        return "\n".join(lines)


# --------------------------------------------------------------------------- #
# Replay
# --------------------------------------------------------------------------- #

def _replay_witness(w: dict, closure_cap: int) -> bool:
    group = parse_group_spec(w["group"], closure_cap)
    config = PointConfiguration(tuple(tuple(p) for p in w["points"]))
    alpha = phi(config)
    if alpha is OUTSIDE_HULL or alpha.to_strings() != list(w["alpha"]):
        return False
    inst = SubtransInstance(alpha, ElementTuple(group, tuple(w["tuple"])))
    A = RationalMatrix.from_rows(w["A"], cols=alpha.d)
    return verify_witness(inst, vector(w["b"]), A)


def verify_report(data: dict, closure_cap: int = CLOSURE_CAP) -> tuple[bool, list[str]]:
    """
    Re-check a loaded JSON report: aggregates against per-trial sums and
    every witness against its group. Returns (ok, problems).
    """
    problems = []
    try:
        if data.get("format_version") != REPORT_FORMAT_VERSION:
            problems.append(f"unsupported format version {data.get('format_version')!r}")
        trials = data["trials"]
        aggregate = data["aggregate"]
        sums = {
            "total_trials": len(trials),
            "total_witnesses": sum(sum(t["witnesses"].values()) for t in trials),
            "total_discarded": sum(t["discarded"] for t in trials),
            "degenerate_trials": sum(1 for t in trials if t["discarded"] > 0),
        }
        for key, value in sums.items():
            if aggregate.get(key) != value:
                problems.append(f"aggregate {key} = {aggregate.get(key)} but records sum to {value}")
        if len(data["witnesses"]) != sums["total_witnesses"]:
            problems.append(
                f"{len(data['witnesses'])} witness records for {sums['total_witnesses']} counted"
            )
        for k, w in enumerate(data["witnesses"]):
            if not _replay_witness(w, closure_cap):
                problems.append(f"witness {k} (trial {w['trial']}, {w['group']}) does not verify")
    except (KeyError, TypeError, AttributeError) as exc:
        problems.append(f"malformed report: missing or bad field {exc}")
    except SubtransError as exc:
        problems.append(f"replay error: {exc}")
    return not problems, problems
