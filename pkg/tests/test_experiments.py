import json

import pandas as pd
import pytest

from core.errors import GroupSpecError, InputError
from experiments.montecarlo import MonteCarloRunner, run_montecarlo
from experiments.report import ExperimentPlan, verify_report
from symmetry.tuples import TupleMode

SMALL_GROUPS = ("c4:rotation2d", "cyclic:3:regular")


def small_plan(**overrides):
    params = dict(d=2, group_specs=SMALL_GROUPS, trials=4, seed=3, denom_bound=20)
    params.update(overrides)
    return ExperimentPlan(**params)


@pytest.fixture
def square_sampler(square):
    def sampler(d, denom_bound, seed, trial):
        return square, 0
    return sampler


# --------------------------------------------------------------------------- #
# Plans
# --------------------------------------------------------------------------- #

@pytest.mark.parametrize("overrides, field", [
    ({"d": 1}, "d"),
    ({"trials": 0}, "trials"),
    ({"denom_bound": 0}, "denom_bound"),
    ({"seed": -1}, "seed"),
    ({"group_specs": ()}, "group"),
])
def test_plan_validation(overrides, field):
    with pytest.raises(InputError) as info:
        small_plan(**overrides)
    assert info.value.field == field


def test_bad_group_fails_before_any_trial():
    with pytest.raises(GroupSpecError):
        MonteCarloRunner(small_plan(group_specs=("dihedral:4",)))


def test_plan_json():
    data = small_plan().to_json()
    assert data["groups"] == list(SMALL_GROUPS)
    assert data["tuple_mode"] == TupleMode().describe()


# --------------------------------------------------------------------------- #
# Runs
# --------------------------------------------------------------------------- #

def test_small_run_is_deterministic():
    first = run_montecarlo(small_plan())
    second = run_montecarlo(small_plan())
    assert first.dumps(include_timing=False) == second.dumps(include_timing=False)
    assert [r.digest for r in first.records] == [r.digest for r in second.records]


def test_seed_changes_the_samples():
    a = run_montecarlo(small_plan(seed=1))
    b = run_montecarlo(small_plan(seed=2))
    assert [r.digest for r in a.records] != [r.digest for r in b.records]


def test_aggregates_match_records():
    report = run_montecarlo(small_plan())
    assert report.total_trials == 4
    assert report.total_witnesses == len(report.witnesses)
    for record in report.records:
        assert set(record.witnesses) == set(SMALL_GROUPS)
    agg = report.to_json()["aggregate"]
    assert agg["total_trials"] == 4
    assert "wall_time" in agg
    assert "wall_time" not in report.to_json(include_timing=False)["aggregate"]


def test_injected_witness_sampler(square_sampler, square):
    plan = small_plan(group_specs=("c4:rotation2d",), trials=2, stop_on_first_witness=True)
    report = run_montecarlo(plan, square_sampler)
    assert report.total_witnesses == 2
    assert [w.trial for w in report.witnesses] == [0, 1]
    assert report.witnesses[0].points == square.to_strings()
    ok, problems = verify_report(json.loads(report.dumps()))
    assert ok, problems


def test_sampled_tuple_mode(square_sampler):
    plan = small_plan(group_specs=("c4:rotation2d",), trials=1,
                      tuple_mode=TupleMode.sampled(seed=0, count=16))
    report = MonteCarloRunner(plan, square_sampler).run()
    assert report.total_trials == 1
    assert report.to_json()["plan"]["tuple_mode"] == TupleMode.sampled(0, 16).describe()


# --------------------------------------------------------------------------- #
# Verification and renderings
# --------------------------------------------------------------------------- #

@pytest.fixture
def witness_report(square_sampler):
    plan = small_plan(group_specs=("c4:rotation2d",), trials=1, stop_on_first_witness=True)
    return json.loads(run_montecarlo(plan, square_sampler).dumps())


def test_tampered_witness_fails(witness_report):
    witness_report["witnesses"][0]["b"] = ["5", "7"]
    ok, problems = verify_report(witness_report)
    assert not ok
    assert "does not verify" in problems[0]


def test_tampered_aggregate_fails(witness_report):
    witness_report["aggregate"]["total_witnesses"] = 0
    ok, problems = verify_report(witness_report)
    assert not ok
    assert any("total_witnesses" in p for p in problems)


def test_malformed_report():
    ok, problems = verify_report({"format_version": 1})
    assert not ok
    assert problems[0].startswith("malformed report")


def test_csv_columns(tmp_path):
    report = run_montecarlo(small_plan())
    path = tmp_path / "trials.csv"
    report.to_csv(path)
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["trial", "group", "witnesses", "degenerate", "millis"]
    assert len(frame) == 4 * len(SMALL_GROUPS)


def test_text_without_witnesses():
    plan = small_plan(group_specs=("cyclic:1:regular",))
    text = run_montecarlo(plan).render_text()
    assert "none found" in text
    assert "trials run        : 4" in text


@pytest.mark.slow
def test_thousand_trials():
    plan = ExperimentPlan(
        d=2, trials=1000, seed=7, denom_bound=50,
        group_specs=("c4:rotation2d", "cyclic:3:regular", "symmetric:3:natural"),
    )
    report = run_montecarlo(plan)
    assert report.total_trials == 1000
    # witnesses do occur (e.g. parallel chords for c4); each must replay
    ok, problems = verify_report(json.loads(report.dumps()))
    assert ok, problems
    again = run_montecarlo(plan)
    assert again.dumps(include_timing=False) == report.dumps(include_timing=False)


@pytest.mark.slow
def test_circle_plan_for_c4_c5_c6(record_property):
    plan = ExperimentPlan(
        d=2, trials=1000, seed=7, denom_bound=50,
        group_specs=("c4:rotation2d", "cyclic:5:regular", "cyclic:6:regular"),
    )
    report = run_montecarlo(plan)
    record_property("witnesses", report.total_witnesses)
    assert report.total_trials == 1000
    assert report.total_witnesses == len(report.witnesses)
    ok, problems = verify_report(json.loads(report.dumps()))
    assert ok, problems
    again = run_montecarlo(plan)
    assert again.dumps(include_timing=False) == report.dumps(include_timing=False)
