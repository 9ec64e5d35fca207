"""
app.py
======

Command-line entry point.

    python app.py check      --input square.json --group c4:rotation2d
    python app.py certify    --group symmetric:3:natural --d 2
    python app.py montecarlo --d 2 --trials 1000 --seed 7 --group c4:rotation2d --json
    python app.py montecarlo --verify-report report.json
    python app.py phi        --input square.json
    python app.py groups list

Exit codes: 0 success, 1 certificate or replay failure, 2 bad input,
3 cap exceeded.
"""

import argparse
import json
import sys
from pathlib import Path

from core.entities import OUTSIDE_HULL
from core.errors import CapExceededError, CertificateFailure, InputError, OutsideHullError
from core.exactlin import format_vector
from core.log import set_quiet
from core.settings import (
    CLOSURE_CAP,
    DEFAULT_DENOM_BOUND,
    DEFAULT_SEED,
    TUPLE_SPACE_CAP,
)
from experiments.montecarlo import run_montecarlo
from experiments.report import ExperimentPlan, verify_report
from geometry.configuration import load_configuration, on_common_sphere, phi
from subtrans.certificate import certify_group
from subtrans.search import search_tuples
from symmetry.builtin_groups import list_builtin_families, parse_group_spec
from symmetry.tuples import TupleMode

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


# --------------------------------------------------------------------------- #
# Helpers
# --------------------------------------------------------------------------- #

def tuple_mode(args) -> TupleMode:
    if args.sample is not None:
        return TupleMode.sampled(args.seed, args.sample)
    return TupleMode.exhaustive()


def emit(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=True))


def witness_lines(t, decision) -> list[str]:
    lines = [
        f"witness: tuple {list(t.indices)}  (n = {decision.n}, n' = {decision.n_prime}, "
        f"dim Fix = {decision.fix_dim}, dim ker M = {decision.kernel_dim})",
        f"  b = {format_vector(decision.b)}",
        f"  A = {decision.A.to_strings()}",
    ]
    if decision.affine_map is not None:
        lines.append(f"  f(x) = {decision.affine_map.linear.to_strings()} x + "
                     f"{format_vector(decision.affine_map.offset)}")
    return lines


# --------------------------------------------------------------------------- #
# Commands
# --------------------------------------------------------------------------- #

def cmd_check(args) -> int:
    config = load_configuration(args.input)
    group = parse_group_spec(args.group, args.closure_cap)
    alpha = phi(config)
    if alpha is OUTSIDE_HULL:
        if args.json:
            emit({"outcome": "not_applicable", "group": group.label})
        else:
            print("not applicable: last point lies outside the affine hull of the first d+1")
        return EXIT_OK

    mode = tuple_mode(args)
    found = search_tuples(config, group, mode, first_only=args.first, cap=args.tuple_cap)
    if args.json:
        emit({
            "group": group.label,
            "alpha": alpha.to_strings(),
            "cospherical": on_common_sphere(config.points),
            "mode": mode.describe(),
            "witnesses": [d.to_json() for _, d in found],
        })
        return EXIT_OK

    print(f"configuration: d = {config.intrinsic_d}, N = {config.ambient_dim}, "
          f"digest {config.digest()}")
    print(f"alpha = {' '.join(alpha.to_strings())}")
    print(f"cospherical: {'yes' if on_common_sphere(config.points) else 'no'}")
    print(f"group {group.label} (order {len(group)}), {mode.describe()}")
    if not found:
        print("none found")
    for t, decision in found:
        print("\n".join(witness_lines(t, decision)))
    return EXIT_OK


def cmd_certify(args) -> int:
    group = parse_group_spec(args.group, args.closure_cap)
    summary = certify_group(group, args.d, tuple_mode(args), cap=args.tuple_cap)
    if args.json:
        emit(summary.to_json())
    else:
        print(summary.render())
    if not summary.ok:
        for failure in summary.failures:
            print(f"certificate failure: {json.dumps(failure)}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_montecarlo(args) -> int:
    if args.verify_report:
        path = Path(args.verify_report)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load {path}: {exc}", field="verify-report") from exc
        ok, problems = verify_report(data, args.closure_cap)
        for problem in problems:
            print(f"FAILED: {problem}")
        print("report verified" if ok else f"{len(problems)} problem(s) found")
        return EXIT_OK if ok else EXIT_FAILURE

    if args.d is None or args.trials is None or not args.group:
        raise InputError("--d, --trials and at least one --group are required", field="montecarlo")
    plan = ExperimentPlan(
        d=args.d,
        group_specs=tuple(args.group),
        trials=args.trials,
        seed=args.seed,
        denom_bound=args.denom_bound,
        tuple_mode=tuple_mode(args),
        stop_on_first_witness=args.first,
        tuple_cap=args.tuple_cap,
        closure_cap=args.closure_cap,
    )
    report = run_montecarlo(plan)
    if args.csv:
        report.to_csv(args.csv)
    print(report.dumps() if args.json else report.render_text())
    return EXIT_OK


def cmd_phi(args) -> int:
    alpha = phi(load_configuration(args.input))
    if alpha is OUTSIDE_HULL:
        raise OutsideHullError()
    print(" ".join(alpha.to_strings()))
    return EXIT_OK


def cmd_groups(args) -> int:
    for syntax, description, order in list_builtin_families():
        print(f"{syntax:<24} order {order:<16} {description}")
    return EXIT_OK


# --------------------------------------------------------------------------- #
# Parser
# --------------------------------------------------------------------------- #

def _add_tuple_flags(p):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", help="every tuple (default)")
    group.add_argument("--sample", type=int, metavar="N", help="N seeded random tuples")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="app.py", description="Exact affine subtransitivity checks.")
    parser.add_argument("--quiet", action="store_true", help="silence progress logging")
    parser.add_argument("--tuple-cap", type=int, default=TUPLE_SPACE_CAP)
    parser.add_argument("--closure-cap", type=int, default=CLOSURE_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="search a configuration for witnessing tuples")
    p.add_argument("--input", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--first", action="store_true", help="stop at the first witness")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    _add_tuple_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="check the genericity certificate on a group")
    p.add_argument("--group", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    _add_tuple_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("montecarlo", help="sample spherical configurations and search them")
    p.add_argument("--d", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--denom-bound", type=int, default=DEFAULT_DENOM_BOUND)
    p.add_argument("--group", action="append", default=[])
    p.add_argument("--first", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--verify-report", metavar="PATH")
    _add_tuple_flags(p)
    p.set_defaults(func=cmd_montecarlo)

    p = sub.add_parser("phi", help="print the affine coordinates of the last point")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("groups", help="group families")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_groups)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    set_quiet(args.quiet)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CertificateFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
