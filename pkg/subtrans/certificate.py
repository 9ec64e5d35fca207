"""
subtrans/certificate.py
=======================

Genericity certificate at α* = (1/(2d), …, 1/(2d)).

The configuration {0, e_1, …, e_d, α*} is not in convex position, so it lies
on no sphere and no orbit of a finite orthogonal group can contain its
affine image. Hence M(α*) has no kernel outside Fix for every tuple. A
nonsingular quotient at one α shows some n′×n′ minor of M(α) is a nonzero
polynomial, so the witnessing α form a proper subvariety of Q^d.
"""

from dataclasses import dataclass, field

from sympy import QQ

from core.entities import AlphaCoordinates, Outcome, SubtransDecision, SubtransInstance
from core.errors import CertificateFailure, InputError
from core.log import log
from core.settings import TUPLE_SPACE_CAP
from geometry.configuration import convex_position, on_common_sphere, witness_configuration
from symmetry.matrix_group import ElementTuple, FiniteMatrixGroup
from symmetry.tuples import TupleMode, enumerate_tuples

from .decision import decide


def witness_alpha(d: int) -> AlphaCoordinates:
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}", field="d")
    return AlphaCoordinates(tuple(QQ(1, 2 * d) for _ in range(d)))


def certify_tuple(t: ElementTuple) -> SubtransDecision:
    """Full decision at α* for a tuple of length d+1."""
    return decide(SubtransInstance(witness_alpha(len(t) - 1), t))


def certify_generic(t: ElementTuple) -> bool:
    return certify_tuple(t).outcome is Outcome.NO_NONCONSTANT_SOLUTION


def require_generic(t: ElementTuple) -> SubtransDecision:
    """``certify_tuple`` that raises CertificateFailure instead of returning a witness."""
    decision = certify_tuple(t)
    if decision.is_witness:
        raise CertificateFailure(decision.instance.describe())
    return decision


def _yes_no(flag) -> str:
    return "?" if flag is None else ("yes" if flag else "no")


@dataclass
class CertificationSummary:
    group: str
    d: int
    mode: str
    checked: int = 0
    passed: int = 0
    max_n_prime: int = 0
    failures: list = field(default_factory=list)
    # geometry of {0, e_1, …, e_d, α*}; both False when the argument holds
    witness_convex: bool | None = None
    witness_cospherical: bool | None = None

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "d": self.d,
            "mode": self.mode,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "max_n_prime": self.max_n_prime,
            "failures": self.failures,
            "witness_convex": self.witness_convex,
            "witness_cospherical": self.witness_cospherical,
        }

    def render(self) -> str:
        lines = [
            f"group {self.group}, d = {self.d}, {self.mode}",
            f"{self.passed}/{self.checked} tuples pass",
            f"witness configuration: convex position {_yes_no(self.witness_convex)}, "
            f"cospherical {_yes_no(self.witness_cospherical)}",
        ]
        for failure in self.failures:
            lines.append(f"FAILED: {failure}")
        return "\n".join(lines)


def certify_group(
    group: FiniteMatrixGroup,
    d: int,
    mode: TupleMode = TupleMode(),
    cap: int = TUPLE_SPACE_CAP,
) -> CertificationSummary:
    """Run the certificate on every enumerated or sampled tuple of ``group``."""
    alpha = witness_alpha(d)
    summary = CertificationSummary(group.label, d, mode.describe())
    points = witness_configuration(d).points
    summary.witness_convex = convex_position(points)
    summary.witness_cospherical = on_common_sphere(points)
    log(f"🚀  certifying {group.label} at α* = 1/{2 * d} ({mode.describe()})", tag="CERT")
    for t in enumerate_tuples(group, d + 1, mode, cap=cap):
        decision = decide(SubtransInstance(alpha, t))
        summary.checked += 1
        summary.max_n_prime = max(summary.max_n_prime, decision.n_prime)
        if decision.outcome is Outcome.NO_NONCONSTANT_SOLUTION:
            summary.passed += 1
        else:
            summary.failures.append(decision.instance.describe())
            log(f"⚠️  certificate failed at tuple {list(t.indices)}", tag="CERT")
    log(f"✅  {summary.passed}/{summary.checked} pass", tag="CERT")
    return summary
