import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import QQ

from core.entities import AlphaCoordinates, Outcome, SubtransInstance
from core.errors import CertificateFailure, DimensionMismatchError
from core.exactlin import RationalMatrix, determinant, rank
from geometry.configuration import affinely_independent, apply_affine
from subtrans.certificate import (
    certify_generic,
    certify_group,
    certify_tuple,
    require_generic,
    witness_alpha,
)
from subtrans.decision import (
    build_system,
    decide,
    decide_configuration,
    orbit_configuration,
    verify_witness,
)
from subtrans.oracle import oracle_decide, oracle_system, random_instance
from symmetry.builtin_groups import parse_group_spec
from symmetry.matrix_group import ElementTuple, GroupElement
from symmetry.tuples import TupleMode, enumerate_tuples, fixed_subspace

QUARTER = AlphaCoordinates((QQ(1, 4), QQ(1, 4)))
SQUARE_ALPHA = AlphaCoordinates((-1, 1))

ORACLE_GROUPS = [
    "cyclic:2:regular", "cyclic:3:regular", "cyclic:5:regular", "cyclic:6:regular",
    "symmetric:3:natural", "hyperoctahedral:2", "c4:rotation2d",
]


def instance(alpha, t):
    return SubtransInstance(alpha, t)


def matrix(rows):
    return RationalMatrix.from_rows(rows)


# --------------------------------------------------------------------------- #
# build_system
# --------------------------------------------------------------------------- #

def test_identity_tuple_gives_zero_system(identity_tuple):
    assert build_system(instance(QUARTER, identity_tuple)).is_zero()


def test_rotation_system_at_quarter(rotation_tuple):
    M = build_system(instance(QUARTER, rotation_tuple))
    assert M == matrix([["1/4", "-5/4"], ["5/4", "1/4"]])
    assert determinant(M) == QQ(13, 8)


def test_zero_alpha_with_identity_last(c4):
    t = ElementTuple(c4, (1, 3, 0))
    assert build_system(instance(AlphaCoordinates((0, 0)), t)).is_zero()


def test_instance_arity_is_checked(c4):
    with pytest.raises(DimensionMismatchError):
        instance(QUARTER, ElementTuple(c4, (1, 2)))


# --------------------------------------------------------------------------- #
# decide / verify_witness
# --------------------------------------------------------------------------- #

def test_identity_tuple_has_no_witness(identity_tuple):
    decision = decide(instance(QUARTER, identity_tuple))
    assert decision.outcome is Outcome.NO_NONCONSTANT_SOLUTION
    assert decision.fix_dim == decision.kernel_dim == 2
    assert decision.n_prime == 0


def test_square_instance_witness(rotation_tuple):
    inst = instance(SQUARE_ALPHA, rotation_tuple)
    decision = decide(inst)
    assert decision.is_witness
    assert decision.b == (1, 0)
    assert decision.A == matrix([[-1, -2], [1, 0]])
    assert verify_witness(inst, decision.b, decision.A)


def test_quarter_has_no_witness(rotation_tuple):
    decision = decide(instance(QUARTER, rotation_tuple))
    assert decision.outcome is Outcome.NO_NONCONSTANT_SOLUTION
    assert decision.fix_dim == 0
    assert decision.kernel_dim == 0


def test_verify_rejects_constant_map(identity_tuple):
    inst = instance(QUARTER, identity_tuple)
    assert not verify_witness(inst, (1, 0), RationalMatrix.zeros(2, 2))


def test_verify_accepts_scaled_witness(rotation_tuple):
    inst = instance(SQUARE_ALPHA, rotation_tuple)
    assert verify_witness(inst, (3, 0), matrix([[-3, -6], [3, 0]]))
    assert not verify_witness(inst, (3, 0), matrix([[-1, -2], [1, 0]]))


def test_verify_rejects_wrong_shapes(rotation_tuple):
    inst = instance(SQUARE_ALPHA, rotation_tuple)
    assert not verify_witness(inst, (1, 0, 0), matrix([[-1, -2], [1, 0]]))
    assert not verify_witness(inst, (1, 0), matrix([[-1], [1]]))


# --------------------------------------------------------------------------- #
# decide_configuration
# --------------------------------------------------------------------------- #

def test_square_configuration_witness(square, rotation_tuple):
    decision = decide_configuration(square, rotation_tuple)
    assert decision.is_witness
    f = decision.affine_map
    image0 = f.apply(square.points[0])
    for g, x in zip(rotation_tuple.elements, square.points[1:]):
        assert f.apply(x) == g.apply(image0)


def test_octahedron_configuration_witness(octahedron, hyper3):
    elements = [
        GroupElement.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),    # e1 -> e2
        GroupElement.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]]),    # e1 -> e3
        GroupElement.from_rows([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]),  # e1 -> -e1
        GroupElement.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]),   # e1 -> -e2
    ]
    t = ElementTuple.from_elements(hyper3, elements)
    decision = decide_configuration(octahedron, t)
    assert decision.is_witness
    assert decision.instance.alpha.alpha == (-1, 0, 1)
    assert decision.b == (1, 0, 0)
    assert verify_witness(decision.instance, decision.b, decision.A)


def test_identity_tuple_on_any_configuration(generic_circle, identity_tuple):
    assert not decide_configuration(generic_circle, identity_tuple).is_witness


def test_outside_hull_is_not_applicable(data_dir, c4):
    from geometry.configuration import load_configuration

    config = load_configuration(data_dir / "outside_hull.json")
    decision = decide_configuration(config, ElementTuple(c4, (1, 2)))
    assert decision.outcome is Outcome.NOT_APPLICABLE


def test_affine_invariance_of_outcome(square, rotation_tuple, generic_circle):
    S = matrix([[3, 1], [1, 2]])
    for config in (square, generic_circle):
        moved = apply_affine(config, S, ("1/2", -4))
        assert (decide_configuration(moved, rotation_tuple).outcome
                is decide_configuration(config, rotation_tuple).outcome)


@given(st.sampled_from(["c4:rotation2d", "hyperoctahedral:2"]),
       st.lists(st.integers(0, 7), min_size=3, max_size=3),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
@settings(max_examples=40, deadline=None)
def test_orbit_configurations_are_witnessed(spec, indices, b):
    group = parse_group_spec(spec)
    t = ElementTuple(group, tuple(i % len(group) for i in indices))
    config = orbit_configuration(t, b)
    assume(affinely_independent(config.prefix))
    decision = decide_configuration(config, t)
    assert decision.is_witness
    assert verify_witness(decision.instance, decision.b, decision.A)


def test_orbit_configuration_dimension(c4):
    with pytest.raises(DimensionMismatchError):
        orbit_configuration(ElementTuple(c4, (1, 2, 3)), (1, 0, 0))


# --------------------------------------------------------------------------- #
# Properties over random instances
# --------------------------------------------------------------------------- #

@pytest.fixture(scope="module")
def oracle_groups():
    return [parse_group_spec(s) for s in ORACLE_GROUPS]


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_fix_is_in_kernel_and_rank_identity(seed, oracle_groups):
    inst = random_instance(np.random.default_rng(seed), oracle_groups)
    M = build_system(inst)
    fix = fixed_subspace(inst.tuple)
    for v in fix.basis:
        assert M.matvec(v) == (0,) * inst.n
    decision = decide(inst)
    assert decision.is_witness == (rank(M) < inst.n - fix.dim)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_oracle_agrees_with_decide(seed, oracle_groups):
    inst = random_instance(np.random.default_rng(seed), oracle_groups)
    assert oracle_decide(inst) == decide(inst).outcome


@given(seed=st.integers(0, 2**32 - 1), scale=st.integers(1, 9))
@settings(max_examples=30, deadline=None)
def test_oracle_agrees_on_positive_controls(seed, scale, oracle_groups):
    """Instances whose α comes from an orbit always have a witness."""
    rng = np.random.default_rng(seed)
    group = oracle_groups[int(rng.integers(0, len(oracle_groups)))]
    t = ElementTuple(group, tuple(int(i) for i in rng.integers(0, len(group), size=3)))
    b = tuple(int(v) * scale for v in rng.integers(-3, 4, size=group.ambient_dim))
    config = orbit_configuration(t, b)
    assume(affinely_independent(config.prefix))
    decision = decide_configuration(config, t)
    if decision.outcome is Outcome.NOT_APPLICABLE:
        return
    assert decision.is_witness
    assert oracle_decide(decision.instance) is Outcome.WITNESS


def test_oracle_examples(rotation_tuple, identity_tuple):
    assert oracle_decide(instance(SQUARE_ALPHA, rotation_tuple)) is Outcome.WITNESS
    assert oracle_decide(instance(QUARTER, identity_tuple)) is Outcome.NO_NONCONSTANT_SOLUTION
    assert oracle_system(instance(QUARTER, rotation_tuple)).shape == (6, 6)


@pytest.mark.parametrize("lam", [-3, -1, 2, QQ(5, 7)])
def test_witness_scaling(lam, c4):
    scaled = 0
    for t in enumerate_tuples(c4, 3):
        decision = decide(instance(SQUARE_ALPHA, t))
        if not decision.is_witness:
            continue
        b = tuple(lam * v for v in decision.b)
        assert verify_witness(decision.instance, b, decision.A.scale(lam))
        scaled += 1
    assert scaled >= 1


# --------------------------------------------------------------------------- #
# Certificate
# --------------------------------------------------------------------------- #

def test_witness_alpha():
    assert witness_alpha(3).alpha == (QQ(1, 6),) * 3


def test_certificate_examples(rotation_tuple, identity_tuple):
    assert certify_generic(rotation_tuple)
    decision = certify_tuple(identity_tuple)
    assert decision.outcome is Outcome.NO_NONCONSTANT_SOLUTION
    assert decision.n_prime == 0
    assert require_generic(rotation_tuple).kernel_dim == 0


def test_certify_c4(c4):
    summary = certify_group(c4, 2)
    assert (summary.checked, summary.passed) == (64, 64)
    assert summary.ok
    assert summary.max_n_prime == 2
    assert summary.witness_convex is False
    assert summary.witness_cospherical is False


def test_certify_symmetric3():
    summary = certify_group(parse_group_spec("symmetric:3:natural"), 2)
    assert (summary.checked, summary.passed) == (216, 216)
    assert summary.max_n_prime == 2


def test_certify_trivial_group():
    summary = certify_group(parse_group_spec("cyclic:1:regular"), 4)
    assert summary.ok
    assert summary.checked == 1


def test_require_generic_raises_on_witness(monkeypatch, rotation_tuple):
    import subtrans.certificate as certificate

    monkeypatch.setattr(certificate, "witness_alpha", lambda d: SQUARE_ALPHA)
    with pytest.raises(CertificateFailure):
        certificate.require_generic(rotation_tuple)


@pytest.mark.slow
def test_certify_cyclic5_d3():
    summary = certify_group(parse_group_spec("cyclic:5:regular"), 3)
    assert (summary.checked, summary.passed) == (625, 625)


@pytest.mark.slow
def test_certify_hyperoctahedral3_sampled(hyper3):
    summary = certify_group(hyper3, 3, TupleMode.sampled(seed=0, count=1000))
    assert summary.checked == 1000
    assert summary.ok
