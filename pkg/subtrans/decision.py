"""
subtrans/decision.py
====================

The rank test behind affine subtransitivity.

For α ∈ Q^d and a tuple (g_1, …, g_{d+1}) of orthogonal matrices, a map
f(x) = Ax + b on the normalized configuration 0, e_1, …, e_d, α satisfies
f(e_k) = g_k f(0) and f(α) = g_{d+1} f(0) iff

    A = (g_1 b − b, …, g_d b − b)   and   M(α)·b = 0,
    M(α) = Σ_k α_k (g_k − I) + (I − g_{d+1}).

Every b in Fix = ∩ ker(g_k − I) solves this with A = 0, so a nonconstant
solution exists iff dim ker M(α) > dim Fix.
"""

from dataclasses import replace

from core.entities import (
    OUTSIDE_HULL,
    AffineMap,
    Outcome,
    PointConfiguration,
    SubtransDecision,
    SubtransInstance,
)
from core.errors import CertificateFailure, DimensionMismatchError
from core.exactlin import (
    RationalMatrix,
    kernel_basis,
    subspace_contains,
    vec_add,
    vec_sub,
    vector,
)
from geometry.configuration import normalizing_map, phi
from symmetry.matrix_group import ElementTuple
from symmetry.tuples import fixed_subspace


def build_system(inst: SubtransInstance) -> RationalMatrix:
    """M(α) = Σ_{k≤d} α_k (g_k − I) + (I − g_{d+1})."""
    identity = RationalMatrix.identity(inst.n)
    elements = inst.tuple.elements
    M = identity - elements[-1].matrix
    for a, g in zip(inst.alpha, elements[:-1]):
        if a != 0:
            M = M + (g.matrix - identity).scale(a)
    return M


def witness_columns(t: ElementTuple, b, d: int) -> RationalMatrix:
    """n×d matrix whose column k is g_k·b − b."""
    cols = [vec_sub(g.apply(b), b) for g in t.elements[:d]]
    return RationalMatrix.from_columns(cols, rows=t.ambient_dim)


def decide(inst: SubtransInstance) -> SubtransDecision:
    M = build_system(inst)
    kernel = kernel_basis(M)
    fix = fixed_subspace(inst.tuple)
    base = dict(n=inst.n, fix_dim=fix.dim, kernel_dim=kernel.dim, instance=inst)
    if kernel.dim == fix.dim:
        return SubtransDecision(Outcome.NO_NONCONSTANT_SOLUTION, **base)

    # first kernel vector outside Fix; one exists since Fix ⊆ ker M(α)
    b = next(v for v in kernel.basis if not subspace_contains(fix, v))
    A = witness_columns(inst.tuple, b, inst.d)
    return SubtransDecision(Outcome.WITNESS, b=b, A=A, **base)


def verify_witness(inst: SubtransInstance, b, A: RationalMatrix) -> bool:
    """Exact substitution check of (b, A) into the normalized conditions."""
    b = vector(b)
    if len(b) != inst.n or A.shape != (inst.n, inst.d):
        return False
    if A.is_zero():
        return False
    elements = inst.tuple.elements
    for k in range(inst.d):
        if A.column(k) != vec_sub(elements[k].apply(b), b):
            return False
    lhs = b
    for a, col in zip(inst.alpha, A.columns()):
        lhs = vec_add(lhs, tuple(a * c for c in col))
    return lhs == elements[-1].apply(b)


def decide_configuration(config: PointConfiguration, t: ElementTuple) -> SubtransDecision:
    """
    φ followed by ``decide``. A witness also carries f = A∘T + b on the
    original coordinates (T the normalizing map), checked against
    f(x_k) = g_k f(x_0) for every k.
    """
    alpha = phi(config)
    if alpha is OUTSIDE_HULL:
        return SubtransDecision(Outcome.NOT_APPLICABLE, n=t.ambient_dim)
    inst = SubtransInstance(alpha, t)
    decision = decide(inst)
    if not decision.is_witness:
        return decision

    T = normalizing_map(config)
    f = AffineMap(decision.A @ T.linear, vec_add(decision.A.matvec(T.offset), decision.b))
    image0 = f.apply(config.points[0])
    for g, x in zip(t.elements, config.points[1:]):
        if f.apply(x) != g.apply(image0):
            raise CertificateFailure(
                inst.describe(), "original-coordinate witness failed substitution"
            )
    return replace(decision, affine_map=f)


def orbit_configuration(t: ElementTuple, b) -> PointConfiguration:
    """The points (b, g_1 b, …, g_{d+1} b)."""
    b = vector(b, field="b")
    if len(b) != t.ambient_dim:
        raise DimensionMismatchError(
            f"b has length {len(b)}, group acts on R^{t.ambient_dim}", field="b"
        )
    return PointConfiguration((b,) + tuple(g.apply(b) for g in t.elements))
