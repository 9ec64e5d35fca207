"""
subtrans/oracle.py
==================

Brute-force cross-check of ``decide``: solve for all n·(d+1) unknowns of
f(x) = Ax + b at once instead of eliminating A first. Unknowns are ordered
a_1, …, a_d (the columns of A) followed by b.

    f(e_k) = g_k f(0)       →  a_k + (I − g_k) b = 0,        k = 1..d
    f(α)   = g_{d+1} f(0)   →  Σ α_k a_k + (I − g_{d+1}) b = 0
"""

import numpy as np
from sympy import QQ

from core.entities import AlphaCoordinates, Outcome, SubtransInstance
from core.exactlin import RationalMatrix, hstack, is_zero_vector, kernel_basis, vstack
from symmetry.matrix_group import ElementTuple, FiniteMatrixGroup


def oracle_system(inst: SubtransInstance) -> RationalMatrix:
    n, d = inst.n, inst.d
    identity = RationalMatrix.identity(n)
    zero = RationalMatrix.zeros(n, n)
    elements = inst.tuple.elements

    blocks = []
    for k in range(d):
        row = [identity if j == k else zero for j in range(d)]
        blocks.append(hstack(row + [identity - elements[k].matrix]))
    last = [identity.scale(a) for a in inst.alpha]
    blocks.append(hstack(last + [identity - elements[-1].matrix]))
    return vstack(blocks)


def oracle_decide(inst: SubtransInstance) -> Outcome:
    """WITNESS iff some solution of the full system has A ≠ 0."""
    kernel = kernel_basis(oracle_system(inst))
    a_len = inst.n * inst.d
    for v in kernel.basis:
        if not is_zero_vector(v[:a_len]):
            return Outcome.WITNESS
    return Outcome.NO_NONCONSTANT_SOLUTION


def random_instance(
    rng: np.random.Generator,
    groups: list[FiniteMatrixGroup],
    d_choices=(2, 3),
    denom_bound: int = 20,
) -> SubtransInstance:
    """Random α (numerators in [−B, B], denominators in [1, B]) and tuple."""
    group = groups[int(rng.integers(0, len(groups)))]
    d = int(d_choices[int(rng.integers(0, len(d_choices)))])
    alpha = tuple(
        QQ(int(rng.integers(-denom_bound, denom_bound + 1)), int(rng.integers(1, denom_bound + 1)))
        for _ in range(d)
    )
    indices = tuple(int(i) for i in rng.integers(0, len(group), size=d + 1))
    return SubtransInstance(AlphaCoordinates(alpha), ElementTuple(group, indices))
