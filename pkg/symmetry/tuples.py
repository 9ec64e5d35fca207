"""
symmetry/tuples.py
==================

Element tuples (g_1, …, g_{d+1}) over a finite group: exhaustive
lexicographic enumeration, seeded sampling, and their common fixed subspace.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from core.errors import InputError, TupleSpaceTooLargeError
from core.exactlin import RationalMatrix, Subspace, kernel_basis, vstack
from core.settings import DEFAULT_SEED, TUPLE_SPACE_CAP

from .matrix_group import ElementTuple, FiniteMatrixGroup


@dataclass(frozen=True)
class TupleMode:
    """``exhaustive`` or ``sampled`` (``count`` draws from ``seed``)."""
    kind: str = "exhaustive"
    seed: int = DEFAULT_SEED
    count: int = 0

    def __post_init__(self):
        if self.kind not in ("exhaustive", "sampled"):
            raise InputError(f"unknown tuple mode {self.kind!r}", field="mode")
        if self.kind == "sampled" and self.count < 1:
            raise InputError(f"sample count must be >= 1, got {self.count}", field="sample")

    @classmethod
    def exhaustive(cls) -> "TupleMode":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, seed: int, count: int) -> "TupleMode":
        return cls("sampled", seed=seed, count=count)

    @property
    def is_exhaustive(self) -> bool:
        return self.kind == "exhaustive"

    def describe(self) -> str:
        if self.is_exhaustive:
            return "exhaustive"
        return f"sampled(seed={self.seed}, count={self.count})"


def tuple_space_size(group: FiniteMatrixGroup, arity: int) -> int:
    return len(group) ** arity


def enumerate_tuples(
    group: FiniteMatrixGroup,
    arity: int,
    mode: TupleMode = TupleMode(),
    cap: int = TUPLE_SPACE_CAP,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[ElementTuple]:
    """
    Stream tuples of ``arity`` element indices.

    Exhaustive mode walks |G|^arity tuples in lexicographic index order;
    sampled mode draws ``mode.count`` tuples from ``np.random.default_rng(seed)``.
    ``[start, stop)`` selects a window of either stream, so a range can be
    split between workers. The cap is checked against the window size, and
    arguments are validated before the first tuple is produced.
    """
    if arity < 1:
        raise InputError(f"arity must be >= 1, got {arity}", field="arity")
    total = tuple_space_size(group, arity) if mode.is_exhaustive else mode.count
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > stop:
        raise InputError(f"bad window [{start}, {stop})", field="window")
    if mode.is_exhaustive and stop - start > cap:
        raise TupleSpaceTooLargeError(stop - start, cap)

    if mode.is_exhaustive:
        return _exhaustive(group, arity, start, stop)
    return _sampled(group, arity, mode, start, stop)


def _exhaustive(group, arity, start, stop):
    product = itertools.product(range(len(group)), repeat=arity)
    for indices in itertools.islice(product, start, stop):
        yield ElementTuple(group, indices)


def _sampled(group, arity, mode, start, stop):
    rng = np.random.default_rng(mode.seed)
    draws = rng.integers(0, len(group), size=(mode.count, arity))
    for row in draws[start:stop]:
        yield ElementTuple(group, tuple(int(i) for i in row))


def fixed_subspace(t: ElementTuple) -> Subspace:
    """Fix = ∩_k ker(g_k − I), the vectors fixed by every element of ``t``."""
    if len(t) == 0:
        raise InputError("tuple must be nonempty", field="tuple")
    identity = RationalMatrix.identity(t.ambient_dim)
    return kernel_basis(vstack([g.matrix - identity for g in t.elements]))
