"""
symmetry/matrix_group.py
========================

Finite groups of rational orthogonal matrices.

GroupElement      –  one exactly orthogonal square matrix.
FiniteMatrixGroup –  deduplicated element list with O(1) index lookup.
ElementTuple      –  (g_1, …, g_{d+1}) stored as indices into one group.
close_group       –  closure of a generating set under products.

Elements are deduplicated by exact entrywise equality of canonical rationals;
the lookup table is keyed on those entries.
"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from core.errors import (
    DimensionMismatchError,
    GroupTooLargeError,
    InputError,
    NonOrthogonalError,
)
from core.exactlin import RationalMatrix
from core.log import log
from core.settings import CLOSURE_CAP


# --------------------------------------------------------------------------- #
# Elements
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class GroupElement:
    matrix: RationalMatrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise DimensionMismatchError(
                f"group element must be square, got {self.matrix.shape}",
                field="generators",
            )
        if not self.matrix.is_orthogonal():
            raise NonOrthogonalError(
                f"matrix is not exactly orthogonal: {self.matrix!r}", field="generators"
            )

    @classmethod
    def from_rows(cls, rows) -> "GroupElement":
        return cls(RationalMatrix.from_rows(rows))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        # orthogonal: inverse is the transpose
        return GroupElement(self.matrix.transpose())

    def apply(self, v):
        return self.matrix.matvec(v)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()


# --------------------------------------------------------------------------- #
# Groups
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class FiniteMatrixGroup:
    """
    A finite subgroup of O(n) over QQ.

    Constructors guarantee closure; ``check_closure`` re-verifies it
    exhaustively (|G|² products) for tests and small groups.
    """
    ambient_dim: int
    elements: tuple
    label: str = "group"
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.elements:
            raise InputError("a group needs at least one element", field="elements")
        index = {}
        for k, g in enumerate(self.elements):
            if g.dim != self.ambient_dim:
                raise DimensionMismatchError(
                    f"element {k} has dimension {g.dim}, expected {self.ambient_dim}",
                    field="elements",
                )
            key = g.matrix.key()
            if key in index:
                raise InputError(f"elements {index[key]} and {k} coincide", field="elements")
            index[key] = k
        object.__setattr__(self, "_index", index)
        if self.identity_index is None:
            raise InputError("group does not contain the identity", field="elements")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k: int) -> GroupElement:
        return self.elements[k]

    def __contains__(self, g) -> bool:
        return self.element_index(g) is not None

    def element_index(self, g) -> int | None:
        matrix = g.matrix if isinstance(g, GroupElement) else g
        return self._index.get(matrix.key())

    @property
    def identity_index(self) -> int | None:
        return self._index.get(RationalMatrix.identity(self.ambient_dim).key())

    def check_closure(self) -> bool:
        """Exhaustively verify products and inverses stay inside the group."""
        for a in self.elements:
            if a.inverse() not in self:
                return False
            for b in self.elements:
                if (a @ b) not in self:
                    return False
        return True


def close_group(
    generators: Sequence[GroupElement],
    cap: int = CLOSURE_CAP,
    label: str = "closure",
) -> FiniteMatrixGroup:
    """
    Closure of ``generators`` under products.

    Breadth-first over right multiplication by generators: in a finite group
    this already yields every product and inverse. The identity comes first.
    """
    generators = [g if isinstance(g, GroupElement) else GroupElement(g) for g in generators]
    if not generators:
        raise InputError("need at least one generator", field="generators")
    n = generators[0].dim
    for k, g in enumerate(generators):
        if g.dim != n:
            raise DimensionMismatchError(
                f"generator {k} has dimension {g.dim}, expected {n}", field="generators"
            )

    identity = GroupElement(RationalMatrix.identity(n))
    elements = [identity]
    seen = {identity.matrix.key()}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in generators:
                y = GroupElement(x.matrix @ g.matrix)
                key = y.matrix.key()
                if key in seen:
                    continue
                seen.add(key)
                elements.append(y)
                next_frontier.append(y)
                if len(elements) > cap:
                    raise GroupTooLargeError(cap)
        frontier = next_frontier

    log(f"closed {len(generators)} generator(s) → order {len(elements)}", tag="GROUP")
    return FiniteMatrixGroup(n, tuple(elements), label=label)


# --------------------------------------------------------------------------- #
# Tuples
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class ElementTuple:
    """(g_1, …, g_{d+1}) drawn from one group, stored by element index."""
    group: FiniteMatrixGroup
    indices: tuple

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", indices)
        if not indices:
            raise InputError("element tuple must be nonempty", field="tuple")
        for i in indices:
            if not 0 <= i < len(self.group):
                raise InputError(f"element index {i} out of range", field="tuple")

    @classmethod
    def from_elements(cls, group: FiniteMatrixGroup, elements: Iterable) -> "ElementTuple":
        indices = []
        for g in elements:
            k = group.element_index(g)
            if k is None:
                raise InputError(f"{g!r} is not an element of {group.label}", field="tuple")
            indices.append(k)
        return cls(group, tuple(indices))

    @property
    def elements(self) -> tuple:
        return tuple(self.group.elements[i] for i in self.indices)

    @property
    def ambient_dim(self) -> int:
        return self.group.ambient_dim

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k: int) -> GroupElement:
        return self.group.elements[self.indices[k]]

    def __repr__(self):
        return f"ElementTuple({self.group.label}, {list(self.indices)})"
