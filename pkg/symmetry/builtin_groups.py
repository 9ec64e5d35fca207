"""
symmetry/builtin_groups.py
==========================

Named families of rational orthogonal groups and the textual group syntax
used by the CLI:

    cyclic:<m>:regular      m×m cyclic shift matrices
    symmetric:<m>:natural   all m×m permutation matrices
    hyperoctahedral:<m>     all m×m signed permutation matrices
    c4:rotation2d           {I, R90, R180, R270}
    cayley:<path>           regular representation of a Cayley table
    explicit:<path>         closure of generator matrices read from a file

Every family subclasses GroupFamily and lists its elements identity first,
so exhaustive tuple order is stable across runs.
"""

import itertools
import math
from abc import ABC, abstractmethod
from functools import lru_cache
from pathlib import Path

from core.errors import CayleyTableError, GroupSpecError, GroupTooLargeError, InputError
from core.exactlin import RationalMatrix, parse_rational
from core.log import log
from core.settings import CAYLEY_VALIDATION_CAP, CLOSURE_CAP

from .matrix_group import FiniteMatrixGroup, GroupElement, close_group


def _matrix_from_entries(m: int, entries: dict) -> RationalMatrix:
    """m×m matrix with the given {(row, col): value} entries, zero elsewhere."""
    return RationalMatrix.from_rows(
        [[entries.get((i, j), 0) for j in range(m)] for i in range(m)], cols=m
    )


def _permutation_matrix(perm, signs=None) -> RationalMatrix:
    """Column j carries ``signs[j]`` in row ``perm[j]``."""
    m = len(perm)
    signs = signs or (1,) * m
    return _matrix_from_entries(m, {(perm[j], j): signs[j] for j in range(m)})


# --------------------------------------------------------------------------- #
# Families
# --------------------------------------------------------------------------- #

class GroupFamily(ABC):
    """Abstract base for a parametrized family of matrix groups."""

    syntax: str = ""
    description: str = ""

    @property
    @abstractmethod
    def label(self) -> str:
        """Canonical spec string, e.g. ``cyclic:5:regular``."""

    @abstractmethod
    def order(self) -> int:
        """Advertised group order (checked against the constructed group)."""

    @abstractmethod
    def matrices(self):
        """Yield the element matrices, identity first."""

    def build(self, cap: int = CLOSURE_CAP) -> FiniteMatrixGroup:
        if self.order() > cap:
            raise GroupTooLargeError(cap)
        elements = tuple(GroupElement(mat) for mat in self.matrices())
        group = FiniteMatrixGroup(elements[0].dim, elements, label=self.label)
        if len(group) != self.order():
            raise InputError(
                f"{self.label} produced {len(group)} elements, expected {self.order()}",
                field="group",
            )
        self.log(f"built {self.label} (order {len(group)}, n = {group.ambient_dim})")
        return group

    def log(self, msg: str):
        log(msg, tag="GROUP")


class CyclicRegular(GroupFamily):
    syntax = "cyclic:<m>:regular"
    description = "cyclic shift matrices (regular representation of C_m)"

    def __init__(self, m: int):
        self.m = m

    @property
    def label(self):
        return f"cyclic:{self.m}:regular"

    def order(self):
        return self.m

    def matrices(self):
        m = self.m
        for k in range(m):
            yield _permutation_matrix([(j + k) % m for j in range(m)])


class SymmetricNatural(GroupFamily):
    syntax = "symmetric:<m>:natural"
    description = "all permutation matrices (natural representation of S_m)"

    def __init__(self, m: int):
        self.m = m

    @property
    def label(self):
        return f"symmetric:{self.m}:natural"

    def order(self):
        return math.factorial(self.m)

    def matrices(self):
        for perm in itertools.permutations(range(self.m)):
            yield _permutation_matrix(perm)


class Hyperoctahedral(GroupFamily):
    syntax = "hyperoctahedral:<m>"
    description = "all signed permutation matrices (symmetries of the m-cube)"

    def __init__(self, m: int):
        self.m = m

    @property
    def label(self):
        return f"hyperoctahedral:{self.m}"

    def order(self):
        return 2**self.m * math.factorial(self.m)

    def matrices(self):
        for perm in itertools.permutations(range(self.m)):
            for signs in itertools.product((1, -1), repeat=self.m):
                yield _permutation_matrix(perm, signs)


class Rotation2dC4(GroupFamily):
    syntax = "c4:rotation2d"
    description = "plane rotations by multiples of 90 degrees"

    ROTATIONS = (
        ((1, 0), (0, 1)),
        ((0, -1), (1, 0)),
        ((-1, 0), (0, -1)),
        ((0, 1), (-1, 0)),
    )

    @property
    def label(self):
        return "c4:rotation2d"

    def order(self):
        return 4

    def matrices(self):
        for rows in self.ROTATIONS:
            yield RationalMatrix.from_rows(rows, cols=2)


class CayleyRegular(GroupFamily):
    """
    Left regular representation of a group given by its Cayley table.

    ``table[a][b]`` is the 0-based index of a·b. The element a acts on the
    basis vector e_h by e_h ↦ e_{a·h}.
    """

    syntax = "cayley:<path>"
    description = "regular representation of a Cayley table file"

    def __init__(self, table, source: str = "table"):
        self.table = [list(row) for row in table]
        self.source = source
        self.identity = validate_cayley_table(self.table)

    @property
    def label(self):
        return f"cayley:{self.source}"

    def order(self):
        return len(self.table)

    def matrices(self):
        k = len(self.table)
        order = [self.identity] + [a for a in range(k) if a != self.identity]
        for a in order:
            yield _matrix_from_entries(k, {(self.table[a][h], h): 1 for h in range(k)})


class ExplicitGenerators(GroupFamily):
    syntax = "explicit:<path>"
    description = "closure of generator matrices listed in a file"

    def __init__(self, generators, source: str = "generators"):
        self.generators = [GroupElement(g) for g in generators]
        self.source = source
        self._closed = None

    @property
    def label(self):
        return f"explicit:{self.source}"

    def order(self):
        return len(self._closed) if self._closed is not None else 0

    def matrices(self):
        return (g.matrix for g in self._closed)

    def build(self, cap: int = CLOSURE_CAP) -> FiniteMatrixGroup:
        # the closure fixes the order; the base class then checks and logs it
        self._closed = close_group(self.generators, cap=cap, label=self.label)
        return super().build(cap)


# --------------------------------------------------------------------------- #
# Cayley tables
# --------------------------------------------------------------------------- #

def validate_cayley_table(table, cap: int = CAYLEY_VALIDATION_CAP) -> int:
    """
    Check that ``table`` (0-based) is a group table; return the identity index.

    Failing triples are reported 1-based, matching the file format.
    """
    k = len(table)
    if k == 0:
        raise CayleyTableError("empty Cayley table")
    if k > cap:
        raise CayleyTableError(f"order {k} exceeds the validation cap of {cap}")
    for a, row in enumerate(table):
        if len(row) != k:
            raise CayleyTableError(f"row {a + 1} has {len(row)} entries, expected {k}")
        for v in row:
            if not 0 <= v < k:
                raise CayleyTableError(f"entry {v + 1} in row {a + 1} out of range 1..{k}")

    identity = next(
        (e for e in range(k)
         if all(table[e][a] == a and table[a][e] == a for a in range(k))),
        None,
    )
    if identity is None:
        raise CayleyTableError("no identity element")

    for a in range(k):
        if not any(table[a][b] == identity and table[b][a] == identity for b in range(k)):
            raise CayleyTableError(f"element {a + 1} has no inverse")

    for a in range(k):
        for b in range(k):
            ab = table[a][b]
            for c in range(k):
                if table[ab][c] != table[a][table[b][c]]:
                    raise CayleyTableError("not associative", triple=(a + 1, b + 1, c + 1))
    return identity


def load_cayley_table(path) -> CayleyRegular:
    """Read a Cayley table file: order k, then k rows of k 1-based indices."""
    path = Path(path)
    try:
        lines = [ln.split() for ln in path.read_text().splitlines() if ln.strip()]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}", field="cayley") from exc
    if not lines or len(lines[0]) != 1 or not lines[0][0].isdigit():
        raise CayleyTableError("first line must be the group order")
    k = int(lines[0][0])
    rows = lines[1:]
    if len(rows) != k:
        raise CayleyTableError(f"expected {k} rows, found {len(rows)}")
    try:
        table = [[int(v) - 1 for v in row] for row in rows]
    except ValueError as exc:
        raise CayleyTableError(f"non-integer entry: {exc}") from exc
    return CayleyRegular(table, source=str(path))


# --------------------------------------------------------------------------- #
# Explicit generators
# --------------------------------------------------------------------------- #

def load_explicit_generators(path) -> ExplicitGenerators:
    """
    Read generator matrices: rational entries separated by whitespace, one
    matrix row per line, matrices separated by blank lines.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}", field="generators") from exc

    blocks, current = [], []
    for line in text.splitlines():
        if line.strip():
            current.append([parse_rational(tok, field="generators") for tok in line.split()])
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise InputError(f"no matrices in {path}", field="generators")

    matrices = []
    for k, rows in enumerate(blocks):
        if any(len(r) != len(rows) for r in rows):
            raise InputError(f"matrix {k + 1} is not square", field="generators")
        matrices.append(RationalMatrix.from_rows(rows))
    return ExplicitGenerators(matrices, source=str(path))


# --------------------------------------------------------------------------- #
# Spec parsing
# --------------------------------------------------------------------------- #

_SIZED_FAMILIES = {
    ("cyclic", "regular"): CyclicRegular,
    ("symmetric", "natural"): SymmetricNatural,
    ("hyperoctahedral", None): Hyperoctahedral,
}


@lru_cache(maxsize=64)
def builtin_group(family: str, m: int | None = None, cap: int = CLOSURE_CAP) -> FiniteMatrixGroup:
    """Construct a named family member; ``m`` is ignored for ``c4``."""
    if family == "c4":
        return Rotation2dC4().build(cap)
    if family == "cyclic":
        cls = CyclicRegular
    elif family == "symmetric":
        cls = SymmetricNatural
    elif family == "hyperoctahedral":
        cls = Hyperoctahedral
    else:
        raise GroupSpecError(f"unknown builtin family {family!r}")
    if m is None or m < 1:
        raise GroupSpecError(f"{family} needs a size m >= 1, got {m!r}")
    return cls(m).build(cap)


def _parse_size(token: str, text: str) -> int:
    if not token.isdigit() or int(token) < 1:
        raise GroupSpecError(f"bad size {token!r} in {text!r}")
    return int(token)


def parse_group_spec(text: str, closure_cap: int = CLOSURE_CAP) -> FiniteMatrixGroup:
    """Parse a group descriptor such as ``cyclic:5:regular`` into a group."""
    text = text.strip()
    head, _, rest = text.partition(":")

    if head in ("cayley", "explicit"):
        if not rest:
            raise GroupSpecError(f"{head} needs a file path: {text!r}")
        family = load_cayley_table(rest) if head == "cayley" else load_explicit_generators(rest)
        return family.build(closure_cap)

    parts = text.split(":")
    if parts == ["c4", "rotation2d"]:
        return builtin_group("c4", None, closure_cap)
    if len(parts) == 3 and (parts[0], parts[2]) in _SIZED_FAMILIES:
        return builtin_group(parts[0], _parse_size(parts[1], text), closure_cap)
    if len(parts) == 2 and (parts[0], None) in _SIZED_FAMILIES:
        return builtin_group(parts[0], _parse_size(parts[1], text), closure_cap)
    raise GroupSpecError(
        f"unrecognised group spec {text!r}; see `groups list` for the syntax"
    )


def list_builtin_families() -> list[tuple[str, str, str]]:
    """(syntax, description, order formula) for every family."""
    orders = {
        CyclicRegular: "m",
        SymmetricNatural: "m!",
        Hyperoctahedral: "2^m · m!",
        Rotation2dC4: "4",
        CayleyRegular: "k (table order)",
        ExplicitGenerators: "closure size",
    }
    return [(cls.syntax, cls.description, order) for cls, order in orders.items()]
