"""
core/exactlin.py
================

Exact rational scalars, vectors and matrices.

Every rank, kernel and membership decision in the toolkit goes through this
module. Scalars are elements of sympy's ``QQ`` domain (gmpy2 ``mpq`` when it
is installed), matrices wrap a dense ``DomainMatrix`` over ``QQ``. No floating
point value ever reaches this layer: ``to_rational`` refuses floats.

Conventions:
    * vectors are plain tuples of rationals (column vectors);
    * pivoting is Gauss–Jordan in column order, so kernel bases are
      deterministic;
    * each kernel basis vector is scaled so its first nonzero entry is 1.
"""

import numbers
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatchError, InputError

Rational = QQ.dtype
Vector = tuple  # tuple[Rational, ...]

ZERO = QQ(0)
ONE = QQ(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


# --------------------------------------------------------------------------- #
# Scalars
# --------------------------------------------------------------------------- #

def parse_rational(text: str, field: str | None = None) -> Rational:
    """Parse ``"p/q"`` or ``"p"`` into a canonical rational."""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise InputError(f"not a rational number: {text!r}", field=field)
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}", field=field)
    return QQ(num, den)


def format_rational(x) -> str:
    x = to_rational(x)
    num, den = int(x.numerator), int(x.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def to_rational(value, field: str | None = None) -> Rational:
    """Coerce ints, fractions, rational strings and QQ elements to QQ."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        return parse_rational(value, field=field)
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}", field=field)
    if isinstance(value, numbers.Integral):
        return QQ(int(value))
    if isinstance(value, numbers.Rational):
        return QQ(int(value.numerator), int(value.denominator))
    # sympy.Rational and friends
    if getattr(value, "is_Rational", False):
        return QQ.from_sympy(value)
    raise InputError(f"not an exact rational: {value!r}", field=field)


# --------------------------------------------------------------------------- #
# Vectors
# --------------------------------------------------------------------------- #

def vector(values: Iterable, field: str | None = None) -> Vector:
    return tuple(to_rational(v, field=field) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = to_rational(c)
    return tuple(c * a for a in v)


def dot(u: Vector, v: Vector) -> Rational:
    _check_same_length(u, v)
    total = ZERO
    for a, b in zip(u, v):
        total += a * b
    return total


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


def format_vector(v: Vector) -> list[str]:
    return [format_rational(a) for a in v]


def _check_same_length(u, v):
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ ({len(u)} vs {len(v)})")


# --------------------------------------------------------------------------- #
# Matrices
# --------------------------------------------------------------------------- #

class RationalMatrix:
    """Immutable dense matrix over QQ."""

    __slots__ = ("_dm", "_rows")

    def __init__(self, dm: DomainMatrix):
        if dm.domain != QQ:
            dm = dm.convert_to(QQ)
        self._dm = dm.to_dense()
        self._rows = tuple(tuple(row) for row in self._dm.to_list())

    # ---------------------------- constructors ----------------------------- #
    @classmethod
    def from_rows(cls, rows: Sequence[Iterable], cols: int | None = None):
        data = [[to_rational(v) for v in row] for row in rows]
        if not data:
            return cls.zeros(0, cols or 0)
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionMismatchError("ragged matrix rows")
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"expected {cols} columns, got {width}")
        return cls(DomainMatrix(data, (len(data), width), QQ))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int | None = None):
        if not columns:
            return cls.zeros(rows or 0, 0)
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise DimensionMismatchError("columns have different lengths")
        if height == 0:
            return cls.zeros(0, len(columns))
        return cls.from_rows([list(r) for r in zip(*columns)])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(DomainMatrix([[ZERO] * cols for _ in range(rows)], (rows, cols), QQ))

    @classmethod
    def identity(cls, n: int):
        return cls.from_rows([unit_vector(n, i) for i in range(n)], cols=n)

    # ---------------------------- accessors -------------------------------- #
    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._dm.shape

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of entries."""
        return tuple(a for row in self._rows for a in row)

    @property
    def domain_matrix(self) -> DomainMatrix:
        return self._dm

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def to_lists(self) -> list[list]:
        return [list(row) for row in self._rows]

    def to_strings(self) -> list[list[str]]:
        return [format_vector(row) for row in self._rows]

    # ---------------------------- arithmetic ------------------------------- #
    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_shape(other)
        return RationalMatrix(self._dm + other._dm)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_shape(other)
        return RationalMatrix(self._dm - other._dm)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self._dm)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        return RationalMatrix(self._dm.matmul(other._dm))

    def scale(self, c) -> "RationalMatrix":
        return RationalMatrix(self._dm.scalarmul(to_rational(c)))

    def matvec(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(v)} against {self.cols} columns"
            )
        return tuple(dot(row, v) for row in self._rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self._dm.transpose())

    # ---------------------------- predicates ------------------------------- #
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(a == 0 for row in self._rows for a in row)

    def is_identity(self) -> bool:
        return self.is_square() and self == RationalMatrix.identity(self.rows)

    def is_orthogonal(self) -> bool:
        """Exact check of M·Mᵀ = I."""
        if not self.is_square():
            return False
        return (self @ self.transpose()).is_identity()

    def key(self) -> tuple:
        return (self.shape, self._rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = "; ".join(" ".join(r) for r in self.to_strings())
        return f"RationalMatrix[{self.rows}x{self.cols}]({body})"

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")


def vstack(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    """Stack matrices with equal column counts on top of each other."""
    if not blocks:
        raise DimensionMismatchError("nothing to stack")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatchError("vstack blocks have different column counts")
    rows = [row for b in blocks for row in b._rows]
    return RationalMatrix.from_rows(rows, cols=cols)


def hstack(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    if not blocks:
        raise DimensionMismatchError("nothing to stack")
    return vstack([b.transpose() for b in blocks]).transpose()


# --------------------------------------------------------------------------- #
# Subspaces
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class Subspace:
    """
    Span of linearly independent rational column vectors.

    Bases produced by this module are independent by construction; use
    ``Subspace.spanned_by`` for arbitrary generating sets.
    """
    ambient_dim: int
    basis: tuple = ()

    def __post_init__(self):
        for k, v in enumerate(self.basis):
            if len(v) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"basis vector {k} has length {len(v)}, expected {self.ambient_dim}"
                )

    @classmethod
    def spanned_by(cls, ambient_dim: int, vectors: Sequence[Vector]) -> "Subspace":
        """Independent basis (reduced row echelon rows) of span(vectors)."""
        vectors = [vector(v) for v in vectors]
        if not vectors:
            return cls(ambient_dim, ())
        reduced, pivots = _rref(RationalMatrix.from_rows(vectors, cols=ambient_dim))
        return cls(ambient_dim, tuple(reduced[i] for i in range(len(pivots))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)


# --------------------------------------------------------------------------- #
# Elimination primitives
# --------------------------------------------------------------------------- #

def _rref(m: RationalMatrix) -> tuple[list[tuple], tuple[int, ...]]:
    """Reduced row echelon rows and pivot columns (column-order pivoting)."""
    if m.rows == 0 or m.cols == 0:
        return [tuple(row) for row in m.to_lists()], ()
    reduced, pivots = m.domain_matrix.rref()
    return [tuple(row) for row in reduced.to_list()], tuple(pivots)


def rank(m: RationalMatrix) -> int:
    """Exact rank over QQ."""
    return len(_rref(m)[1])


def kernel_basis(m: RationalMatrix) -> Subspace:
    """
    Basis of {v : m·v = 0}.

    One vector per free column, in ascending column order, each scaled so
    that its first nonzero entry is 1.
    """
    n = m.cols
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        lead = next(a for a in v if a != 0)
        basis.append(tuple(a / lead for a in v))
    return Subspace(n, tuple(basis))


def solve(m: RationalMatrix, rhs: Sequence) -> Vector | None:
    """
    One exact solution of m·x = rhs, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    rhs = vector(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatchError(
            f"right-hand side has length {len(rhs)}, matrix has {m.rows} rows",
            field="rhs",
        )
    if m.rows == 0:
        return zero_vector(m.cols)
    augmented = RationalMatrix.from_rows(
        [m.row(i) + (rhs[i],) for i in range(m.rows)],
        cols=m.cols + 1,
    )
    reduced, pivots = _rref(augmented)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced[i][m.cols]
    return tuple(x)


def subspace_contains(s: Subspace, v: Sequence) -> bool:
    """Exact membership test by rank comparison."""
    v = vector(v)
    if len(v) != s.ambient_dim:
        raise DimensionMismatchError(
            f"vector of length {len(v)} against a subspace of R^{s.ambient_dim}"
        )
    if is_zero_vector(v):
        return True
    if s.dim == 0:
        return False
    stacked = RationalMatrix.from_rows(list(s.basis) + [v], cols=s.ambient_dim)
    return rank(stacked) == s.dim


def determinant(m: RationalMatrix) -> Rational:
    if not m.is_square():
        raise DimensionMismatchError(f"determinant of non-square {m.shape} matrix")
    if m.rows == 0:
        return ONE
    return m.domain_matrix.det()


def inverse(m: RationalMatrix) -> RationalMatrix:
    if not m.is_square():
        raise DimensionMismatchError(f"inverse of non-square {m.shape} matrix")
    if determinant(m) == 0:
        raise InputError("matrix is singular")
    if m.rows == 0:
        return m
    return RationalMatrix(m.domain_matrix.inv())
