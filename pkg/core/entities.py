"""
core/entities.py
================

Plain value objects passed between the geometry, symmetry and decision layers.
All of them are frozen: safe to share between threads and to cache.
"""

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from .errors import DimensionMismatchError, InputError
from .exactlin import (
    ONE,
    RationalMatrix,
    Vector,
    dot,
    format_vector,
    vec_add,
    vector,
)
from .settings import DIGEST_LENGTH

if TYPE_CHECKING:
    from symmetry.matrix_group import ElementTuple


# --------------------------------------------------------------------------- #
# Configurations
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class PointConfiguration:
    """
    Ordered points x_0, …, x_{d+1} in an ambient rational space R^N.

    ``spherical=True`` asserts every point has squared norm exactly 1 and is
    checked on construction.
    """
    points: tuple
    spherical: bool = False

    def __post_init__(self):
        pts = tuple(vector(p, field=f"points[{i}]") for i, p in enumerate(self.points))
        object.__setattr__(self, "points", pts)
        if len(pts) < 3:
            raise InputError(
                f"need at least 3 points (d >= 1), got {len(pts)}", field="points"
            )
        width = len(pts[0])
        for i, p in enumerate(pts):
            if len(p) != width:
                raise DimensionMismatchError(
                    f"point has length {len(p)}, expected {width}", field=f"points[{i}]"
                )
        if self.spherical:
            for i, p in enumerate(pts):
                if dot(p, p) != ONE:
                    raise InputError("squared norm is not exactly 1", field=f"points[{i}]")

    @property
    def ambient_dim(self) -> int:
        return len(self.points[0])

    @property
    def intrinsic_d(self) -> int:
        return len(self.points) - 2

    @property
    def prefix(self) -> tuple:
        """x_0, …, x_d."""
        return self.points[:-1]

    @property
    def last(self) -> Vector:
        return self.points[-1]

    def to_strings(self) -> list[list[str]]:
        return [format_vector(p) for p in self.points]

    def digest(self) -> str:
        payload = json.dumps(self.to_strings(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:DIGEST_LENGTH]


@dataclass(frozen=True)
class AlphaCoordinates:
    """Coordinates of x_{d+1} in the affine basis x_0, …, x_d."""
    alpha: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", vector(self.alpha, field="alpha"))

    @property
    def d(self) -> int:
        return len(self.alpha)

    def to_strings(self) -> list[str]:
        return format_vector(self.alpha)

    def __iter__(self):
        return iter(self.alpha)

    def __len__(self):
        return len(self.alpha)


class OutsideHull:
    """φ outcome when x_{d+1} is not in the affine hull of x_0, …, x_d."""

    def __repr__(self):
        return "OUTSIDE_HULL"


OUTSIDE_HULL = OutsideHull()


@dataclass(frozen=True)
class AffineMap:
    """x ↦ linear·x + offset."""
    linear: RationalMatrix
    offset: tuple

    def apply(self, x) -> Vector:
        return vec_add(self.linear.matvec(vector(x)), self.offset)

    def to_json(self) -> dict:
        return {"linear": self.linear.to_strings(), "offset": format_vector(self.offset)}


# --------------------------------------------------------------------------- #
# Decision values
# --------------------------------------------------------------------------- #

class Outcome(str, Enum):
    NO_NONCONSTANT_SOLUTION = "no_nonconstant_solution"
    WITNESS = "witness"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class SubtransInstance:
    """The pair (α, (g_1, …, g_{d+1})) of the normalized condition."""
    alpha: AlphaCoordinates
    tuple: "ElementTuple"

    def __post_init__(self):
        if len(self.tuple) != self.alpha.d + 1:
            raise DimensionMismatchError(
                f"tuple has {len(self.tuple)} elements, expected d+1 = {self.alpha.d + 1}",
                field="tuple",
            )

    @property
    def d(self) -> int:
        return self.alpha.d

    @property
    def n(self) -> int:
        return self.tuple.ambient_dim

    def describe(self) -> dict:
        return {
            "alpha": self.alpha.to_strings(),
            "group": self.tuple.group.label,
            "tuple": list(self.tuple.indices),
            "matrices": [g.matrix.to_strings() for g in self.tuple.elements],
        }


@dataclass(frozen=True)
class SubtransDecision:
    """
    Outcome of the rank test.

    WITNESS carries b (n-vector) and A (n×d) with column k of A equal to
    g_k·b − b. ``affine_map`` is set when the decision was made on an original
    configuration and maps its points into the orbit.
    """
    outcome: Outcome
    n: int = 0
    fix_dim: int = 0
    kernel_dim: int = 0
    b: tuple | None = None
    A: RationalMatrix | None = None
    instance: SubtransInstance | None = field(default=None, compare=False)
    affine_map: AffineMap | None = field(default=None, compare=False)

    @property
    def is_witness(self) -> bool:
        return self.outcome is Outcome.WITNESS

    @property
    def n_prime(self) -> int:
        """Dimension of the quotient by the fixed subspace."""
        return self.n - self.fix_dim

    def to_json(self) -> dict:
        out = {
            "outcome": self.outcome.value,
            "n": self.n,
            "n_prime": self.n_prime,
            "fix_dim": self.fix_dim,
            "kernel_dim": self.kernel_dim,
        }
        if self.instance is not None:
            out["alpha"] = self.instance.alpha.to_strings()
            out["tuple"] = list(self.instance.tuple.indices)
        if self.is_witness:
            out["b"] = format_vector(self.b)
            out["A"] = self.A.to_strings()
        if self.affine_map is not None:
            out["affine_map"] = self.affine_map.to_json()
        return out
