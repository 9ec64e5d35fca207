"""
geometry/configuration.py
=========================

Exact geometry of point configurations x_0, …, x_{d+1}:

    • affine independence of the prefix
    • φ: coordinates α of x_{d+1} in the affine basis x_0, …, x_d
    • the normalizing affine map sending x_0, …, x_d to 0, e_1, …, e_d
    • convex position (exact simplex feasibility per point)
    • cosphericity inside the affine hull
    • JSON configuration files
"""

import json
from pathlib import Path

from sympy.polys.domains import QQ

from core.entities import OUTSIDE_HULL, AffineMap, AlphaCoordinates, PointConfiguration
from core.errors import DegenerateConfigurationError, DimensionMismatchError, InputError
from core.exactlin import (
    ONE,
    RationalMatrix,
    Vector,
    dot,
    inverse,
    rank,
    solve,
    unit_vector,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)

from .simplex import feasible_point


def _differences(points) -> list:
    """p_k − p_0 for k ≥ 1."""
    base = points[0]
    return [vec_sub(p, base) for p in points[1:]]


def _check_points(points) -> list:
    pts = [vector(p, field="points") for p in points]
    if not pts:
        raise InputError("no points given", field="points")
    if any(len(p) != len(pts[0]) for p in pts):
        raise DimensionMismatchError("points have different lengths", field="points")
    return pts


# --------------------------------------------------------------------------- #
# Affine coordinates
# --------------------------------------------------------------------------- #

def affinely_independent(points) -> bool:
    """True iff {p_i − p_0} are linearly independent."""
    pts = _check_points(points)
    if len(pts) == 1:
        return True
    if len(pts) - 1 > len(pts[0]):
        return False
    return rank(RationalMatrix.from_rows(_differences(pts))) == len(pts) - 1


def _basis_matrix(config: PointConfiguration) -> RationalMatrix:
    """N×d matrix X with columns x_k − x_0, k = 1..d; degenerate prefix raises."""
    prefix = config.prefix
    if not affinely_independent(prefix):
        raise DegenerateConfigurationError(
            f"degenerate configuration: x_0..x_{config.intrinsic_d} are affinely dependent"
        )
    return RationalMatrix.from_columns(_differences(prefix), rows=config.ambient_dim)


def phi(config: PointConfiguration):
    """
    α with x_{d+1} − x_0 = Σ α_k (x_k − x_0), or ``OUTSIDE_HULL`` when
    x_{d+1} is not in the affine hull of the prefix.
    """
    X = _basis_matrix(config)
    alpha = solve(X, vec_sub(config.last, config.points[0]))
    if alpha is None:
        return OUTSIDE_HULL
    return AlphaCoordinates(alpha)


def normalizing_map(config: PointConfiguration) -> AffineMap:
    """
    T(x) = P(x − x_0) with P = (XᵀX)⁻¹Xᵀ, so T(x_0) = 0, T(x_k) = e_k and
    T(x_{d+1}) = α whenever x_{d+1} lies in the hull.
    """
    X = _basis_matrix(config)
    Xt = X.transpose()
    P = inverse(Xt @ X) @ Xt
    return AffineMap(P, vec_scale(-1, P.matvec(config.points[0])))


# --------------------------------------------------------------------------- #
# Convex position
# --------------------------------------------------------------------------- #

def hull_coefficients(target, others) -> Vector | None:
    """
    λ ≥ 0 with Σ λ_j = 1 and Σ λ_j p_j = target, or None when target is
    outside the convex hull of ``others``.
    """
    rows = [[p[i] for p in others] for i in range(len(target))] + [[ONE] * len(others)]
    return feasible_point(rows, list(target) + [ONE])


def _in_convex_hull(target, others) -> bool:
    return hull_coefficients(target, others) is not None


def convex_position(points) -> bool:
    """True iff no point lies in the convex hull of the others."""
    pts = _check_points(points)
    if len(pts) < 2:
        raise InputError("convex position needs at least 2 points", field="points")
    for i, p in enumerate(pts):
        if _in_convex_hull(p, pts[:i] + pts[i + 1:]):
            return False
    return True


# --------------------------------------------------------------------------- #
# Spheres and affine images
# --------------------------------------------------------------------------- #

def on_common_sphere(points) -> bool:
    """
    True iff some c in the affine hull has |p_i − c|² equal for every i.

    With c = p_0 + Vβ (V's columns p_k − p_0) the condition is the linear
    system 2 D V β = (|p_k|² − |p_0|²) − 2 D p_0, D's rows p_k − p_0.
    """
    pts = _check_points(points)
    if len(pts) <= 2:
        return True
    diffs = _differences(pts)
    D = RationalMatrix.from_rows(diffs)
    V = D.transpose()
    p0 = pts[0]
    lhs = (D @ V).scale(2)
    rhs = [dot(p, p) - dot(p0, p0) - 2 * dot(row, p0) for p, row in zip(pts[1:], diffs)]
    return solve(lhs, rhs) is not None


def apply_affine(config: PointConfiguration, S: RationalMatrix, t=None) -> PointConfiguration:
    """Image of every point under x ↦ S·x + t."""
    t = zero_vector(S.rows) if t is None else vector(t, field="offset")
    if S.cols != config.ambient_dim or len(t) != S.rows:
        raise DimensionMismatchError(
            f"affine map {S.shape} + {len(t)} does not act on R^{config.ambient_dim}",
            field="map",
        )
    return PointConfiguration(tuple(AffineMap(S, t).apply(p) for p in config.points))


def witness_configuration(d: int) -> PointConfiguration:
    """{0, e_1, …, e_d, (1/(2d), …, 1/(2d))} in R^d."""
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}", field="d")
    centre = tuple(QQ(1, 2 * d) for _ in range(d))
    points = [zero_vector(d)] + [unit_vector(d, k) for k in range(d)] + [centre]
    return PointConfiguration(tuple(points))


# --------------------------------------------------------------------------- #
# Files
# --------------------------------------------------------------------------- #

def configuration_from_json(data: dict) -> PointConfiguration:
    if not isinstance(data, dict):
        raise InputError("configuration must be a JSON object", field="input")
    if "points" not in data:
        raise InputError("missing field", field="points")
    raw = data["points"]
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise InputError("must be an array of arrays of rational strings", field="points")
    spherical = data.get("spherical", False)
    if not isinstance(spherical, bool):
        raise InputError(f"must be true or false, got {spherical!r}", field="spherical")
    config = PointConfiguration(
        tuple(tuple(str(v) for v in p) for p in raw),
        spherical=spherical,
    )
    if "d" in data and data["d"] != config.intrinsic_d:
        raise InputError(
            f"d = {data['d']} but {len(raw)} points were given (expected d + 2)", field="d"
        )
    if "ambient_dim" in data and data["ambient_dim"] != config.ambient_dim:
        raise InputError(
            f"ambient_dim = {data['ambient_dim']} but points have length {config.ambient_dim}",
            field="ambient_dim",
        )
    return config


def load_configuration(path) -> PointConfiguration:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}", field="input") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}", field="input") from exc
    return configuration_from_json(data)


def configuration_to_json(config: PointConfiguration) -> dict:
    out = {
        "d": config.intrinsic_d,
        "ambient_dim": config.ambient_dim,
        "points": config.to_strings(),
    }
    if config.spherical:
        out["spherical"] = True
    return out
