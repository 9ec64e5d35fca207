"""
geometry/sphere_sampler.py
==========================

Exact rational points on the unit sphere S^{d−1} ⊂ R^d by inverse
stereographic projection of a random rational grid point t ∈ Q^{d−1}:

    x = (2t, |t|² − 1) / (|t|² + 1)

Randomness comes from numpy Generators keyed on (seed, trial), so trial k
of a run can be regenerated on its own. The north pole is never produced.
"""

import numpy as np
from sympy import QQ

from core.entities import PointConfiguration
from core.errors import DegenerateConfigurationError, InputError
from core.exactlin import ONE, Vector, dot, vector
from core.settings import MAX_RESAMPLES

from .configuration import affinely_independent


def stereographic_lift(t) -> Vector:
    t = vector(t, field="t")
    s = dot(t, t)
    scale = ONE / (s + ONE)
    return tuple(2 * a * scale for a in t) + ((s - ONE) * scale,)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def sample_sphere_point(d: int, denom_bound: int, rng: np.random.Generator) -> Vector:
    """
    One point of S^{d−1}: numerators of t uniform in [−B, B], denominators
    uniform in [1, B], B = denom_bound.
    """
    if d < 2:
        raise InputError(f"sphere sampling needs d >= 2, got {d}", field="d")
    if denom_bound < 1:
        raise InputError(f"must be >= 1, got {denom_bound}", field="denom_bound")
    nums = rng.integers(-denom_bound, denom_bound + 1, size=d - 1)
    dens = rng.integers(1, denom_bound + 1, size=d - 1)
    return stereographic_lift(QQ(int(p), int(q)) for p, q in zip(nums, dens))


def sample_configuration(
    d: int,
    denom_bound: int,
    seed: int,
    trial: int,
    max_resamples: int = MAX_RESAMPLES,
) -> tuple[PointConfiguration, int]:
    """
    d+2 spherical points for one trial, plus the number of discarded draws.

    A draw is discarded when two points coincide or x_0, …, x_d are
    affinely dependent.
    """
    rng = trial_rng(seed, trial)
    discarded = 0
    while True:
        points = [sample_sphere_point(d, denom_bound, rng) for _ in range(d + 2)]
        if len(set(points)) == len(points) and affinely_independent(points[:-1]):
            return PointConfiguration(tuple(points), spherical=True), discarded
        discarded += 1
        if discarded > max_resamples:
            raise DegenerateConfigurationError(
                f"trial {trial}: still degenerate after {max_resamples} resamples",
                field="denom_bound",
            )
