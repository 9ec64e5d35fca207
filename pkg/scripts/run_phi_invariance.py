"""
scripts/run_phi_invariance.py
=============================

φ must be unchanged by invertible affine maps. Applies random rational
maps to sampled configurations (d = 2, 3) and counts exact matches.
"""

import argparse
import sys

import numpy as np
from sympy import QQ

from core.exactlin import RationalMatrix, determinant
from geometry.configuration import apply_affine, phi
from geometry.sphere_sampler import sample_configuration


def random_affine(rng, n, bound=9):
    """Random invertible S (integer entries in [−bound, bound]) and offset t."""
    while True:
        S = RationalMatrix.from_rows(
            [[int(v) for v in row] for row in rng.integers(-bound, bound + 1, size=(n, n))]
        )
        if determinant(S) != 0:
            break
    t = tuple(QQ(int(p), int(q)) for p, q in zip(
        rng.integers(-bound, bound + 1, size=n), rng.integers(1, bound + 1, size=n)))
    return S, t


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--configs", type=int, default=10)
    parser.add_argument("--maps", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    matches = total = 0
    for k in range(args.configs):
        d = 2 + k % 2
        config, _ = sample_configuration(d, 50, args.seed, k)
        alpha = phi(config)
        for _ in range(args.maps):
            S, t = random_affine(rng, d)
            total += 1
            matches += phi(apply_affine(config, S, t)) == alpha
    mark = "✅" if matches == total else "❌"
    print(f"{mark} {matches}/{total} φ comparisons exact")
    return 0 if matches == total else 1


if __name__ == "__main__":
    sys.exit(main())
