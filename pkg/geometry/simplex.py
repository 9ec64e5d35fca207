"""
geometry/simplex.py
===================

Exact phase-one simplex over QQ.

feasible_point  –  some λ ≥ 0 with A λ = b, or None when there is none.

Pivoting uses Bland's rule (smallest entering index, ties in the ratio test
broken by smallest basic index), so it terminates on degenerate systems.
Every point returned has been checked by substitution.
"""

from core.errors import SimplexError
from core.exactlin import ONE, ZERO, Vector, to_rational


def _pivot(tableau: list, r: int, c: int):
    p = tableau[r][c]
    tableau[r] = [v / p for v in tableau[r]]
    pivot_row = tableau[r]
    for i, row in enumerate(tableau):
        f = row[c]
        if i != r and f != ZERO:
            tableau[i] = [a - f * b for a, b in zip(row, pivot_row)]


def feasible_point(A_rows, b) -> Vector | None:
    """
    Phase one: minimize the sum of artificial variables s in
    A λ + s = b (rows negated so b ≥ 0), starting from the basis s.
    The system is feasible iff that minimum is 0.
    """
    rows = [[to_rational(a) for a in row] for row in A_rows]
    rhs = [to_rational(v) for v in b]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return (ZERO,) * n

    tableau = []
    for i, (row, v) in enumerate(zip(rows, rhs)):
        sign = -ONE if v < 0 else ONE
        artificial = [ONE if k == i else ZERO for k in range(m)]
        tableau.append([sign * a for a in row] + artificial + [sign * v])
    basis = [n + i for i in range(m)]
    width = n + m

    while True:
        # reduced cost of column j: c_j − Σ_{i: basis[i] artificial} T[i][j]
        costs = [
            (ONE if j >= n else ZERO) - sum((tableau[i][j] for i in range(m) if basis[i] >= n), ZERO)
            for j in range(width)
        ]
        entering = next((j for j in range(width) if costs[j] < 0), None)
        if entering is None:
            break
        candidates = [
            (tableau[i][-1] / tableau[i][entering], basis[i], i)
            for i in range(m)
            if tableau[i][entering] > 0
        ]
        if not candidates:
            # phase one is bounded below by 0
            break
        _, _, r = min(candidates)
        _pivot(tableau, r, entering)
        basis[r] = entering

    infeasibility = sum((tableau[i][-1] for i in range(m) if basis[i] >= n), ZERO)
    if infeasibility != ZERO:
        return None

    point = [ZERO] * n
    for i, j in enumerate(basis):
        if j < n:
            point[j] = tableau[i][-1]
    point = tuple(point)

    if any(x < 0 for x in point) or any(
        sum((a * x for a, x in zip(row, point)), ZERO) != v for row, v in zip(rows, rhs)
    ):
        raise SimplexError(f"phase one returned {point}, which does not solve the system")
    return point
