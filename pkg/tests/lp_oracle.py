"""Brute-force LP oracle: exhaustive basic-point enumeration over Fractions.

Independent of the simplex implementation.  Feasible regions here are
pointed (x >= 0), so a feasible bounded LP attains its optimum at a vertex,
a vertex having n linearly independent active constraints.  Unboundedness
is detected by enumerating extreme-ray candidates of the recession cone
with the normalisation c.d = 1.
"""

from fractions import Fraction
from itertools import combinations

ZERO = Fraction(0)


def solve_square(a, b):
    """Solve a.x = b exactly; None if the matrix is singular."""
    n = len(b)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _constraint_rows(model):
    """All constraints as (coeffs, rel, rhs), bounds x_i >= 0 included."""
    rows = [(list(c), rel, rhs) for c, rel, rhs in model.rows]
    n = model.n_vars
    for i in range(n):
        e = [ZERO] * n
        e[i] = Fraction(1)
        rows.append((e, ">=", ZERO))
    return rows


def _satisfies(rows, x):
    for coeffs, rel, rhs in rows:
        lhs = sum((c * v for c, v in zip(coeffs, x)), ZERO)
        if rel == "<=" and lhs > rhs:
            return False
        if rel == ">=" and lhs < rhs:
            return False
        if rel == "=" and lhs != rhs:
            return False
    return True


def oracle_solve(model):
    """Return (status, value) with status in {Optimal, Infeasible, Unbounded}."""
    n = model.n_vars
    rows = _constraint_rows(model)
    c = list(model.objective)

    best = None
    feasible = False
    for subset in combinations(range(len(rows)), n):
        a = [rows[i][0] for i in subset]
        b = [rows[i][2] for i in subset]
        x = solve_square(a, b)
        if x is None:
            continue
        if _satisfies(rows, x):
            feasible = True
            val = sum((ci * vi for ci, vi in zip(c, x)), ZERO)
            if best is None or val > best:
                best = val
    if not feasible:
        return "Infeasible", None

    # Recession-cone rays with c.d = 1: if one satisfies the homogeneous
    # system, the LP is unbounded.
    hom = []
    for coeffs, rel, _ in rows:
        hom.append((coeffs, rel, ZERO))
    norm_row = (c, "=", Fraction(1))
    for subset in combinations(range(len(hom)), n - 1):
        a = [hom[i][0] for i in subset] + [norm_row[0]]
        b = [ZERO] * (n - 1) + [Fraction(1)]
        d = solve_square(a, b)
        if d is None:
            continue
        if _satisfies(hom, d):
            return "Unbounded", None
    return "Optimal", best
