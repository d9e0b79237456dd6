"""Exact rational linear programming.

A small dense two-phase simplex over `fractions.Fraction`, sufficient for
linear programs with a few dozen variables.  Every optimum it reports is an
exact rational, and every returned point is re-substituted into the model
as a self-check before it leaves the solver.

Conventions:
  * all structural variables are constrained to be >= 0,
  * rows are (coefficients, relation, rhs) with relation one of "<=", "=", ">=",
  * the objective is always maximised (negate the objective to minimise).

Bland's rule is used throughout, so the solver cannot cycle even on the
highly degenerate programs this package feeds it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)


class LpError(ValueError):
    """Malformed model or point (row length mismatch, bad relation, ...)."""


@dataclass(frozen=True)
class LpModel:
    """max objective . x  subject to  rows, x >= 0 (componentwise)."""

    n_vars: int
    objective: tuple[Fraction, ...]
    rows: tuple[tuple[tuple[Fraction, ...], str, Fraction], ...]

    @staticmethod
    def build(n_vars: int,
              objective: Sequence,
              rows: Sequence[tuple[Sequence, str, object]]) -> "LpModel":
        obj = tuple(Fraction(c) for c in objective)
        if len(obj) != n_vars:
            raise LpError(f"objective has {len(obj)} coefficients, expected {n_vars}")
        frozen = []
        for idx, (coeffs, rel, rhs) in enumerate(rows):
            row = tuple(Fraction(c) for c in coeffs)
            if len(row) != n_vars:
                raise LpError(f"row {idx} has {len(row)} coefficients, expected {n_vars}")
            if rel not in _RELATIONS:
                raise LpError(f"row {idx} has unknown relation {rel!r}")
            frozen.append((row, rel, Fraction(rhs)))
        return LpModel(n_vars, obj, tuple(frozen))


OPTIMAL = "Optimal"
INFEASIBLE = "Infeasible"
UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == OPTIMAL:
            out["value"] = format_rational(self.value)
            out["point"] = [format_rational(v) for v in self.point]
        return out


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q" with an explicit denominator ("5/6", "1/1")."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def check_feasible(model: LpModel, point: Sequence) -> bool:
    """Exact test: every row and every x >= 0 bound holds at `point`."""
    pt = [Fraction(v) for v in point]
    if len(pt) != model.n_vars:
        raise LpError(f"point has {len(pt)} entries, expected {model.n_vars}")
    if any(v < 0 for v in pt):
        return False
    for coeffs, rel, rhs in model.rows:
        lhs = sum((c * v for c, v in zip(coeffs, pt)), ZERO)
        if rel == LE and lhs > rhs:
            return False
        if rel == GE and lhs < rhs:
            return False
        if rel == EQ and lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Simplex core
# ---------------------------------------------------------------------------
#
# Tableau layout: m rows of [a_0 ... a_{N-1} | rhs], plus an objective row
# [z_0 ... z_{N-1} | value] kept in "reduced cost" form: z_j is the reduced
# cost of column j and the entry in the rhs column is the current objective
# value.  Maximisation: pivot while some non-basic z_j > 0.


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    inv = ONE / piv
    tableau[row] = [v * inv for v in tableau[row]]
    prow = tableau[row]
    for r, trow in enumerate(tableau):
        if r != row and trow[col] != 0:
            f = trow[col]
            tableau[r] = [v - f * p for v, p in zip(trow, prow)]
    basis[row] = col


def _bland_iterate(tableau: list[list[Fraction]], basis: list[int],
                   ncols: int) -> str:
    """Run Bland-rule pivots until optimal or unbounded.

    The objective row is tableau[-1]; returns OPTIMAL or UNBOUNDED.
    """
    m = len(tableau) - 1
    obj = tableau[-1]
    while True:
        col = -1
        for j in range(ncols):
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            return OPTIMAL
        row = -1
        best: Fraction | None = None
        for i in range(m):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row < 0:
            return UNBOUNDED
        _pivot(tableau, basis, row, col)
        obj = tableau[-1]


def solve_max(model: LpModel) -> LpOutcome:
    """Exact optimum of `model` via two-phase simplex with Bland's rule.

    On OPTIMAL the returned point satisfies every constraint exactly; this
    is re-verified before returning.
    """
    n = model.n_vars
    rows = model.rows

    # Standard form: append one slack (<=) or surplus (>=) column per
    # inequality, then one artificial column per row that still lacks an
    # obvious basic column (all "=" rows plus ">=" rows).  RHS is made
    # non-negative first so the artificial basis is feasible.
    m = len(rows)
    norm: list[tuple[list[Fraction], str, Fraction]] = []
    for coeffs, rel, rhs in rows:
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        norm.append((list(coeffs), rel, rhs))

    n_slack = sum(1 for _, rel, _ in norm if rel != EQ)
    slack_of: list[int | None] = []
    k = 0
    for _, rel, _ in norm:
        if rel != EQ:
            slack_of.append(n + k)
            k += 1
        else:
            slack_of.append(None)
    n_art = sum(1 for _, rel, _ in norm if rel != LE)
    art_base = n + n_slack
    ncols = n + n_slack + n_art

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    ai = art_base
    for i, (coeffs, rel, rhs) in enumerate(norm):
        row = coeffs + [ZERO] * (n_slack + n_art) + [rhs]
        if rel == LE:
            row[slack_of[i]] = ONE
            basis.append(slack_of[i])
        elif rel == GE:
            row[slack_of[i]] = -ONE
            row[ai] = ONE
            basis.append(ai)
            ai += 1
        else:
            row[ai] = ONE
            basis.append(ai)
            ai += 1
        tableau.append(row)

    # Phase 1: maximise -(sum of artificials).
    if n_art:
        obj = [ZERO] * ncols + [ZERO]
        for j in range(art_base, ncols):
            obj[j] = -ONE
        tableau.append(obj)
        for i, b in enumerate(basis):
            if b >= art_base:
                tableau[-1] = [v + w for v, w in zip(tableau[-1], tableau[i])]
        status = _bland_iterate(tableau, basis, ncols)
        assert status == OPTIMAL  # phase 1 objective is bounded above by 0
        if tableau[-1][-1] != 0:
            return LpOutcome(INFEASIBLE)
        tableau.pop()
        # Pivot lingering zero-valued artificials out of the basis; a row
        # with no eligible column is redundant and dropped.
        drop: list[int] = []
        for i in range(len(basis)):
            if basis[i] >= art_base:
                col = -1
                for j in range(art_base):
                    if tableau[i][j] != 0:
                        col = j
                        break
                if col >= 0:
                    _pivot(tableau, basis, i, col)
                else:
                    drop.append(i)
        for i in reversed(drop):
            tableau.pop(i)
            basis.pop(i)

    # Phase 2: original objective over structural + slack columns.
    obj = [ZERO] * ncols + [ZERO]
    for j in range(n):
        obj[j] = model.objective[j]
    tableau.append(obj)
    for i, b in enumerate(basis):
        if tableau[-1][b] != 0:
            f = tableau[-1][b]
            tableau[-1] = [v - f * w for v, w in zip(tableau[-1], tableau[i])]
    status = _bland_iterate(tableau, basis, n + n_slack)
    if status == UNBOUNDED:
        return LpOutcome(UNBOUNDED)

    point = [ZERO] * n
    for i, b in enumerate(basis[: len(tableau) - 1]):
        if b < n:
            point[b] = tableau[i][-1]
    value = sum((c * v for c, v in zip(model.objective, point)), ZERO)
    outcome = LpOutcome(OPTIMAL, value, tuple(point))
    if not check_feasible(model, point):  # solver self-check
        raise AssertionError("simplex returned an infeasible point")
    return outcome
