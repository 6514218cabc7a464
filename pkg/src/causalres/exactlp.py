"""Exact feasibility solver for convex-combination membership.

A single question is answered here: does a target vector lie in the convex
hull of a finite point set, and if so, with which weights? The solver is a
phase-1 simplex over `fractions.Fraction` using Bland's smallest-index rule
for both the entering and the leaving choice, which excludes cycling, so
termination needs no perturbation and the yes/no answer is exact even when
the target sits on a facet. There is no phase 2; feasibility is the whole
objective.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .core import ONE, ZERO, Rational


def convex_weights(
    points: Sequence[Sequence[Rational]], target: Sequence[Rational]
) -> Optional[list[Rational]]:
    """Weights expressing target as a convex combination of points, or None.

    The returned list is a basic feasible solution: nonnegative, summing to
    one, with at most dim+1 nonzero entries.
    """
    n = len(points)
    if n == 0:
        return None
    d = len(target)
    for p in points:
        if len(p) != d:
            raise ValueError("all points must have the dimension of the target")

    # Equality system: one row per coordinate plus the normalization row.
    rows = [[Fraction(p[i]) for p in points] for i in range(d)]
    rhs = [Fraction(t) for t in target]
    rows.append([ONE] * n)
    rhs.append(ONE)
    m = d + 1

    # Flip rows with negative right-hand sides so the artificial start is
    # feasible for phase 1.
    for r in range(m):
        if rhs[r] < 0:
            rows[r] = [-v for v in rows[r]]
            rhs[r] = -rhs[r]

    # Tableau: n structural columns, m artificial columns, rhs column.
    width = n + m + 1
    tableau = []
    for r in range(m):
        row = rows[r] + [ZERO] * m + [rhs[r]]
        row[n + r] = ONE
        tableau.append(row)
    basis = [n + r for r in range(m)]

    # Cost row for minimizing the artificial total, rhs holds minus the
    # current objective value.
    cost = [-sum(tableau[r][j] for r in range(m)) for j in range(n)]
    cost += [ZERO] * m + [-sum(rhs)]
    tableau.append(cost)

    while True:
        # Bland entering rule. Only structural columns are candidates: basic
        # columns have reduced cost zero and a nonbasic artificial never
        # needs to re-enter on the way to a zero objective.
        enter = next((j for j in range(n) if tableau[m][j] < 0), None)
        if enter is None:
            break

        # Bland leaving rule: minimum ratio, ties to the smallest basic index.
        leave = None
        best: Optional[Fraction] = None
        for r in range(m):
            coef = tableau[r][enter]
            if coef > 0:
                ratio = tableau[r][width - 1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]  # type: ignore[index]
                ):
                    best = ratio
                    leave = r
        if leave is None:
            raise RuntimeError("phase-1 objective cannot be unbounded")

        pivot = tableau[leave][enter]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for r in range(m + 1):
            if r != leave and tableau[r][enter] != 0:
                factor = tableau[r][enter]
                pivot_row = tableau[leave]
                tableau[r] = [v - factor * pv for v, pv in zip(tableau[r], pivot_row)]
        basis[leave] = enter

    if tableau[m][width - 1] != 0:
        return None

    weights = [ZERO] * n
    for r in range(m):
        if basis[r] < n:
            weights[basis[r]] = tableau[r][width - 1]
    return weights
