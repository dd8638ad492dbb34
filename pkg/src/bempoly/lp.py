"""Exact feasibility for ``A x = b, x >= 0`` over the rationals (phase-one simplex, Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["feasible_point"]


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """
    Return some ``x >= 0`` with ``A x = b``, or ``None`` if there is none.

    Bland's smallest-index pivoting rule guarantees termination, so the answer
    is exact and needs no tolerance.
    """
    m = len(A)
    nvar = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * nvar
    # rows with b < 0 are negated so that the artificial basis starts feasible
    T = []
    for row, rhs in zip(A, b):
        row = [Fraction(x) for x in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [Fraction(int(k == len(T))) for k in range(m)] + [rhs])
    ncols = nvar + m
    basis = [nvar + k for k in range(m)]
    # objective: minimise the sum of artificials; reduced costs kept in `cost`
    cost = [Fraction(0)] * (ncols + 1)
    for row in T:
        for c in range(nvar):
            cost[c] -= row[c]
        cost[-1] -= row[-1]

    while True:
        enter = next((c for c in range(ncols) if cost[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # cannot happen for a phase-one problem bounded below by zero
            raise ArithmeticError("unbounded phase-one problem")
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * nvar
    for r, var in enumerate(basis):
        if var < nvar:
            x[var] = T[r][-1]
    return x


def _pivot(T, cost, r, c):
    pr = T[r]
    inv = 1 / pr[c]
    pr[:] = [v * inv for v in pr]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            row[:] = [a - f * b for a, b in zip(row, pr)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [a - f * b for a, b in zip(cost, pr)]
