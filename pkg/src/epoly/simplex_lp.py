"""Exact rational linear feasibility via a phase-one simplex method."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ValidationError


def equality_feasible(
    A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> bool:
    """Decide whether A x = b has a solution with x >= 0.

    Runs the phase-one simplex with Bland's anti-cycling rule on a dense
    rational tableau, so termination and exactness are both guaranteed.
    """
    m = len(A)
    if len(b) != m:
        raise ValidationError("right-hand side length does not match A")
    n = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in row] for row in A]
    rhs = [Fraction(x) for x in b]
    for row in rows:
        if len(row) != n:
            raise ValidationError("ragged constraint matrix")

    # normalize to b >= 0 so the artificial basis is feasible
    for i in range(m):
        if rhs[i] < 0:
            rhs[i] = -rhs[i]
            rows[i] = [-x for x in rows[i]]

    # tableau columns: n structural variables then m artificials
    tab = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
           for i in range(m)]
    basis = [n + i for i in range(m)]

    # reduced costs for minimizing the sum of artificials
    cost = [Fraction(0)] * (n + m)
    value = Fraction(0)
    for i in range(m):
        for j in range(n):
            cost[j] -= tab[i][j]
        value -= rhs[i]

    while True:
        enter = -1
        for j in range(n + m):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = rhs[i] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            # the phase-one objective is bounded below, so this cannot happen
            raise ValidationError("unbounded phase-one objective")
        pivot = tab[leave][enter]
        tab[leave] = [x / pivot for x in tab[leave]]
        rhs[leave] /= pivot
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                factor = tab[i][enter]
                tab[i] = [x - factor * y for x, y in zip(tab[i], tab[leave])]
                rhs[i] -= factor * rhs[leave]
        if cost[enter] != 0:
            factor = cost[enter]
            cost = [x - factor * y for x, y in zip(cost, tab[leave])]
            value -= factor * rhs[leave]
        basis[leave] = enter

    return value == 0
