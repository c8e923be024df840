"""Exact rational simplex for ``max c.y  s.t.  G y <= 1, y >= 0``.

All data are nonnegative rationals, so ``y = 0`` is always feasible and the
slack basis is a valid start. Pivoting uses Bland's rule (lowest index for
both the entering and the leaving variable), which rules out cycling on the
degenerate vertices that shared generator facets produce.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union


@dataclass(frozen=True)
class LpInstance:
    objective: tuple
    constraints: tuple

    def __init__(self, objective: Sequence, constraints: Sequence[Sequence]):
        obj = tuple(Fraction(c) for c in objective)
        rows = tuple(tuple(Fraction(v) for v in row) for row in constraints)
        for row in rows:
            if len(row) != len(obj):
                raise ValueError("constraint row length differs from objective length")
        if any(c < 0 for c in obj) or any(v < 0 for row in rows for v in row):
            raise ValueError("LP data must be nonnegative")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraints", rows)

    @property
    def n(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    witness: tuple


@dataclass(frozen=True)
class Unbounded:
    ray: tuple


LpResult = Union[Optimal, Unbounded]


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def solve(inst: LpInstance) -> LpResult:
    c = inst.objective
    G = inst.constraints
    n = inst.n
    m = len(G)

    zero_cols = [j for j in range(n) if all(row[j] == 0 for row in G)]
    for j in zero_cols:
        if c[j] > 0:
            ray = tuple(Fraction(int(i == j)) for i in range(n))
            return Unbounded(ray)
    live = [j for j in range(n) if j not in set(zero_cols)]

    # tableau over live columns then slacks; last column is the rhs
    k = len(live)
    width = k + m
    T = []
    for i, row in enumerate(G):
        T.append([row[j] for j in live] + [Fraction(int(i == s)) for s in range(m)] + [Fraction(1)])
    cost = [c[j] for j in live] + [Fraction(0)] * m
    basis = list(range(k, k + m))

    while True:
        # reduced costs r_j = cost_j - sum_i cost_{basis_i} T[i][j]
        entering = None
        for j in range(width):
            if j in basis:
                continue
            r = cost[j] - sum((cost[basis[i]] * T[i][j] for i in range(m)), Fraction(0))
            if r > 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:
            ray_live = [Fraction(0)] * width
            ray_live[entering] = Fraction(1)
            for i in range(m):
                ray_live[basis[i]] = -T[i][entering]
            ray = [Fraction(0)] * n
            for pos, j in enumerate(live):
                ray[j] = ray_live[pos]
            return Unbounded(tuple(ray))
        _pivot(T, leaving, entering)
        basis[leaving] = entering

    y = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < k:
            y[live[b]] = T[i][-1]
    witness = tuple(y)
    value = dot(c, witness)
    _verify(inst, witness)
    return Optimal(value, witness)


def _pivot(T, r, s):
    p = T[r][s]
    T[r] = [v / p for v in T[r]]
    pivot_row = T[r]
    for i, row in enumerate(T):
        if i != r and row[s] != 0:
            f = row[s]
            T[i] = [a - f * b for a, b in zip(row, pivot_row)]


def _verify(inst: LpInstance, y) -> None:
    if any(v < 0 for v in y):
        raise AssertionError("simplex produced a negative coordinate")
    for row in inst.constraints:
        if dot(row, y) > 1:
            raise AssertionError("simplex witness violates a constraint")


def maximize(objective: Sequence, constraints: Sequence[Sequence]) -> LpResult:
    return solve(LpInstance(objective, constraints))
