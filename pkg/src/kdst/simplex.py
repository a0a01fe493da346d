"""Exact dual simplex for 0/1 covering LPs.

    minimize  sum_j w_j x_j
    s.t.      sum_{j in S_i} x_j >= 1   for every constraint i
              x >= 0

With ``w >= 0`` the all-surplus basis is dual feasible, so no phase one is
needed, and a new covering row can be appended to an optimal tableau and
re-optimized in place (the usual cutting-plane warm start). Pivoting follows
the dual Bland rule: leave on the lowest-indexed infeasible basic variable,
enter on the minimum ratio with ties to the lowest column index.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


class InfeasibleLPError(RuntimeError):
    pass


class CoveringLP:
    def __init__(self, variables: Sequence[Hashable], weights: Mapping[Hashable, Fraction]):
        self.variables = list(variables)
        self.col = {v: j for j, v in enumerate(self.variables)}
        if len(self.col) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.p = len(self.variables)
        self.cost: dict[int, Fraction] = {}
        for v, j in self.col.items():
            w = Fraction(weights[v])
            if w < 0:
                raise ValueError(f"negative weight on {v!r}")
            self.cost[j] = w
        # reduced costs of nonbasic columns; surplus columns are p, p+1, ...
        self.reduced: dict[int, Fraction] = dict(self.cost)
        self.rows: list[dict[int, Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basic: list[int] = []
        self.row_of: dict[int, int] = {}
        self.constraints: list[frozenset[Hashable]] = []
        self.pivots = 0

    def add_constraint(self, support: Iterable[Hashable]) -> None:
        """Append ``sum_{j in support} x_j >= 1`` to the current tableau."""
        support = frozenset(support)
        unknown = [v for v in support if v not in self.col]
        if unknown:
            raise KeyError(f"unknown variables {unknown!r}")
        slack = self.p + len(self.rows)
        # -sum x_j + s = -1, then eliminate columns that are currently basic
        row: dict[int, Fraction] = {self.col[v]: Fraction(-1) for v in support}
        rhs = Fraction(-1)
        for j in [j for j in row if j in self.row_of]:
            coef = row.get(j)
            if not coef:
                continue
            r = self.row_of[j]
            for k, a in self.rows[r].items():
                val = row.get(k, 0) - coef * a
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
            rhs -= coef * self.rhs[r]
        row[slack] = Fraction(1)
        self.rows.append(row)
        self.rhs.append(rhs)
        self.basic.append(slack)
        self.row_of[slack] = len(self.rows) - 1
        self.reduced[slack] = Fraction(0)
        self.constraints.append(support)

    def _pivot(self, r: int, j: int) -> None:
        prow = self.rows[r]
        a = prow[j]
        if a != 1:
            inv = 1 / a
            for k in prow:
                prow[k] *= inv
            self.rhs[r] *= inv
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            coef = row.get(j)
            if not coef:
                continue
            for k, b in prow.items():
                val = row.get(k, 0) - coef * b
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
            self.rhs[i] -= coef * self.rhs[r]
        coef = self.reduced.get(j, 0)
        if coef:
            for k, b in prow.items():
                self.reduced[k] = self.reduced.get(k, 0) - coef * b
        leaving = self.basic[r]
        del self.row_of[leaving]
        self.basic[r] = j
        self.row_of[j] = r
        self.pivots += 1

    def solve(self) -> tuple[dict[Hashable, Fraction], Fraction]:
        while True:
            candidates = [(self.basic[i], i) for i in range(len(self.rows)) if self.rhs[i] < 0]
            if not candidates:
                break
            _, r = min(candidates)
            best = None
            for k, a in self.rows[r].items():
                if a < 0:
                    ratio = self.reduced.get(k, Fraction(0)) / -a
                    if best is None or (ratio, k) < best:
                        best = (ratio, k)
            if best is None:
                raise InfeasibleLPError("covering constraint with empty support")
            self._pivot(r, best[1])
        return self.solution()

    def solution(self) -> tuple[dict[Hashable, Fraction], Fraction]:
        x = {}
        for j, v in enumerate(self.variables):
            r = self.row_of.get(j)
            x[v] = self.rhs[r] if r is not None else Fraction(0)
        value = sum((self.cost[j] * x[v] for j, v in enumerate(self.variables)), Fraction(0))
        return x, value


def lp_subsolver(
    constraints: Iterable[Iterable[Hashable]],
    weights: Mapping[Hashable, Fraction],
    variables: Sequence[Hashable] | None = None,
) -> tuple[dict[Hashable, Fraction], Fraction]:
    """Solve an explicit covering LP exactly; returns (assignment, value)."""
    if variables is None:
        variables = sorted(weights)
    lp = CoveringLP(variables, weights)
    for c in constraints:
        lp.add_constraint(c)
    return lp.solve()

