"""
Exact primal simplex over Fractions, Bland's rule.

Solves  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so the slack
basis at the origin is feasible and no first phase is needed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from fliplab.errors import InternalFailure, MalformedInputError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LPResult:
    status: str  # 'optimal' | 'unbounded'
    value: Optional[Fraction]
    x: Optional[List[Fraction]]
    pivots: int


class SimplexTableau:
    def __init__(
        self,
        A: Sequence[Sequence[Fraction]],
        b: Sequence[Fraction],
        c: Sequence[Fraction],
    ) -> None:
        self.m = len(A)
        self.n = len(c)
        if len(b) != self.m or any(len(row) != self.n for row in A):
            raise MalformedInputError("inconsistent LP dimensions")
        if any(Fraction(v) < 0 for v in b):
            raise MalformedInputError("right-hand side must be nonnegative")
        self.A = [[Fraction(v) for v in row] for row in A]
        self.b = [Fraction(v) for v in b]
        # reduced costs of the non-basic columns; objective value = -self.z
        self.c = [Fraction(v) for v in c]
        self.z = Fraction(0)
        # variables 0..n-1 are structural, n..n+m-1 slacks
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        self.z -= delta * self.b[i]

        row = self.A[i]
        for l in range(self.n):
            row[l] = 1 / piv if l == j else row[l] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            other = self.A[k]
            for l in range(self.n):
                other[l] = -f / piv if l == j else other[l] - f * row[l]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min(
                (self.b[i] / self.A[i][j], self.b_vars[i], i)
                for i in range(self.m)
                if self.A[i][j] > 0
            )
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def solve(self, max_pivots: int = 100000) -> LPResult:
        while self.pivots < max_pivots:
            status = self.bland_primal_step()
            if status == "optimal":
                x = [Fraction(0)] * self.n
                for i, var in enumerate(self.b_vars):
                    if var < self.n:
                        x[var] = self.b[i]
                logger.debug("simplex optimal after %d pivots: %s", self.pivots, -self.z)
                return LPResult("optimal", -self.z, x, self.pivots)
            if status == "unbounded":
                return LPResult("unbounded", None, None, self.pivots)
        raise InternalFailure(f"simplex did not finish within {max_pivots} pivots")


def maximize(
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
) -> LPResult:
    return SimplexTableau(A, b, c).solve()
