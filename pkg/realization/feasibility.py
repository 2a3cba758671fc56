from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from fliplab.errors import InternalFailure, MalformedInputError
from realization.lines import LineArrangement, SlopeVector, combinatorial_type
from realization.simplex import maximize
from signotopes.core import Signotope, triples
from signotopes.enumeration import enumerate_signotopes


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    slack: Fraction
    arrangement: Optional[LineArrangement]


def _orientation_row(lam: Tuple[Fraction, ...], t: Tuple[int, int, int], n: int) -> List[Fraction]:
    """
    Coefficients of the orientation expression in the intercepts:
    (1-c) b_i - b_j + c b_k with c = (l_i - l_j) / (l_i - l_k).
    """
    i, j, k = t
    c = (lam[i - 1] - lam[j - 1]) / (lam[i - 1] - lam[k - 1])
    row = [Fraction(0)] * n
    row[i - 1] += 1 - c
    row[j - 1] -= 1
    row[k - 1] += c
    return row


def slope_feasibility(s: Signotope, slopes: Optional[SlopeVector] = None) -> FeasibilityResult:
    """
    Decides whether s is realizable by lines with the given slopes.

    With b = u - B the orientation rows have no constant term, so
    u = 0, delta = 0 is feasible. Maximize delta subject to
    sign(t) * E_t(u) >= delta, 0 <= u <= 2B, delta <= 1.
    The rows are invariant under scaling about a common intercept, so a
    strict realization exists iff the optimum is positive.
    """
    n = s.n
    slopes = slopes or SlopeVector.default(n)
    if len(slopes) != n:
        raise MalformedInputError(f"need {n} slopes, got {len(slopes)}")
    lam = slopes.values
    B = 1 + max(abs(v) for v in lam)

    A: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for t in triples(n):
        sgn = 1 if s.is_plus(t) else -1
        row = _orientation_row(lam, t, n)
        A.append([-sgn * v for v in row] + [Fraction(1)])
        rhs.append(Fraction(0))
    for i in range(n):
        box = [Fraction(0)] * (n + 1)
        box[i] = Fraction(1)
        A.append(box)
        rhs.append(2 * B)
    cap = [Fraction(0)] * n + [Fraction(1)]
    A.append(cap)
    rhs.append(Fraction(1))

    objective = [Fraction(0)] * n + [Fraction(1)]
    result = maximize(A, rhs, objective)
    if result.status != "optimal":
        raise InternalFailure("bounded slope LP reported unbounded")

    slack = result.value
    if slack <= 0:
        return FeasibilityResult(False, slack, None)

    u = result.x[:n]
    L = LineArrangement(lam, tuple(v - B for v in u))
    if combinatorial_type(L) != s:
        raise InternalFailure("LP witness has the wrong combinatorial type")
    return FeasibilityResult(True, slack, L)


def count_feasible(n: int, slopes: Optional[SlopeVector] = None) -> Dict[str, int]:
    """How many signotopes on [n] are realizable with the given slopes."""
    slopes = slopes or SlopeVector.default(n)
    total = feasible = 0
    for s in enumerate_signotopes(n):
        total += 1
        if slope_feasibility(s, slopes).feasible:
            feasible += 1
    logger.info("slopes %s: %d of %d signotopes feasible", [str(v) for v in slopes.values], feasible, total)
    return {"n": n, "signotopes": total, "feasible": feasible}
