from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from fliplab.errors import (
    DegenerateArrangementError,
    InternalFailure,
    MalformedInputError,
    PreconditionError,
)
from shelling.sequences import ShellingSequence, replay_shelling, shelling_sequence
from signotopes.core import Signotope, Triple, triple_index, triples


logger = logging.getLogger(__name__)

Rational = Union[Fraction, int, str]


def _to_fraction(value: Rational) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise MalformedInputError(f"not a rational number: {value!r}")


@dataclass(frozen=True)
class SlopeVector:
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vals = tuple(_to_fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise MalformedInputError(f"slopes must increase strictly: {[str(v) for v in vals]}")

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def default(cls, n: int) -> "SlopeVector":
        return cls(tuple(Fraction(i) for i in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SlopeVector":
        """Comma separated rationals, e.g. '1,3/2,4'."""
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))


def random_slope_vector(n: int, rng: np.random.Generator) -> SlopeVector:
    start = Fraction(int(rng.integers(-10, 11)), int(rng.integers(1, 5)))
    values = [start]
    for _ in range(n - 1):
        gap = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 7)))
        values.append(values[-1] + gap)
    return SlopeVector(tuple(values))


@dataclass(frozen=True)
class LineArrangement:
    """
    Lines y = slopes[i] x + intercepts[i]; line i (1-based) has the
    i-th smallest slope.
    """

    slopes: Tuple[Fraction, ...]
    intercepts: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "slopes", SlopeVector(tuple(self.slopes)).values)
        object.__setattr__(self, "intercepts", tuple(_to_fraction(b) for b in self.intercepts))
        if len(self.slopes) != len(self.intercepts):
            raise MalformedInputError("one intercept per slope is required")
        if len(self.slopes) < 3:
            raise MalformedInputError("an arrangement needs at least 3 lines")

    @property
    def n(self) -> int:
        return len(self.slopes)

    def crossing(self, i: int, k: int) -> Tuple[Fraction, Fraction]:
        """Crossing point of lines i and k (1-based)."""
        li, lk = self.slopes[i - 1], self.slopes[k - 1]
        bi, bk = self.intercepts[i - 1], self.intercepts[k - 1]
        x = (bk - bi) / (li - lk)
        return x, li * x + bi

    def orientation(self, t: Triple) -> Fraction:
        """Signed height of the (i,k) crossing above line j."""
        i, j, k = t
        li, lj, lk = self.slopes[i - 1], self.slopes[j - 1], self.slopes[k - 1]
        bi, bj, bk = self.intercepts[i - 1], self.intercepts[j - 1], self.intercepts[k - 1]
        return (li - lj) * (bk - bi) / (li - lk) + bi - bj

    def is_simple(self) -> bool:
        return all(self.orientation(t) != 0 for t in triples(self.n))

    def to_json(self) -> Dict[str, object]:
        return {
            "slopes": [str(v) for v in self.slopes],
            "intercepts": [str(v) for v in self.intercepts],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "LineArrangement":
        try:
            return cls(tuple(data["slopes"]), tuple(data["intercepts"]))
        except (KeyError, TypeError):
            raise MalformedInputError("arrangement JSON needs 'slopes' and 'intercepts' lists")


def combinatorial_type(L: LineArrangement) -> Signotope:
    n = L.n
    index = triple_index(n)
    bits = 0
    for t in triples(n):
        value = L.orientation(t)
        if value == 0:
            raise DegenerateArrangementError(t)
        if value > 0:
            bits |= 1 << index[t]
    return Signotope(n, bits)


def realize_shellable(
    s: Signotope,
    slopes: Optional[SlopeVector] = None,
    sequence: Optional[ShellingSequence] = None,
) -> LineArrangement:
    """
    Inserts the lines in reverse shelling order. Each new line gets the
    intercept that puts every existing crossing strictly on its side,
    with margin 1.
    """
    n = s.n
    slopes = slopes or SlopeVector.default(n)
    if len(slopes) != n:
        raise MalformedInputError(f"need {n} slopes, got {len(slopes)}")
    if sequence is None:
        sequence = shelling_sequence(s)
        if sequence is None:
            raise PreconditionError("signotope is not shellable")
    elif not replay_shelling(s, sequence):
        raise PreconditionError("shelling sequence does not fit the signotope")

    lam = slopes.values
    intercepts: Dict[int, Fraction] = {}
    placed: List[int] = []
    for line, side in reversed(list(zip(sequence.order, sequence.sides))):
        mu = lam[line - 1]
        if len(placed) < 2:
            b = Fraction(0)
        else:
            offsets = []
            for i, k in combinations(placed, 2):
                x = (intercepts[k] - intercepts[i]) / (lam[i - 1] - lam[k - 1])
                y = lam[i - 1] * x + intercepts[i]
                offsets.append(y - mu * x)
            # 'above': crossings above the new line
            b = min(offsets) - 1 if side == "above" else max(offsets) + 1
        intercepts[line] = b
        placed.append(line)

    L = LineArrangement(lam, tuple(intercepts[i] for i in range(1, n + 1)))
    if combinatorial_type(L) != s:
        raise InternalFailure("realized arrangement has the wrong combinatorial type")
    logger.debug("realized %s with intercepts %s", s, [str(b) for b in L.intercepts])
    return L
