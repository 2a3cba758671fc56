"""
Wiring diagrams of marked pseudoline arrangements.

Wire i enters on the left in row i counted from the top; a swap at
position p exchanges rows p and p+1; "above" means a smaller row.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from math import comb
from typing import Dict, List, Mapping, Sequence, Tuple

from fliplab.errors import InternalFailure, InvalidWordError, MalformedInputError
from signotopes.core import Signotope, triple_index, triples


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    step: int
    position: int
    upper: int
    lower: int


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    word: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(int(p) for p in self.word))
        _simulate(self.n, self.word)

    def crossings(self) -> List[Crossing]:
        return _simulate(self.n, self.word)[0]

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "word": list(self.word)}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "WiringDiagram":
        try:
            n, word = data["n"], data["word"]
        except (KeyError, TypeError):
            raise MalformedInputError("wiring JSON needs 'n' and 'word'")
        if not isinstance(n, int) or not isinstance(word, list):
            raise MalformedInputError("wiring JSON: 'n' must be int, 'word' a list")
        return cls(n, tuple(word))


def _simulate(n: int, word: Sequence[int]) -> Tuple[List[Crossing], List[Dict[int, int]]]:
    """
    Replays the word; returns the crossings and, per step, the row
    (1-based) of every wire just before that swap.
    """
    if not isinstance(n, int) or n < 3:
        raise MalformedInputError(f"n must be an integer >= 3, got {n!r}")
    if len(word) != comb(n, 2):
        raise InvalidWordError(f"word must have C({n},2) = {comb(n, 2)} swaps, got {len(word)}")

    order = list(range(1, n + 1))
    seen = set()
    crossings: List[Crossing] = []
    rows_before: List[Dict[int, int]] = []
    for step, p in enumerate(word):
        if not 1 <= p <= n - 1:
            raise InvalidWordError(f"swap position {p} at step {step} out of range 1..{n - 1}")
        a, b = order[p - 1], order[p]
        pair = (min(a, b), max(a, b))
        if pair in seen:
            raise InvalidWordError(f"wires {pair} swap twice (step {step})")
        seen.add(pair)
        rows_before.append({w: r + 1 for r, w in enumerate(order)})
        crossings.append(Crossing(step, p, a, b))
        order[p - 1], order[p] = b, a

    if order != list(range(n, 0, -1)):
        raise InvalidWordError(f"final wire order {order} is not reversed")
    return crossings, rows_before


# ---------- Local sequences ----------


def meets_first(s: Signotope, line: int, m: int, m2: int) -> bool:
    """
    True iff `line` crosses m before m2 going left to right.
    In a '+' triple each member meets the other two in decreasing
    label order, in a '-' triple in increasing order.
    """
    plus = s.is_plus((line, m, m2))
    return (m > m2) == plus


def local_sequences(s: Signotope) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for line in range(1, s.n + 1):
        others = [m for m in range(1, s.n + 1) if m != line]

        def cmp(a: int, b: int, line: int = line) -> int:
            return -1 if meets_first(s, line, a, b) else 1

        out[line] = sorted(others, key=cmp_to_key(cmp))
    return out


# ---------- Conversions ----------


def sweep_word(order: Sequence[int], seqs: Mapping[int, Sequence[int]]) -> List[int]:
    """
    Sweeps from `order` (top to bottom), always performing the topmost
    swap whose two curves are each other's next crossing in `seqs`.
    Returns the 1-based swap positions.
    """
    order = list(order)
    ptr = {c: 0 for c in order}
    total = sum(len(s) for s in seqs.values()) // 2
    word: List[int] = []

    for _ in range(total):
        for p in range(len(order) - 1):
            a, b = order[p], order[p + 1]
            if (
                ptr[a] < len(seqs[a]) and ptr[b] < len(seqs[b])
                and seqs[a][ptr[a]] == b and seqs[b][ptr[b]] == a
            ):
                break
        else:
            raise InternalFailure(f"sweep stalled at order {order}")
        order[p], order[p + 1] = b, a
        ptr[a] += 1
        ptr[b] += 1
        word.append(p + 1)
    return word


def signotope_to_wiring(s: Signotope) -> WiringDiagram:
    """Sweeps left to right along the local sequences of s."""
    word = sweep_word(range(1, s.n + 1), local_sequences(s))
    logger.debug("wiring of %s: %s", s, word)
    return WiringDiagram(s.n, tuple(word))


def wiring_to_signotope(w: WiringDiagram) -> Signotope:
    """sigma(ijk) = '+' iff wire j lies below the swap of wires i and k."""
    n = w.n
    crossings, rows_before = _simulate(n, w.word)
    swap_at: Dict[Tuple[int, int], int] = {}
    for c in crossings:
        swap_at[(min(c.upper, c.lower), max(c.upper, c.lower))] = c.step

    index = triple_index(n)
    bits = 0
    for i, j, k in triples(n):
        step = swap_at[(i, k)]
        position = crossings[step].position
        if rows_before[step][j] > position + 1:
            bits |= 1 << index[(i, j, k)]
    return Signotope(n, bits)
