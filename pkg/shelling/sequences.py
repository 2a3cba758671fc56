from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from fliplab.errors import InternalFailure, MalformedInputError, PreconditionError
from signotopes.core import Signotope, Triple, flip, is_flippable, triple_index, triples


logger = logging.getLogger(__name__)

SIDES = ("above", "below")


@dataclass(frozen=True)
class ShellingSequence:
    """
    Removal order of the lines and, per removed line, the side on which
    all crossings of the lines still present lie. Lines removed with at
    most one other line left carry "above".
    """

    order: Tuple[int, ...]
    sides: Tuple[str, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise MalformedInputError(f"shelling order {self.order} is not a permutation")
        if len(self.sides) != len(self.order) or any(x not in SIDES for x in self.sides):
            raise MalformedInputError("one side ('above'/'below') per line is required")

    def to_json(self) -> Dict[str, object]:
        return {"order": list(self.order), "sides": list(self.sides)}


def _check_line(s: Signotope, line: int) -> None:
    if not 1 <= line <= s.n:
        raise MalformedInputError(f"line {line} out of range 1..{s.n}")


def crossing_above(s: Signotope, line: int, m: int, m2: int) -> bool:
    """
    True iff the crossing of m and m2 lies above `line`: the sign is
    '+' and `line` is the middle label, or '-' and it is not.
    """
    i, j, k = sorted((line, m, m2))
    return s.is_plus((i, j, k)) == (line == j)


def _side_within(s: Signotope, line: int, alive: Iterable[int]) -> str:
    others = [m for m in alive if m != line]
    above = below = False
    for m, m2 in combinations(others, 2):
        if crossing_above(s, line, m, m2):
            above = True
        else:
            below = True
        if above and below:
            return "none"
    if below:
        return "below"
    return "above"


def extreme_side(s: Signotope, line: int) -> str:
    """'above', 'below' or 'none' for `line` in the whole arrangement."""
    _check_line(s, line)
    return _side_within(s, line, range(1, s.n + 1))


# ---------- Shelling sequences ----------


def shelling_sequence(s: Signotope) -> Optional[ShellingSequence]:
    """
    Backtracking search over the choice of extreme line, memoized on
    the set of lines still present. Lines are tried in label order.
    """
    n = s.n
    dead_ends: set = set()

    def search(alive: FrozenSet[int]) -> Optional[List[Tuple[int, str]]]:
        if len(alive) <= 2:
            return [(line, "above") for line in sorted(alive)]
        if alive in dead_ends:
            return None
        for line in sorted(alive):
            side = _side_within(s, line, alive)
            if side == "none":
                continue
            rest = search(alive - {line})
            if rest is not None:
                return [(line, side)] + rest
        dead_ends.add(alive)
        return None

    steps = search(frozenset(range(1, n + 1)))
    if steps is None:
        return None
    return ShellingSequence(tuple(x for x, _ in steps), tuple(y for _, y in steps))


def is_shellable(s: Signotope) -> bool:
    return shelling_sequence(s) is not None


def replay_shelling(s: Signotope, seq: ShellingSequence) -> bool:
    """Checks that every removal in `seq` takes an extreme line on its stated side."""
    if len(seq.order) != s.n:
        return False
    alive = set(range(1, s.n + 1))
    for line, side in zip(seq.order, seq.sides):
        if len(alive) > 2 and _side_within(s, line, sorted(alive)) != side:
            return False
        alive.discard(line)
    return True


def from_shelling(n: int, order: Sequence[int], sides: Sequence[str]) -> Signotope:
    """
    The signotope whose lines, removed in `order`, are extreme on
    `sides`. Each triple is decided by its first removed member.
    """
    seq = ShellingSequence(tuple(order), tuple(sides))
    if len(seq.order) != n:
        raise MalformedInputError(f"shelling order has {len(seq.order)} lines, expected {n}")
    rank = {line: pos for pos, line in enumerate(seq.order)}
    index = triple_index(n)
    bits = 0
    for t in triples(n):
        first = min(t, key=lambda x: rank[x])
        above = seq.sides[rank[first]] == "above"
        if above == (first == t[1]):
            bits |= 1 << index[t]
    return Signotope(n, bits)


# ---------- Sweeps ----------


def _wrong_triples(s: Signotope, line: int, side: str, alive: Sequence[int]) -> List[Triple]:
    want_above = side == "above"
    others = sorted(m for m in alive if m != line)
    wrong = []
    for m, m2 in combinations(others, 2):
        if crossing_above(s, line, m, m2) != want_above:
            wrong.append(tuple(sorted((line, m, m2))))
    return sorted(wrong)


def _sweep(
    s: Signotope,
    line: int,
    side: str,
    alive: Sequence[int],
) -> Tuple[Signotope, List[Triple]]:
    """
    Moves `line` across the crossings of the `alive` lines that lie on
    the wrong side, one triangle at a time (lowest flippable triple
    first). Every wrong triple is flipped exactly once.
    """
    if side not in SIDES:
        raise MalformedInputError(f"side must be 'above' or 'below', got {side!r}")
    pending = _wrong_triples(s, line, side, alive)
    path: List[Triple] = []
    while pending:
        for t in pending:
            if is_flippable(s, t):
                break
        else:
            raise InternalFailure(
                f"sweep of line {line} to {side} stalled with {len(pending)} crossings left"
            )
        s = flip(s, t)
        path.append(t)
        pending.remove(t)
    return s, path


def sweep_line_extreme(s: Signotope, line: int, side: str) -> List[Triple]:
    """Triangle flips after which `line` is extreme on `side`."""
    _check_line(s, line)
    _, path = _sweep(s, line, side, range(1, s.n + 1))
    logger.debug("sweep line %d %s: %d flips", line, side, len(path))
    return path


def path_to_shellable(
    a: Signotope,
    target: Signotope,
    sequence: Optional[ShellingSequence] = None,
) -> List[Triple]:
    """
    Flip path from `a` to the shellable `target` flipping every triple
    at most once: the first line of the shelling sequence is swept to
    its side, then the construction repeats without that line.
    """
    if a.n != target.n:
        raise PreconditionError("signotopes on different ground sets")
    if sequence is None:
        sequence = shelling_sequence(target)
        if sequence is None:
            raise PreconditionError("target is not shellable")
    elif not replay_shelling(target, sequence):
        raise PreconditionError("shelling sequence does not fit the target")

    alive = list(range(1, a.n + 1))
    current = a
    path: List[Triple] = []
    for line, side in zip(sequence.order, sequence.sides):
        if len(alive) <= 2:
            break
        current, part = _sweep(current, line, side, alive)
        path.extend(part)
        alive.remove(line)

    if current != target:
        raise InternalFailure("path_to_shellable did not reach the target")
    return path
