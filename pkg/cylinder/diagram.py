"""
Cylindrical diagrams: n x-monotone curves on a cylinder cut open along
a vertical line.

The word lists adjacent swaps left to right; position p exchanges the
curves in rows p and p+1, counted from the top. The top side is the
common center of the curves. Every pair of curves swaps exactly twice
and the order at the cut is 1..n on both sides.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from fliplab.errors import InvalidWordError, MalformedInputError, PreconditionError
from signotopes.wiring import Crossing, sweep_word


logger = logging.getLogger(__name__)

SIGNS = ("minus", "plus")


def _simulate(n: int, word: Sequence[int]) -> List[Crossing]:
    if not isinstance(n, int) or n < 1:
        raise MalformedInputError(f"n must be a positive integer, got {n!r}")
    if len(word) != 2 * comb(n, 2):
        raise InvalidWordError(f"word must have 2*C({n},2) = {2 * comb(n, 2)} swaps, got {len(word)}")

    order = list(range(1, n + 1))
    swaps: Dict[Tuple[int, int], int] = {}
    crossings: List[Crossing] = []
    for step, p in enumerate(word):
        if not 1 <= p <= n - 1:
            raise InvalidWordError(f"swap position {p} at step {step} out of range 1..{n - 1}")
        a, b = order[p - 1], order[p]
        pair = (min(a, b), max(a, b))
        swaps[pair] = swaps.get(pair, 0) + 1
        if swaps[pair] > 2:
            raise InvalidWordError(f"curves {pair} swap more than twice (step {step})")
        crossings.append(Crossing(step, p, a, b))
        order[p - 1], order[p] = b, a

    if order != list(range(1, n + 1)):
        raise InvalidWordError(f"order at the end of the word is {order}, not 1..{n}")
    return crossings


@dataclass(frozen=True)
class CylindricalDiagram:
    n: int
    word: Tuple[int, ...]
    crossings: Tuple[Crossing, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(int(p) for p in self.word))
        object.__setattr__(self, "crossings", tuple(_simulate(self.n, self.word)))

    def curves_at(self, step: int) -> Tuple[int, int]:
        c = self.crossings[step]
        return c.upper, c.lower

    def sequences(self) -> Dict[int, List[int]]:
        """For every curve, the curves it meets left to right."""
        out: Dict[int, List[int]] = {c: [] for c in range(1, self.n + 1)}
        for c in self.crossings:
            out[c.upper].append(c.lower)
            out[c.lower].append(c.upper)
        return out

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "word": list(self.word)}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "CylindricalDiagram":
        try:
            n, word = data["n"], data["word"]
        except (KeyError, TypeError):
            raise MalformedInputError("diagram JSON needs 'n' and 'word'")
        if not isinstance(n, int) or not isinstance(word, list):
            raise MalformedInputError("diagram JSON: 'n' must be int, 'word' a list")
        return cls(n, tuple(word))


# ---------- canonical diagrams ----------


def canonical_diagram(n: int, sign: str = "minus") -> CylindricalDiagram:
    """
    minus: every curve meets the others in increasing, then in
    decreasing order. plus is its mirror image: decreasing, then
    increasing.
    """
    if sign not in SIGNS:
        raise MalformedInputError(f"sign must be one of {SIGNS}, got {sign!r}")
    if n < 1:
        raise MalformedInputError(f"n must be positive, got {n}")
    labels = list(range(1, n + 1))
    down = sweep_word(labels, {c: [x for x in labels if x != c] for c in labels})
    up = sweep_word(labels[::-1], {c: [x for x in labels[::-1] if x != c] for c in labels})
    d = CylindricalDiagram(n, tuple(down + up))
    return d if sign == "minus" else mirror_diagram(d)


def mirror_diagram(d: CylindricalDiagram) -> CylindricalDiagram:
    """Upside down, curve i renamed n+1-i."""
    return CylindricalDiagram(d.n, tuple(d.n - p for p in d.word))


# ---------- braid flips ----------


@dataclass(frozen=True)
class DiagramFlip:
    """
    Three swaps at `times` that can be made consecutive and are braided.
    `moved` is the curve not taking part in the first swap; it passes
    over (pattern "down") or under the crossing of the other two.
    `pivot` takes part in the first and the last swap.
    """

    times: Tuple[int, int, int]
    curves: Tuple[int, int, int]
    moved: int
    downward: bool
    pivot: int

    @property
    def sinking(self) -> Tuple[int, ...]:
        """Curves that end up below the crossing of the other two."""
        if self.downward:
            return tuple(c for c in self.curves if c != self.pivot)
        return (self.pivot,)

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": "braid",
            "participants": list(self.curves),
            "times": list(self.times),
            "moved": self.moved,
            "sinking": list(self.sinking),
        }

    def mirrored(self, n: int) -> "DiagramFlip":
        return DiagramFlip(
            self.times,
            tuple(sorted(n + 1 - c for c in self.curves)),
            n + 1 - self.moved,
            not self.downward,
            n + 1 - self.pivot,
        )


def _commute(p: int, q: int) -> bool:
    return abs(p - q) >= 2


def _braided_word(word: Sequence[int], t1: int, t2: int, t3: int) -> Optional[List[int]]:
    """
    The word with the swaps at t1 < t2 < t3 brought together and braided,
    or None when some swap in between is forced both before and after.
    """
    p, r = word[t1], word[t2]
    if word[t3] != p or abs(p - r) != 1:
        return None
    middle = [t for t in range(t1 + 1, t3) if t != t2]

    after: Dict[int, bool] = {}
    for t in middle:
        after[t] = any(not _commute(word[t], word[s]) for s in (t1, t2) if s < t) or any(
            after[s] and not _commute(word[t], word[s]) for s in middle if s < t
        )
    before: Dict[int, bool] = {}
    for t in reversed(middle):
        before[t] = any(not _commute(word[t], word[s]) for s in (t2, t3) if s > t) or any(
            before[s] and not _commute(word[t], word[s]) for s in middle if s > t
        )
    if any(after[t] and before[t] for t in middle):
        return None

    head = [word[t] for t in middle if not after[t]]
    tail = [word[t] for t in middle if after[t]]
    return list(word[:t1]) + head + [r, p, r] + tail + list(word[t3 + 1:])


def _flip_at(d: CylindricalDiagram, t1: int, t2: int, t3: int) -> DiagramFlip:
    first, last = set(d.curves_at(t1)), set(d.curves_at(t3))
    involved = first | set(d.curves_at(t2)) | last
    (moved,) = involved - first
    (pivot,) = first & last
    return DiagramFlip(
        times=(t1, t2, t3),
        curves=tuple(sorted(involved)),
        moved=moved,
        downward=d.word[t2] == d.word[t1] - 1,
        pivot=pivot,
    )


def diagram_flips(d: CylindricalDiagram) -> List[DiagramFlip]:
    """Every triangle of the word that does not wrap around the cut."""
    word = d.word
    out: List[DiagramFlip] = []
    for t1, p in enumerate(word):
        t3 = next((t for t in range(t1 + 1, len(word)) if word[t] == p), None)
        if t3 is None:
            continue
        for t2 in range(t1 + 1, t3):
            if abs(word[t2] - p) == 1 and _braided_word(word, t1, t2, t3) is not None:
                out.append(_flip_at(d, t1, t2, t3))
    return out


def apply_diagram_flip(d: CylindricalDiagram, flip: DiagramFlip) -> CylindricalDiagram:
    new = _braided_word(d.word, *flip.times)
    if new is None:
        raise PreconditionError(f"swaps at {flip.times} do not form a triangle")
    return CylindricalDiagram(d.n, tuple(new))


def apply_diagram_flips(d: CylindricalDiagram, flips: Sequence[DiagramFlip]) -> CylindricalDiagram:
    for flip in flips:
        d = apply_diagram_flip(d, flip)
    return d


def diagram_neighbors(d: CylindricalDiagram) -> List[Tuple[Tuple[int, int, int], CylindricalDiagram]]:
    return [(f.times, apply_diagram_flip(d, f)) for f in diagram_flips(d)]


# ---------- normal form ----------


def normal_form(d: CylindricalDiagram) -> Tuple[int, ...]:
    """Lexicographically least word obtained from d by commuting distant swaps."""
    word = d.word
    g = nx.DiGraph()
    g.add_nodes_from(range(len(word)))
    for t in range(len(word)):
        for s in range(t + 1, len(word)):
            if not _commute(word[t], word[s]):
                g.add_edge(t, s)
    order = nx.lexicographical_topological_sort(g, key=lambda t: (word[t], t))
    return tuple(word[t] for t in order)


def same_diagram(d1: CylindricalDiagram, d2: CylindricalDiagram) -> bool:
    """Equal normal forms for some placement of the cut."""
    if d1.n != d2.n:
        return False
    target = normal_form(d1)
    return normal_form(d2) == target or target in cut_forms(d2)


def cut_forms(d: CylindricalDiagram) -> FrozenSet[Tuple[int, ...]]:
    """
    Normal forms of d over every cut of the cylinder. A cut moves by one
    swap when a swap that can come first is rotated to the end; curves
    are renamed by their order at the new cut.
    """
    start = normal_form(d)
    seen = {start}
    stack = [start]
    while stack:
        word = stack.pop()
        for t in range(len(word)):
            if not all(_commute(word[s], word[t]) for s in range(t)):
                continue
            rotated = word[:t] + word[t + 1:] + (word[t],)
            form = normal_form(CylindricalDiagram(d.n, rotated))
            if form not in seen:
                seen.add(form)
                stack.append(form)
    logger.debug("%d cuts of %s", len(seen), d.word)
    return frozenset(seen)


def random_diagram(n: int, rng: np.random.Generator, steps: Optional[int] = None) -> CylindricalDiagram:
    """A random walk of braid flips from the canonical minus diagram."""
    d = canonical_diagram(n, "minus")
    steps = 4 * n ** 3 if steps is None else steps
    for _ in range(steps):
        flips = diagram_flips(d)
        if not flips:
            break
        d = apply_diagram_flip(d, flips[int(rng.integers(len(flips)))])
    return d
