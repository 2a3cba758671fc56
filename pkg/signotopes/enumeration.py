from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Tuple

import numpy as np

from signotopes.core import Signotope, MONOTONE_PATTERNS, packet_pattern, all_plus, neighbors, triple_index


@lru_cache(maxsize=None)
def _closing_packets(n: int) -> Tuple[Tuple[Tuple[int, int, int, int], ...], ...]:
    """
    For every triple index t, the packets whose lex-last triple is t:
    packet (i,j,k,l) is complete once (j,k,l) has a sign.
    """
    index = triple_index(n)
    closing: List[List[Tuple[int, int, int, int]]] = [[] for _ in range(comb(n, 3))]
    for i, j, k, l in combinations(range(1, n + 1), 4):
        idxs = (index[(i, j, k)], index[(i, j, l)], index[(i, k, l)], index[(j, k, l)])
        closing[idxs[3]].append(idxs)
    return tuple(tuple(rows) for rows in closing)


def enumerate_signotopes(n: int) -> Iterator[Signotope]:
    """
    All signotopes on [n] by backtracking over sign vectors in lex order
    of triples, pruning on packets as soon as they are complete.
    Independent of flips; yields in increasing bit order.
    """
    size = comb(n, 3)
    closing = _closing_packets(n)
    Signotope(n, 0)  # rejects n < 3

    def extend(idx: int, bits: int) -> Iterator[int]:
        if idx == size:
            yield bits
            return
        for b in (0, 1):
            cand = bits | (b << idx)
            if all(packet_pattern(cand, p) in MONOTONE_PATTERNS for p in closing[idx]):
                yield from extend(idx + 1, cand)

    for bits in extend(0, 0):
        yield Signotope(n, bits)


def count_signotopes(n: int) -> int:
    return sum(1 for _ in enumerate_signotopes(n))


def random_signotope(
    n: int,
    rng: np.random.Generator,
    steps: Optional[int] = None,
) -> Signotope:
    """Endpoint of a random flip walk from all-plus (default 4*C(n,3) steps)."""
    s = all_plus(n)
    if steps is None:
        steps = 4 * comb(n, 3)
    for _ in range(steps):
        nbrs = neighbors(s)
        s = nbrs[int(rng.integers(len(nbrs)))][1]
    return s
