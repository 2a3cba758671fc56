from __future__ import annotations

from itertools import permutations
from typing import Dict, List

from pcircles.planar import PlanarArrangement, Vertex


def _relabel_vertex(v: Vertex, pi: Dict[int, int]) -> Vertex:
    i, j, s = v
    a, b = pi[i], pi[j]
    if a < b:
        return (a, b, s)
    # the roles of the two circles swap, so does the crossing type
    return (b, a, 1 - s)


def _vertex_code(v: Vertex, n: int) -> int:
    i, j, s = v
    return ((i - 1) * n + (j - 1)) * 2 + s


def _code_under(a: PlanarArrangement, pi: Dict[int, int]) -> bytes:
    n = a.n
    values: List[int] = [n]
    by_new = sorted(a.labels, key=lambda c: pi[c])
    for c in by_new:
        codes = [_vertex_code(_relabel_vertex(v, pi), n) for v in a.seq(c)]
        start = codes.index(min(codes))
        values.append(len(codes))
        values.extend(codes[start:] + codes[:start])
    outer = sorted(
        (pi[c], _vertex_code(_relabel_vertex(u, pi), n), _vertex_code(_relabel_vertex(w, pi), n))
        for c, u, w in (a.arc(h) for h in a.faces[a.unbounded_face])
    )
    values.append(len(outer))
    for arc in outer:
        values.extend(arc)
    return b"".join(v.to_bytes(2, "big") for v in values)


def canonical_code(a: PlanarArrangement) -> bytes:
    """
    Smallest encoding over all relabelings of the circles. Orientations
    and the unbounded face are kept, reflections are not identified.
    """
    best = None
    for image in permutations(range(1, a.n + 1)):
        pi = dict(zip(a.labels, image))
        code = _code_under(a, pi)
        if best is None or code < best:
            best = code
    return best


def isomorphic(a: PlanarArrangement, b: PlanarArrangement) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def relabel(a: PlanarArrangement, pi: Dict[int, int]) -> PlanarArrangement:
    circles = {pi[c]: tuple(_relabel_vertex(v, pi) for v in a.seq(c)) for c in a.labels}
    c, u, w = a.outer
    return PlanarArrangement.from_mapping(
        circles, (pi[c], _relabel_vertex(u, pi), _relabel_vertex(w, pi))
    )
