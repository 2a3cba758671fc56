"""
Triple classes and the cylindricity predicates.

An intersecting arrangement is cylindrical iff it has a center face;
equivalently it contains no NonKrupp(3) triple, has no clockwise cell,
and its unbounded face has eccentricity n.
"""
from __future__ import annotations

from collections import deque
from enum import Enum
from itertools import combinations
from typing import Dict, List, Tuple

from fliplab.errors import PreconditionError
from pcircles.planar import PlanarArrangement


class TripleClass(str, Enum):
    KRUPP = "Krupp"
    NONKRUPP2 = "NonKrupp(2)"
    NONKRUPP3 = "NonKrupp(3)"
    NONKRUPP4 = "NonKrupp(4)"

    @classmethod
    def nonkrupp(cls, m: int) -> "TripleClass":
        return {2: cls.NONKRUPP2, 3: cls.NONKRUPP3, 4: cls.NONKRUPP4}[m]


def classify_triple(a: PlanarArrangement, i: int, j: int, k: int) -> TripleClass:
    """
    Krupp iff the two crossings of every pair are separated by the
    third circle; otherwise NonKrupp(m) with m the number of edges of
    the unbounded face of the three-circle subarrangement.
    """
    if len({i, j, k}) != 3:
        raise PreconditionError(f"classify needs three distinct circles, got {(i, j, k)}")
    sub = a.restrict((i, j, k))
    krupp = True
    for x, y in combinations(sorted((i, j, k)), 2):
        (z,) = {i, j, k} - {x, y}
        sides = {z in sub.vertex_inside((x, y, s)) for s in (0, 1)}
        if len(sides) == 1:
            krupp = False
            break
    if krupp:
        return TripleClass.KRUPP
    m = len(sub.faces[sub.unbounded_face])
    if m not in (2, 3, 4):
        raise PreconditionError(f"unbounded face of {(i, j, k)} has {m} edges")
    return TripleClass.nonkrupp(m)


def classify_all(a: PlanarArrangement) -> Dict[Tuple[int, int, int], TripleClass]:
    return {t: classify_triple(a, *t) for t in combinations(a.labels, 3)}


def class_histogram(a: PlanarArrangement) -> Dict[str, int]:
    counts = {c.value: 0 for c in TripleClass}
    for cls in classify_all(a).values():
        counts[cls.value] += 1
    return counts


def has_nonkrupp3(a: PlanarArrangement) -> bool:
    return any(cls is TripleClass.NONKRUPP3 for cls in classify_all(a).values())


def is_great_arrangement(a: PlanarArrangement) -> bool:
    return all(cls is TripleClass.KRUPP for cls in classify_all(a).values())


# ---------- cylindricity ----------


def center_faces(a: PlanarArrangement) -> List[int]:
    everything = frozenset(a.labels)
    return [f for f, inside in enumerate(a.inside) if inside == everything]


def is_cylindrical(a: PlanarArrangement) -> bool:
    return bool(center_faces(a))


def clockwise_cells(a: PlanarArrangement) -> List[int]:
    """Bounded faces lying outside every circle on their boundary."""
    U = a.unbounded_face
    return [
        f for f, orbit in enumerate(a.faces)
        if f != U and all(h[2] < 0 for h in orbit)
    ]


def cell_distances(a: PlanarArrangement, face: int) -> Dict[int, int]:
    dist = {face: 0}
    queue = deque([face])
    while queue:
        f = queue.popleft()
        for g, _ in a.dual[f]:
            if g not in dist:
                dist[g] = dist[f] + 1
                queue.append(g)
    return dist


def cell_eccentricity(a: PlanarArrangement, face: int) -> int:
    if not 0 <= face < len(a.faces):
        raise PreconditionError(f"no face {face}")
    return max(cell_distances(a, face).values())


def cylindricity_verdicts(a: PlanarArrangement) -> Dict[str, bool]:
    """The four cylindricity tests; on valid input they all agree."""
    return {
        "center": is_cylindrical(a),
        "no_nonkrupp3": not has_nonkrupp3(a),
        "no_clockwise_cell": not clockwise_cells(a),
        "eccentricity": cell_eccentricity(a, a.unbounded_face) == a.n,
    }


def is_parallel(a: PlanarArrangement, c1: int, c2: int) -> bool:
    """Every vertex off c1 and c2 lies inside both or outside both."""
    for v in a.vertices:
        if {v[0], v[1]} & {c1, c2}:
            continue
        inside = a.vertex_inside(v)
        if (c1 in inside) != (c2 in inside):
            return False
    return True
