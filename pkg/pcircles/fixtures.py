"""
Small named arrangements: the four arrangements of three circles and
lenses crossed by arcs of other circles.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Tuple

from cylinder.bridge import diagram_to_planar
from cylinder.diagram import CylindricalDiagram
from fliplab.errors import InternalFailure, MalformedInputError
from pcircles.canonical import canonical_code
from pcircles.classify import center_faces
from pcircles.flips import triangle_neighbors
from pcircles.lens import Lens
from pcircles.planar import PlanarArrangement


def krupp() -> PlanarArrangement:
    """Three circles in Venn position."""
    return diagram_to_planar(CylindricalDiagram(3, (1, 2, 1, 2, 1, 2)))


def nonkrupp2() -> PlanarArrangement:
    return diagram_to_planar(CylindricalDiagram(3, (1, 2, 1, 1, 2, 1)))


def nonkrupp4() -> PlanarArrangement:
    return diagram_to_planar(CylindricalDiagram(3, (2, 1, 2, 2, 1, 2)))


def three_circle_classes() -> List[PlanarArrangement]:
    """Representatives of all arrangements of three circles, by flips from Krupp."""
    start = krupp()
    seen = {canonical_code(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for _, b in triangle_neighbors(a):
                code = canonical_code(b)
                if code not in seen:
                    seen[code] = b
                    nxt.append(b)
        frontier = nxt
    return [seen[code] for code in sorted(seen)]


def nonkrupp3() -> PlanarArrangement:
    """The arrangement of three circles without a common interior point."""
    for a in three_circle_classes():
        if not center_faces(a):
            return a
    raise InternalFailure("no non-cylindrical arrangement of three circles found")


FIXTURES: Dict[str, Callable[[], PlanarArrangement]] = {
    "krupp": krupp,
    "nonkrupp2": nonkrupp2,
    "nonkrupp3": nonkrupp3,
    "nonkrupp4": nonkrupp4,
}


def fixture(name: str) -> PlanarArrangement:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise MalformedInputError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")


def _lens_word(k: int) -> Tuple[int, ...]:
    n = k + 2
    word: List[int] = [k + 1]
    word += list(range(k, 0, -1))
    # D_1..D_k reverse, one row below the top
    for i in range(k - 1):
        word += [p + 1 for p in range(1, k - i)]
    word += list(range(k + 1, 1, -1))
    word += [1]
    # D_k..D_1 reverse back among the bottom rows
    for i in range(k - 1):
        word += [p + 2 for p in range(1, k - i)]
    for i in range(1, k + 1):
        word += [i + 1, i]
    if len(word) != n * (n - 1):
        raise InternalFailure(f"lens word has {len(word)} swaps")
    return tuple(word)


def lens_fixture(k: int) -> Tuple[PlanarArrangement, Lens]:
    """
    Circles 1..k cross the lens inside k+1 and outside k+2 in
    transversal arcs, every two of them crossing once inside it.
    """
    if k < 0:
        raise MalformedInputError("k must be nonnegative")
    d = CylindricalDiagram(k + 2, _lens_word(k))
    return diagram_to_planar(d), Lens(left=k + 2, right=k + 1, inside_left=False, inside_right=True)


def capped_lens_fixture() -> Tuple[PlanarArrangement, Lens]:
    """Circle 1 dips into the lens inside 3 and outside 2 and leaves it through 2 again."""
    d = CylindricalDiagram(3, (2, 1, 1, 2, 1, 1))
    return diagram_to_planar(d), Lens(left=2, right=3, inside_left=False, inside_right=True)


def double_crossing_lens_fixture() -> Tuple[PlanarArrangement, Lens]:
    """Circles 2 and 3 cross the lens inside 4 and outside 1, crossing each other twice in it."""
    d = CylindricalDiagram(4, (2, 2, 3, 2, 1, 2, 3, 1, 2, 3, 2, 1))
    return diagram_to_planar(d), Lens(left=1, right=4, inside_left=False, inside_right=True)
