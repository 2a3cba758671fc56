"""Triangular cells and triangle flips of planar pseudocircle arrangements."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from fliplab.errors import PreconditionError
from pcircles.planar import FaceRef, PlanarArrangement, Vertex


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriangleCell:
    """A bounded face with three edges on three distinct circles."""

    face: int
    vertices: Tuple[Vertex, Vertex, Vertex]
    circles: Tuple[int, int, int]

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": "triangle",
            "participants": list(self.circles),
            "vertices": [list(v) for v in self.vertices],
        }


CellRef = Union[TriangleCell, int, Iterable[Vertex]]


def _as_cell(a: PlanarArrangement, f: int) -> TriangleCell:
    orbit = a.faces[f]
    return TriangleCell(
        face=f,
        vertices=tuple(sorted(a.origin(h) for h in orbit)),
        circles=tuple(sorted(h[0] for h in orbit)),
    )


def _is_triangle(a: PlanarArrangement, f: int) -> bool:
    orbit = a.faces[f]
    return f != a.unbounded_face and len(orbit) == 3 and len({h[0] for h in orbit}) == 3


def triangle_cells(a: PlanarArrangement) -> List[TriangleCell]:
    return [_as_cell(a, f) for f in range(len(a.faces)) if _is_triangle(a, f)]


def find_triangle(
    a: PlanarArrangement,
    circles: Iterable[int],
    vertex: Vertex,
    skip: Optional[Iterable[Vertex]] = None,
) -> TriangleCell:
    """
    The triangle cell bounded by `circles` that has `vertex` as a corner,
    passing over the cell with corners `skip`.
    """
    want = tuple(sorted(circles))
    skipped = frozenset(tuple(v) for v in skip) if skip is not None else frozenset()
    for cell in triangle_cells(a):
        if cell.circles == want and vertex in cell.vertices and frozenset(cell.vertices) != skipped:
            return cell
    raise PreconditionError(f"no triangle cell on circles {want} at vertex {vertex}")


def resolve_cell(a: PlanarArrangement, cell: CellRef) -> int:
    """Face index of a cell given as a TriangleCell, face index or vertex set."""
    if isinstance(cell, TriangleCell):
        corners = frozenset(cell.vertices)
    elif isinstance(cell, int):
        if not 0 <= cell < len(a.faces):
            raise PreconditionError(f"no face {cell}")
        return cell
    else:
        corners = frozenset(tuple(v) for v in cell)
    for f in range(len(a.faces)):
        if len(a.faces[f]) == len(corners) and a.face_vertices(f) == corners:
            return f
    raise PreconditionError(f"no face with corners {sorted(corners)}")


def stable_ref(a: PlanarArrangement, face: int, sides: Set[Tuple[int, Vertex, Vertex]]) -> FaceRef:
    """A reference to `face` through an arc that is not a side of the flipped triangle."""
    for h in a.faces[face]:
        c, u, w = a.arc(h)
        if (c, u, w) not in sides:
            return FaceRef(c, u, w, left=h[2] > 0)
    raise PreconditionError(f"face {face} has no edge off the flipped triangle")


def _flip(
    a: PlanarArrangement, cell: CellRef, refs: Sequence[FaceRef]
) -> Tuple[PlanarArrangement, List[FaceRef]]:
    f = resolve_cell(a, cell)
    if not _is_triangle(a, f):
        raise PreconditionError(
            f"face {f} with corners {sorted(a.face_vertices(f))} is not a bounded triangle on three circles"
        )
    orbit = a.faces[f]
    sides = {a.arc(h) for h in orbit}
    marker = FaceRef(*a.outer, left=False)
    refs = [stable_ref(a, a.face_at(r), sides) for r in (marker, *refs)]

    circles = dict(a.circles)
    for h in orbit:
        c, k, _ = h
        seq = list(circles[c])
        m = len(seq)
        y, z = seq[k], seq[(k + 1) % m]
        p, q = seq[(k - 1) % m], seq[(k + 2) % m]
        seq[k], seq[(k + 1) % m] = z, y
        circles[c] = tuple(seq)
        # arcs next to the swapped corners keep the faces beside them
        for n_ref, r in enumerate(refs):
            if r.circle != c:
                continue
            if (r.u, r.w) == (p, y):
                refs[n_ref] = FaceRef(c, p, z, r.left)
            elif (r.u, r.w) == (z, q):
                refs[n_ref] = FaceRef(c, y, q, r.left)

    outer, *tracked = refs
    logger.debug("flipped triangle %s", sorted(a.face_vertices(f)))
    return PlanarArrangement.from_mapping(circles, (outer.circle, outer.u, outer.w)), tracked


def flip_triangle_cell(a: PlanarArrangement, cell: CellRef) -> PlanarArrangement:
    """
    Moves each side of the triangle across the opposite corner. On every
    one of the three circles the two corners of the cell swap places;
    vertex ids are kept, so the flipped cell has the same corners and
    flipping it again restores `a`.
    """
    return _flip(a, cell, ())[0]


def flip_tracking(a: PlanarArrangement, cell: CellRef, ref: FaceRef) -> Tuple[PlanarArrangement, FaceRef]:
    """
    Flips `cell` and follows the face referenced by `ref`, which must not
    be the cell itself.
    """
    b, (new_ref,) = _flip(a, cell, (ref,))
    return b, new_ref


def triangle_neighbors(a: PlanarArrangement) -> List[Tuple[Tuple[Vertex, ...], PlanarArrangement]]:
    """(corner tuple, flipped arrangement) for every triangle cell."""
    return [(cell.vertices, flip_triangle_cell(a, cell.face)) for cell in triangle_cells(a)]


def apply_triangle_flips(a: PlanarArrangement, flips: Iterable[CellRef]) -> PlanarArrangement:
    for cell in flips:
        a = flip_triangle_cell(a, cell)
    return a
