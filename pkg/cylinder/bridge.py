"""
Between cylindrical diagrams and planar arrangements.

Rolling the cut cylinder into an annulus puts the top side around a
center face and the bottom side against the unbounded face; moving
left to right becomes counterclockwise, so every curve has the region
above it as interior.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from cylinder.diagram import CylindricalDiagram
from fliplab.errors import InternalFailure, PreconditionError
from pcircles.classify import center_faces
from pcircles.planar import HalfEdge, PlanarArrangement, Vertex


logger = logging.getLogger(__name__)


def diagram_to_planar(d: CylindricalDiagram) -> PlanarArrangement:
    """
    In a swap of upper curve a with lower curve b, b enters the interior
    of a and a leaves the interior of b.
    """
    if d.n < 2:
        raise PreconditionError("a planar arrangement needs at least 2 curves")
    circles: Dict[int, List[Vertex]] = {c: [] for c in range(1, d.n + 1)}
    for c in d.crossings:
        a, b = c.upper, c.lower
        v = (min(a, b), max(a, b), 0 if b > a else 1)
        circles[a].append(v)
        circles[b].append(v)
    bottom = circles[d.n]
    return PlanarArrangement.from_mapping(
        {c: tuple(seq) for c, seq in circles.items()},
        (d.n, bottom[-1], bottom[0]),
    )


def _cut_path(a: PlanarArrangement, center: int) -> List[HalfEdge]:
    """Half-edges crossed by a shortest dual path from `center` to the unbounded face."""
    target = a.unbounded_face
    parent: Dict[int, Optional[Tuple[int, HalfEdge]]] = {center: None}
    queue = deque([center])
    while queue:
        f = queue.popleft()
        if f == target:
            break
        for h in a.faces[f]:
            g = a.face_of[a.twin(h)]
            if g not in parent:
                parent[g] = (f, h)
                queue.append(g)
    path: List[HalfEdge] = []
    f = target
    while parent[f] is not None:
        f, h = parent[f]
        path.append(h)
    path.reverse()
    return path


def planar_to_diagram(
    a: PlanarArrangement, center: Optional[int] = None
) -> Tuple[CylindricalDiagram, Dict[int, int]]:
    """
    Cuts `a` along a shortest dual path from a center face to the
    unbounded face and sweeps the curves left to right. Returns the
    diagram and the map from circle labels to curve numbers (the k-th
    circle crossed from the center is curve k).
    """
    centers = center_faces(a)
    if not centers:
        raise PreconditionError("arrangement is not cylindrical: no face lies inside every circle")
    if center is None:
        center = centers[0]
    elif center not in centers:
        raise PreconditionError(f"face {center} is not a center face")

    path = _cut_path(a, center)
    crossed = [h[0] for h in path]
    if sorted(crossed) != sorted(a.labels):
        raise InternalFailure(f"cut from the center crosses circles {crossed}")
    relabel = {c: k for k, c in enumerate(crossed, start=1)}

    # each curve starts right after the edge the cut passes through
    seqs: Dict[int, List[Vertex]] = {}
    for h in path:
        c, k, _ = h
        seq = a.seq(c)
        start = (k + 1) % len(seq)
        seqs[relabel[c]] = list(seq[start:] + seq[:start])

    n = a.n
    order = list(range(1, n + 1))
    ptr = {c: 0 for c in order}
    word: List[int] = []
    for _ in range(n * (n - 1)):
        for p in range(n - 1):
            x, y = order[p], order[p + 1]
            if ptr[x] < len(seqs[x]) and ptr[y] < len(seqs[y]) and seqs[x][ptr[x]] == seqs[y][ptr[y]]:
                break
        else:
            raise InternalFailure(f"sweep of the cut arrangement stalled at order {order}")
        order[p], order[p + 1] = y, x
        ptr[x] += 1
        ptr[y] += 1
        word.append(p + 1)

    logger.debug("cut at face %d gives word %s", center, word)
    return CylindricalDiagram(n, tuple(word)), relabel
