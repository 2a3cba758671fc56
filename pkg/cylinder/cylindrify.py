"""
Turning an intersecting arrangement into a cylindrical one by triangle
flips.

A face p of maximum depth is fixed and followed through all flips.
While some circle C misses p, C is expanded by flips of triangles that
lie outside C and have an edge on C. When only a digon with another
circle C' remains in the way, C' is swept across the lens between them
until the two circles are parallel, the arrangement without C' is made
cylindrical recursively, and each of its flips is repeated next to C
and C' so that they stay parallel.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from config.settings import load_settings
from fliplab.errors import InternalFailure, PreconditionError
from pcircles.classify import cell_distances, is_cylindrical, is_parallel
from pcircles.flips import (
    find_triangle,
    flip_tracking,
    flip_triangle_cell,
    resolve_cell,
    stable_ref,
    triangle_cells,
)
from pcircles.lens import Lens, lens_sweep
from pcircles.planar import FaceRef, PlanarArrangement, Vertex, check_arrangement


logger = logging.getLogger(__name__)

Flip = Tuple[Vertex, ...]


@dataclass(frozen=True)
class CylindrifyResult:
    flips: Tuple[Flip, ...]
    result: PlanarArrangement

    def to_json(self) -> Dict[str, object]:
        return {
            "flips": [{"kind": "triangle", "vertices": [list(v) for v in f]} for f in self.flips],
            "length": len(self.flips),
            "result": self.result.to_json(),
        }


def _circles_of(v: Vertex) -> Tuple[int, int]:
    return v[0], v[1]


def _rotated(seq: Tuple[Vertex, ...]) -> Tuple[Vertex, ...]:
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def _same_circles(a: PlanarArrangement, b: PlanarArrangement) -> bool:
    """Equal cyclic crossing sequences on every circle."""
    return a.labels == b.labels and all(_rotated(a.seq(c)) == _rotated(b.seq(c)) for c in a.labels)


class _Run:
    """Mutable state of one cylindrification: the arrangement, p and the flips so far."""

    def __init__(self, a: PlanarArrangement, max_steps: int, check: bool) -> None:
        self.a = a
        self.max_steps = max_steps
        self.check = check
        self.flips: List[Flip] = []
        self.p: Optional[FaceRef] = None

    # ---------- bookkeeping ----------

    def p_face(self) -> int:
        return self.a.face_at(self.p)

    def pin(self, face: int) -> None:
        self.p = self.a.face_ref(face)

    def flip(self, cell) -> None:
        if len(self.flips) >= self.max_steps:
            raise InternalFailure(f"cylindrification exceeded {self.max_steps} flips")
        f = resolve_cell(self.a, cell)
        if f == self.p_face():
            # p leaves the triangle through one of its sides
            h = self.a.faces[f][0]
            self.pin(self.a.face_of[self.a.twin(h)])
        sides = {self.a.arc(h) for h in self.a.faces[f]}
        self.p = stable_ref(self.a, self.p_face(), sides)
        corners = tuple(sorted(self.a.face_vertices(f)))
        self.a, self.p = flip_tracking(self.a, f, self.p)
        self.flips.append(corners)
        if self.check:
            check_arrangement(self.a)

    # ---------- the procedure ----------

    def run(self) -> None:
        a = self.a
        depth = [len(s) for s in a.inside]
        self.pin(max(range(len(depth)), key=lambda f: (depth[f], -f)))

        while not is_cylindrical(self.a):
            inside = self.a.inside[self.p_face()]
            missing = [c for c in self.a.labels if c not in inside]
            if not missing:
                raise InternalFailure("p lies in every circle but no center face was found")
            self.expand(missing[0])

    def expand(self, C: int) -> None:
        while C not in self.a.inside[self.p_face()]:
            if is_cylindrical(self.a):
                return
            a = self.a
            pf = self.p_face()

            across = [a.face_of[a.twin(h)] for h in a.faces[pf] if h[0] == C]
            if across:
                self.pin(across[0])
                continue

            cell = self._expanding_triangle(C)
            if cell is not None:
                if cell.face == pf:
                    side = next(h for h in a.faces[pf] if h[0] == C)
                    self.pin(a.face_of[a.twin(side)])
                self.flip(cell.vertices)
                continue

            C2 = self._blocking_digon(C)
            done = len(self.flips)
            self.make_parallel(C, C2)
            self.mimic_without(C, C2)
            if len(self.flips) == done and not is_cylindrical(self.a):
                raise InternalFailure(f"no progress expanding circle {C} past circle {C2}")

    def _expanding_triangle(self, C: int):
        """The triangle outside C with an edge on C closest to p."""
        a = self.a
        dist = cell_distances(a, self.p_face())
        best = None
        for cell in triangle_cells(a):
            if C not in cell.circles or C in a.inside[cell.face]:
                continue
            key = (dist[cell.face], cell.vertices)
            if best is None or key < best[0]:
                best = (key, cell)
        return None if best is None else best[1]

    def _blocking_digon(self, C: int) -> int:
        a = self.a
        for f, orbit in enumerate(a.faces):
            if len(orbit) != 2 or f == a.unbounded_face:
                continue
            circles = {h[0] for h in orbit}
            if C in circles and len(circles) == 2 and C not in a.inside[f]:
                (C2,) = circles - {C}
                if C2 in a.inside[f]:
                    return C2
        raise InternalFailure(f"circle {C} can be expanded neither by a triangle nor by a digon")

    def make_parallel(self, C: int, C2: int) -> None:
        """Sweeps C2 across the lens inside C and outside C2."""
        report = lens_sweep(self.a, Lens(left=C2, right=C, inside_left=False, inside_right=True))
        for corners in report.flips:
            self.flip(corners)
        if not is_parallel(self.a, C, C2):
            raise InternalFailure(f"circles {C} and {C2} are not parallel after the lens sweep")
        logger.debug("circle %d made parallel to %d with %d flips", C2, C, len(report.flips))

    def mimic_without(self, C: int, C2: int) -> None:
        sub = self.a.without(C2)
        inner = _Run(sub, self.max_steps - len(self.flips), self.check)
        inner.run()

        current = sub
        for corners in inner.flips:
            f = resolve_cell(current, corners)
            circles = {h[0] for h in current.faces[f]}
            self._mimic(corners, circles, C, C2)
            current = flip_triangle_cell(current, f)
            if not _same_circles(self.a.without(C2), current):
                raise InternalFailure(f"mimicking flip {corners} diverged from the subarrangement")

    def _mimic(self, corners: Flip, circles: set, C: int, C2: int) -> None:
        if C not in circles:
            self.flip(corners)
            return
        X, Y = sorted(circles - {C})
        y1 = next(v for v in corners if set(_circles_of(v)) == {C, X})
        y2 = next(v for v in corners if set(_circles_of(v)) == {C, Y})
        x = next(v for v in corners if set(_circles_of(v)) == {X, Y})

        if not self._consecutive(C, y1, y2):
            self._transfer_digon(C, C2, ((X, y1), (Y, y2)))
            if not self._consecutive(C, y1, y2):
                raise InternalFailure(f"digon between {C} and {C2} stuck on edge {y1}-{y2}")

        for first, second in ((C, C2), (C2, C)):
            try:
                cell = find_triangle(self.a, (first, X, Y), x)
            except PreconditionError:
                continue
            self.flip(cell.vertices)
            try:
                follow = find_triangle(self.a, (second, X, Y), x)
            except PreconditionError:
                raise InternalFailure(f"circle {second} cannot follow {first} across {x}")
            self.flip(follow.vertices)
            return
        raise InternalFailure(f"no triangle of {C} or {C2} at vertex {x}")

    def _consecutive(self, C: int, u: Vertex, w: Vertex) -> bool:
        seq = self.a.seq(C)
        k, m = seq.index(u), len(seq)
        return w in (seq[(k + 1) % m], seq[(k - 1) % m])

    def _transfer_digon(self, C: int, C2: int, options) -> None:
        """Two flips moving the digon of C and C2 across a neighbouring circle."""
        for X, y in options:
            moves = self._digon_moves(C, C2, X, y)
            if moves is None:
                continue
            for corners in moves:
                self.flip(corners)
            return
        raise InternalFailure(f"digon between {C} and {C2} cannot be moved")

    def _digon_moves(self, C: int, C2: int, X: int, y: Vertex) -> Optional[Tuple[Flip, Flip]]:
        """Both flips of the transfer across X at y, or None; nothing is applied."""
        try:
            first = find_triangle(self.a, (C, C2, X), y)
            second = find_triangle(flip_triangle_cell(self.a, first.face), (C, C2, X), y, skip=first.vertices)
        except PreconditionError:
            return None
        return first.vertices, second.vertices


def cylindrify(a: PlanarArrangement, max_steps: Optional[int] = None, check: Optional[bool] = None) -> CylindrifyResult:
    settings = load_settings()
    if max_steps is None:
        max_steps = int(settings.get("cylindrify_max_steps", 5000))
    if check is None:
        check = bool(settings.get("debug_invariants", False))
    run = _Run(a, max_steps, check)
    run.run()
    if not is_cylindrical(run.a):
        raise InternalFailure("cylindrification ended without a center face")
    logger.info("cylindrified %d circles with %d flips", a.n, len(run.flips))
    return CylindrifyResult(tuple(run.flips), run.a)
