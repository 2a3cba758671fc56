"""
Combinatorial planar arrangements of pairwise intersecting pseudocircles.

Every circle is oriented counterclockwise, so its interior is on the
left. A crossing of circles i < j is keyed (i, j, s): s = 0 is the
crossing where j enters the interior of i (and i leaves j), s = 1 the
one where j leaves i. Each circle stores its crossings in ccw order;
together with the crossing types this fixes the rotation at every
vertex and hence the embedding.

Half-edges are (circle, k, d): the arc from seq[k] to seq[k+1] traversed
forward (d = +1) or backward (d = -1). Faces lie on the left of their
half-edges. The unbounded face is marked by an arc of some circle
whose right side it is.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from fliplab.errors import ArrangementError, MalformedInputError, PreconditionError


logger = logging.getLogger(__name__)

Vertex = Tuple[int, int, int]
HalfEdge = Tuple[int, int, int]


@dataclass(frozen=True)
class FaceRef:
    """The face on the left (or right) of the arc u -> w of `circle`."""

    circle: int
    u: Vertex
    w: Vertex
    left: bool


@dataclass(frozen=True)
class PlanarArrangement:
    circles: Tuple[Tuple[int, Tuple[Vertex, ...]], ...]
    outer: Tuple[int, Vertex, Vertex]

    def __post_init__(self) -> None:
        circles = tuple(
            sorted((int(c), tuple(tuple(v) for v in seq)) for c, seq in self.circles)
        )
        object.__setattr__(self, "circles", circles)
        c, u, w = self.outer
        object.__setattr__(self, "outer", (int(c), tuple(u), tuple(w)))
        if len(circles) < 2:
            raise MalformedInputError("an intersecting arrangement needs at least 2 circles")

    # ---------- construction helpers ----------

    @classmethod
    def from_mapping(
        cls,
        circles: Mapping[int, Sequence[Vertex]],
        outer: Tuple[int, Vertex, Vertex],
    ) -> "PlanarArrangement":
        return cls(tuple((c, tuple(seq)) for c, seq in circles.items()), outer)

    def to_json(self) -> Dict[str, object]:
        c, u, w = self.outer
        return {
            "n": self.n,
            "labels": list(self.labels),
            "circles": [[list(v) for v in self.seq(c)] for c in self.labels],
            "unbounded_face": {"circle": c, "arc": [list(u), list(w)]},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "PlanarArrangement":
        """The unbounded face is the face on the right of the given arc."""
        try:
            seqs = data["circles"]
            marker = data["unbounded_face"]
            labels = data.get("labels") or list(range(1, len(seqs) + 1))
            circles = {
                int(c): tuple(tuple(int(x) for x in v) for v in seq)
                for c, seq in zip(labels, seqs)
            }
            u, w = marker["arc"]
            outer = (int(marker["circle"]), tuple(u), tuple(w))
        except (KeyError, TypeError, ValueError):
            raise MalformedInputError("planar JSON needs 'circles' and 'unbounded_face'")
        if "n" in data and data["n"] != len(circles):
            raise MalformedInputError("'n' does not match the number of circles")
        return cls.from_mapping(circles, outer)

    # ---------- basic access ----------

    @cached_property
    def _seq(self) -> Dict[int, Tuple[Vertex, ...]]:
        return dict(self.circles)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(c for c, _ in self.circles)

    @property
    def n(self) -> int:
        return len(self.circles)

    def seq(self, c: int) -> Tuple[Vertex, ...]:
        return self._seq[c]

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(sorted({v for _, seq in self.circles for v in seq}))

    @cached_property
    def position(self) -> Dict[Tuple[int, Vertex], int]:
        return {(c, v): k for c, seq in self.circles for k, v in enumerate(seq)}

    def origin(self, h: HalfEdge) -> Vertex:
        c, k, d = h
        seq = self.seq(c)
        return seq[k] if d > 0 else seq[(k + 1) % len(seq)]

    def head(self, h: HalfEdge) -> Vertex:
        c, k, d = h
        seq = self.seq(c)
        return seq[(k + 1) % len(seq)] if d > 0 else seq[k]

    @staticmethod
    def twin(h: HalfEdge) -> HalfEdge:
        c, k, d = h
        return (c, k, -d)

    def arc(self, h: HalfEdge) -> Tuple[int, Vertex, Vertex]:
        """The underlying forward arc (circle, from, to) of a half-edge."""
        c, k, _ = h
        seq = self.seq(c)
        return c, seq[k], seq[(k + 1) % len(seq)]

    def half_edges(self) -> List[HalfEdge]:
        return [(c, k, d) for c, seq in self.circles for k in range(len(seq)) for d in (1, -1)]

    def rotation(self, v: Vertex) -> Tuple[HalfEdge, HalfEdge, HalfEdge, HalfEdge]:
        """Outgoing half-edges at v in ccw order."""
        i, j, s = v
        ki, kj = self.position[(i, v)], self.position[(j, v)]
        li, lj = len(self.seq(i)), len(self.seq(j))
        i_fwd, i_bwd = (i, ki, 1), (i, (ki - 1) % li, -1)
        j_fwd, j_bwd = (j, kj, 1), (j, (kj - 1) % lj, -1)
        if s % 2 == 0:
            # j enters i: j points to the left of i
            return i_fwd, j_fwd, i_bwd, j_bwd
        return i_fwd, j_bwd, i_bwd, j_fwd

    def next_half_edge(self, h: HalfEdge) -> HalfEdge:
        """Successor of h along the face on its left."""
        rot = self.rotation(self.head(h))
        back = self.twin(h)
        return rot[(rot.index(back) - 1) % 4]

    # ---------- faces ----------

    @cached_property
    def faces(self) -> Tuple[Tuple[HalfEdge, ...], ...]:
        """Face boundaries as half-edge orbits, sorted by first half-edge."""
        seen: set = set()
        orbits = []
        for h in sorted(self.half_edges()):
            if h in seen:
                continue
            orbit = []
            x = h
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = self.next_half_edge(x)
            if x != h:
                raise ArrangementError("orientation", f"face walk from {h} does not close")
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def face_of(self) -> Dict[HalfEdge, int]:
        return {h: f for f, orbit in enumerate(self.faces) for h in orbit}

    def face_at(self, ref: FaceRef) -> int:
        k = self.position.get((ref.circle, ref.u))
        seq = self.seq(ref.circle) if ref.circle in self._seq else ()
        if k is None or seq[(k + 1) % len(seq)] != ref.w:
            raise ArrangementError("marker", f"{ref.u} -> {ref.w} is not an arc of circle {ref.circle}")
        return self.face_of[(ref.circle, k, 1 if ref.left else -1)]

    @cached_property
    def unbounded_face(self) -> int:
        c, u, w = self.outer
        return self.face_at(FaceRef(c, u, w, left=False))

    def face_circles(self, f: int) -> FrozenSet[int]:
        return frozenset(h[0] for h in self.faces[f])

    def face_vertices(self, f: int) -> FrozenSet[Vertex]:
        return frozenset(self.origin(h) for h in self.faces[f])

    def face_ref(self, f: int) -> FaceRef:
        h = min(self.faces[f])
        c, u, w = self.arc(h)
        return FaceRef(c, u, w, left=h[2] > 0)

    @cached_property
    def dual(self) -> Dict[int, List[Tuple[int, int]]]:
        """Face adjacency: f -> [(neighbour face, circle crossed)]."""
        adj: Dict[int, List[Tuple[int, int]]] = {f: [] for f in range(len(self.faces))}
        for h, f in self.face_of.items():
            adj[f].append((self.face_of[self.twin(h)], h[0]))
        return adj

    @cached_property
    def inside(self) -> Tuple[FrozenSet[int], ...]:
        """
        Circles containing each face, by parity of crossings along dual
        paths from the unbounded face.
        """
        start = self.unbounded_face
        member: Dict[int, FrozenSet[int]] = {start: frozenset()}
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g, c in self.dual[f]:
                m = member[f] ^ {c}
                if g not in member:
                    member[g] = m
                    queue.append(g)
                elif member[g] != m:
                    raise ArrangementError("orientation", f"faces {f} and {g} disagree on circle {c}")
        return tuple(member[f] for f in range(len(self.faces)))

    def depth(self, f: int) -> int:
        return len(self.inside[f])

    def vertex_inside(self, v: Vertex) -> FrozenSet[int]:
        """Circles other than the two through v that contain v."""
        f = self.face_of[self.rotation(v)[0]]
        return self.inside[f] - {v[0], v[1]}

    # ---------- sub-arrangements ----------

    def restrict(self, keep: Iterable[int]) -> "PlanarArrangement":
        """Sub-arrangement on the circles `keep`, labels unchanged."""
        keep = sorted(set(keep))
        if any(c not in self._seq for c in keep):
            raise MalformedInputError(f"unknown circles in {keep}")
        if len(keep) < 2:
            raise MalformedInputError("a sub-arrangement needs at least 2 circles")
        kept = set(keep)
        if kept == set(self.labels):
            return self

        def survives(v: Vertex) -> bool:
            return v[0] in kept and v[1] in kept

        # faces of the new unbounded face: reachable from the old one
        # without crossing a kept circle
        start = self.unbounded_face
        region = {start}
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g, c in self.dual[f]:
                if c not in kept and g not in region:
                    region.add(g)
                    queue.append(g)

        marker = None
        for c in keep:
            seq = self.seq(c)
            for k in range(len(seq)):
                if self.face_of[(c, k, -1)] in region:
                    lo = k
                    while not survives(seq[lo]):
                        lo = (lo - 1) % len(seq)
                    hi = (k + 1) % len(seq)
                    while not survives(seq[hi]):
                        hi = (hi + 1) % len(seq)
                    marker = (c, seq[lo], seq[hi])
                    break
            if marker is not None:
                break
        if marker is None:
            raise ArrangementError("marker", "no kept arc borders the unbounded face")

        circles = {c: tuple(v for v in self.seq(c) if survives(v)) for c in keep}
        return PlanarArrangement.from_mapping(circles, marker)

    def without(self, c: int) -> "PlanarArrangement":
        return self.restrict(x for x in self.labels if x != c)


# ---------- validation ----------


@dataclass(frozen=True)
class ArrangementVerdict:
    valid: bool
    code: Optional[str] = None
    message: Optional[str] = None


def check_arrangement(a: PlanarArrangement) -> None:
    """Raises ArrangementError for the first broken invariant."""
    labels = set(a.labels)
    n = a.n

    occurrences: Dict[Vertex, List[int]] = {}
    for c, seq in a.circles:
        for v in seq:
            if len(v) != 3:
                raise ArrangementError("vertex-degree", f"malformed vertex id {v}")
            occurrences.setdefault(v, []).append(c)

    for v, on in occurrences.items():
        i, j, s = v
        if sorted(on) != [i, j] or i >= j:
            raise ArrangementError(
                "vertex-degree",
                f"vertex {v} lies on circles {sorted(on)}; a crossing lies on exactly its two circles",
            )
        if i not in labels or j not in labels:
            raise ArrangementError("vertex-degree", f"vertex {v} names an unknown circle")

    per_pair: Dict[Tuple[int, int], List[int]] = {}
    for i, j, s in occurrences:
        per_pair.setdefault((i, j), []).append(s)
    for i in labels:
        for j in labels:
            if i < j and sorted(per_pair.get((i, j), [])) != [0, 1]:
                raise ArrangementError(
                    "pair-crossing",
                    f"circles {i} and {j} cross {len(per_pair.get((i, j), []))} times, expected 2",
                )

    c, u, w = a.outer
    if c not in labels or (c, u) not in a.position:
        raise ArrangementError("marker", f"unbounded-face marker {a.outer} is not on circle {c}")
    seq = a.seq(c)
    if seq[(a.position[(c, u)] + 1) % len(seq)] != w:
        raise ArrangementError("marker", f"{u} -> {w} is not an arc of circle {c}")

    V = n * (n - 1)
    E = 2 * V
    F = len(a.faces)
    if len(occurrences) != V or sum(len(s) for _, s in a.circles) != E or F != V + 2:
        raise ArrangementError("euler", f"V={len(occurrences)}, E={E}, F={F}; expected F = V + 2")

    inside = a.inside
    if inside[a.unbounded_face]:
        raise ArrangementError("orientation", "the marked face lies inside some circle")
    for h, f in a.face_of.items():
        circle, _, d = h
        if (circle in inside[f]) != (d > 0):
            raise ArrangementError(
                "orientation", f"circle {circle} does not have its interior on the left at {h}"
            )
    for v in a.vertices:
        i, j, s = v
        # after an entering crossing, j runs inside i
        after = a.face_of[(j, a.position[(j, v)], 1)]
        if (i in inside[after]) != (s % 2 == 0):
            raise ArrangementError("orientation", f"crossing type of {v} contradicts the embedding")


def validate_arrangement(a: PlanarArrangement) -> ArrangementVerdict:
    try:
        check_arrangement(a)
    except ArrangementError as exc:
        return ArrangementVerdict(False, exc.code, str(exc))
    return ArrangementVerdict(True)


def require_valid(a: PlanarArrangement) -> PlanarArrangement:
    check_arrangement(a)
    return a
