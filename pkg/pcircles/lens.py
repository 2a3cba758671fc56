"""
Sweeping one side of a lens across its interior.

A lens is a bounded region of the two-circle subarrangement of L and R,
chosen by whether it lies inside or outside each of them. Every other
circle meets it in arcs; an arc is transversal when it runs from L to R.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from fliplab.errors import InternalFailure, PreconditionError
from pcircles.flips import find_triangle, flip_triangle_cell
from pcircles.planar import PlanarArrangement, Vertex


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lens:
    left: int
    right: int
    inside_left: bool
    inside_right: bool

    def __post_init__(self) -> None:
        if self.left == self.right:
            raise PreconditionError("a lens needs two different circles")
        if not (self.inside_left or self.inside_right):
            raise PreconditionError("the region outside both circles is unbounded")

    def contains(self, inside: FrozenSet[int]) -> bool:
        return (self.left in inside) == self.inside_left and (self.right in inside) == self.inside_right


@dataclass(frozen=True)
class LensArc:
    """A maximal piece of `circle` inside the lens, oriented from L to R."""

    circle: int
    vertices: Tuple[Vertex, ...]
    transversal: bool

    @property
    def interior(self) -> Tuple[Vertex, ...]:
        return self.vertices[1:-1]


@dataclass(frozen=True)
class LensSweepReport:
    flips: Tuple[Tuple[Vertex, ...], ...]
    acyclic: bool
    crossing_orders_agree: bool
    interior_vertices: int
    result: PlanarArrangement


def lens_faces(a: PlanarArrangement, q: Lens) -> FrozenSet[int]:
    return frozenset(f for f, inside in enumerate(a.inside) if q.contains(inside))


def interior_vertices(a: PlanarArrangement, q: Lens) -> List[Vertex]:
    return [
        v for v in a.vertices
        if not {v[0], v[1]} & {q.left, q.right} and q.contains(a.vertex_inside(v))
    ]


def lens_arcs(a: PlanarArrangement, q: Lens) -> List[LensArc]:
    region = lens_faces(a, q)
    arcs: List[LensArc] = []
    for c in a.labels:
        if c in (q.left, q.right):
            continue
        seq = a.seq(c)
        m = len(seq)
        inside = [a.face_of[(c, k, 1)] in region for k in range(m)]
        if all(inside):
            raise InternalFailure(f"circle {c} lies inside the lens")
        for k in range(m):
            # a run starts where the previous edge is outside
            if not inside[k] or inside[(k - 1) % m]:
                continue
            run = [seq[k]]
            e = k
            while inside[e % m]:
                run.append(seq[(e + 1) % m])
                e += 1
            ends = [({v[0], v[1]} - {c}).pop() for v in (run[0], run[-1])]
            if ends == [q.right, q.left]:
                run.reverse()
            transversal = sorted(ends) == sorted((q.left, q.right))
            arcs.append(LensArc(c, tuple(run), transversal))
    return arcs


def sweep_order(arcs: List[LensArc]) -> Tuple[nx.DiGraph, bool]:
    """Digraph on interior vertices, edges along the arcs from L to R."""
    g = nx.DiGraph()
    for arc in arcs:
        inner = arc.interior
        g.add_nodes_from(inner)
        g.add_edges_from(zip(inner, inner[1:]))
    return g, nx.is_directed_acyclic_graph(g)


def crossing_orders_agree(arcs: List[LensArc]) -> bool:
    """Two arcs crossing twice inside the lens meet in the same order on both."""
    position: Dict[Tuple[int, int], Dict[Vertex, int]] = {}
    for n_arc, arc in enumerate(arcs):
        position[(arc.circle, n_arc)] = {v: p for p, v in enumerate(arc.interior)}
    keys = list(position)
    for x in range(len(keys)):
        for y in range(x + 1, len(keys)):
            px, py = position[keys[x]], position[keys[y]]
            shared = [v for v in px if v in py]
            if len(shared) < 2:
                continue
            if sorted(shared, key=px.get) != sorted(shared, key=py.get):
                return False
    return True


def lens_sweep(a: PlanarArrangement, q: Lens) -> LensSweepReport:
    """
    Sweeps L across the lens towards R, one triangle flip per interior
    vertex, taking the vertices in a topological order of the arcs.
    """
    for c in (q.left, q.right):
        if c not in a.labels:
            raise PreconditionError(f"circle {c} is not in the arrangement")
    arcs = lens_arcs(a, q)
    for arc in arcs:
        if not arc.transversal:
            raise PreconditionError(
                f"arc of circle {arc.circle} from {arc.vertices[0]} to {arc.vertices[-1]} "
                "is not transversal"
            )

    g, acyclic = sweep_order(arcs)
    if not acyclic:
        raise InternalFailure("arcs inside the lens form a directed cycle")
    agree = crossing_orders_agree(arcs)
    if not agree:
        raise InternalFailure("two arcs cross in opposite orders inside the lens")

    flips: List[Tuple[Vertex, ...]] = []
    current = a
    for v in nx.lexicographical_topological_sort(g):
        cell = find_triangle(current, (q.left, v[0], v[1]), v)
        flips.append(cell.vertices)
        current = flip_triangle_cell(current, cell)

    left_over = interior_vertices(current, q)
    if left_over:
        raise InternalFailure(f"lens still contains {left_over} after the sweep")
    logger.debug("lens %s swept with %d flips", q, len(flips))
    return LensSweepReport(
        flips=tuple(flips),
        acyclic=acyclic,
        crossing_orders_agree=agree,
        interior_vertices=g.number_of_nodes(),
        result=current,
    )
