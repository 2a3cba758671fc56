"""Flip graphs of intersecting and of cylindrical pseudocircle arrangements."""
from __future__ import annotations

from typing import List, Optional, Tuple

from cylinder.bridge import diagram_to_planar
from cylinder.diagram import canonical_diagram
from flipgraph.analysis import shortest_flip_path
from flipgraph.engine import FlipGraph, explore
from pcircles.canonical import canonical_code
from pcircles.classify import is_cylindrical
from pcircles.flips import triangle_neighbors
from pcircles.planar import PlanarArrangement, Vertex


def canonical_arrangement(n: int, sign: str = "minus") -> PlanarArrangement:
    return diagram_to_planar(canonical_diagram(n, sign))


def _cylindrical_neighbors(a: PlanarArrangement) -> List[Tuple[Tuple[Vertex, ...], PlanarArrangement]]:
    return [(lab, b) for lab, b in triangle_neighbors(a) if is_cylindrical(b)]


def intersecting_flip_graph(
    n: int,
    limit: Optional[int] = None,
    threads: int = 1,
    seed: Optional[PlanarArrangement] = None,
) -> FlipGraph:
    """Triangle flips between intersecting arrangements, up to isomorphism."""
    return explore(
        seed if seed is not None else canonical_arrangement(n),
        triangle_neighbors,
        canonical_code,
        family="planar-pseudocircle",
        n=n,
        limit=limit,
        threads=threads,
    )


def cylindrical_flip_graph(
    n: int,
    limit: Optional[int] = None,
    threads: int = 1,
    seed: Optional[PlanarArrangement] = None,
) -> FlipGraph:
    """Triangle flips that stay inside the cylindrical class."""
    return explore(
        seed if seed is not None else canonical_arrangement(n),
        _cylindrical_neighbors,
        canonical_code,
        family="cylindrical-diagram",
        n=n,
        limit=limit,
        threads=threads,
    )


def canonical_distance(g: FlipGraph) -> int:
    """Flip distance between the canonical minus and plus arrangements."""
    minus = canonical_code(canonical_arrangement(g.n, "minus"))
    plus = canonical_code(canonical_arrangement(g.n, "plus"))
    return len(shortest_flip_path(g, minus, plus))
