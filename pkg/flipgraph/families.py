"""Ready-made explorations of the concrete flip graphs."""
from __future__ import annotations

from typing import Optional

from flipgraph.engine import FlipGraph, explore
from signotopes.core import Signotope, all_plus, neighbors


def signotope_graph(
    n: int,
    limit: Optional[int] = None,
    threads: int = 1,
    seed: Optional[Signotope] = None,
) -> FlipGraph:
    """All signotopes on [n]; flip edges are labelled by the triple."""
    return explore(
        seed if seed is not None else all_plus(n),
        neighbors,
        Signotope.encode,
        family="signotope",
        n=n,
        limit=limit,
        threads=threads,
    )
