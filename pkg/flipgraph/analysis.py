from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np
from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    local_node_connectivity,
)
from networkx.algorithms.flow import build_residual_network

from fliplab.errors import BudgetExceededError, PreconditionError
from flipgraph.engine import FlipGraph


logger = logging.getLogger(__name__)


# ---------- Degrees ----------


def degrees(g: FlipGraph) -> List[int]:
    return [len(nbrs) for nbrs in g.adjacency]


def degree_histogram(g: FlipGraph) -> Dict[int, int]:
    return dict(sorted(Counter(degrees(g)).items()))


def min_degree(g: FlipGraph) -> int:
    return min(degrees(g))


def max_degree(g: FlipGraph) -> int:
    return max(degrees(g))


# ---------- Vertex connectivity ----------


@dataclass(frozen=True)
class ConnectivityResult:
    """
    `value` is exact in exact mode. In sampled mode it is the minimum
    over the checked pairs: a certified lower bound for those pairs
    only, and an upper bound on the true connectivity.
    `witness` is a pair attaining `value` (second entry None when the
    minimum is a vertex degree).
    """

    value: int
    mode: str
    witness: Tuple[int, Optional[int]]
    pairs_checked: int


def vertex_connectivity(
    g: FlipGraph,
    mode: str = "exact",
    samples: int = 200,
    seed: int = 0,
) -> ConnectivityResult:
    if len(g) < 2:
        raise PreconditionError("connectivity needs at least 2 vertices")
    if mode not in ("exact", "sampled"):
        raise PreconditionError(f"unknown connectivity mode {mode!r}")

    G = g.to_networkx()
    if not nx.is_connected(G):
        comp = nx.node_connected_component(G, 0)
        other = next(v for v in G if v not in comp)
        return ConnectivityResult(0, mode, (0, other), 0)

    nv = len(g)
    degs = degrees(g)
    v0 = min(range(nv), key=lambda v: (degs[v], v))
    if degs[v0] == nv - 1:
        # complete graph
        return ConnectivityResult(nv - 1, mode, (v0, None), 0)

    H = build_auxiliary_node_connectivity(G)
    R = build_residual_network(H, "capacity")

    def kappa(s: int, t: int, cutoff: int) -> int:
        return local_node_connectivity(G, s, t, auxiliary=H, residual=R, cutoff=cutoff)

    best = degs[v0]
    witness: Tuple[int, Optional[int]] = (v0, None)
    checked = 0

    if mode == "exact":
        schedule = _exact_schedule(g, v0)
    else:
        schedule = _sampled_schedule(g, samples, seed)

    for s, t in schedule:
        k = kappa(s, t, best)
        checked += 1
        if k < best:
            best = k
            witness = (s, t)
            logger.debug("kappa(%d, %d) = %d", s, t, k)

    logger.info("%s connectivity of %d-vertex graph: %d (%d pairs)", mode, nv, best, checked)
    return ConnectivityResult(best, mode, witness, checked)


def _exact_schedule(g: FlipGraph, v0: int) -> Iterable[Tuple[int, int]]:
    """
    A minimum-degree vertex v0 against every non-neighbour, then every
    non-adjacent pair of neighbours of v0. Some minimum separator
    either misses v0 or contains it together with a split pair of its
    neighbours.
    """
    nbrs = set(g.adjacency[v0])
    for w in range(len(g)):
        if w != v0 and w not in nbrs:
            yield v0, w
    for x, y in combinations(sorted(nbrs), 2):
        if y not in g.adjacency[x]:
            yield x, y


def _sampled_schedule(g: FlipGraph, samples: int, seed: int) -> Iterable[Tuple[int, int]]:
    rng = np.random.default_rng(seed)
    nv = len(g)
    produced = 0
    attempts = 0
    while produced < samples and attempts < 50 * samples:
        attempts += 1
        s, t = (int(x) for x in rng.choice(nv, size=2, replace=False))
        if t in g.adjacency[s]:
            continue
        produced += 1
        yield s, t


# ---------- Distances ----------


def bfs_distances(g: FlipGraph, source: int) -> List[int]:
    dist = [-1] * len(g)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def eccentricity(g: FlipGraph, v: int) -> int:
    dist = bfs_distances(g, v)
    if min(dist) < 0:
        raise PreconditionError("graph is disconnected")
    return max(dist)


@dataclass(frozen=True)
class DiameterResult:
    value: int
    witness: Tuple[int, int]


def diameter(g: FlipGraph, cap: int = 30000) -> DiameterResult:
    """Exact diameter by BFS from every vertex."""
    nv = len(g)
    if nv > cap:
        raise BudgetExceededError(
            f"all-pairs BFS on {nv} vertices exceeds the cap of {cap}; "
            "use radius_sample for a sampled estimate"
        )
    best, witness = 0, (0, 0)
    for u in range(nv):
        dist = bfs_distances(g, u)
        if min(dist) < 0:
            raise PreconditionError("graph is disconnected")
        far = max(range(nv), key=lambda v: (dist[v], -v))
        if dist[far] > best:
            best, witness = dist[far], (u, far)
    return DiameterResult(best, witness)


def radius_sample(g: FlipGraph, samples: int = 20, seed: int = 0) -> Dict[str, int]:
    """Min and max eccentricity over random sources (bounds, not exact)."""
    rng = np.random.default_rng(seed)
    sources = rng.choice(len(g), size=min(samples, len(g)), replace=False)
    eccs = [eccentricity(g, int(v)) for v in sources]
    return {"min_eccentricity": min(eccs), "max_eccentricity": max(eccs), "sources": len(eccs)}


def shortest_flip_path(g: FlipGraph, a: bytes, b: bytes) -> List[Hashable]:
    """Flip labels along a BFS-shortest path from state key a to b."""
    src, dst = g.index_of(a), g.index_of(b)
    parent = {src: src}
    queue = deque([src])
    while queue and dst not in parent:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if dst not in parent:
        raise PreconditionError("no path between the two states")
    path = []
    v = dst
    while v != src:
        u = parent[v]
        path.append(g.edge_labels.get((u, v)))
        v = u
    path.reverse()
    return path


# ---------- Random walk ----------


def random_walk(
    source: Union[FlipGraph, Callable[[Any], List[Tuple[Hashable, Any]]]],
    start: Any,
    steps: int,
    seed: int = 0,
) -> List[Any]:
    """
    Lazy random walk: stay with probability 1/2, otherwise move to a
    uniform neighbour. On a FlipGraph `start` and the trajectory are
    vertex indices; with a neighbour function they are states.
    """
    rng = np.random.default_rng(seed)
    if isinstance(source, FlipGraph):
        def step_from(u: Any) -> List[Any]:
            return source.adjacency[u]
    else:
        def step_from(u: Any) -> List[Any]:
            return [st for _, st in source(u)]

    trajectory = [start]
    current = start
    for _ in range(steps):
        if rng.random() < 0.5:
            trajectory.append(current)
            continue
        options = step_from(current)
        if options:
            current = options[int(rng.integers(len(options)))]
        trajectory.append(current)
    return trajectory
