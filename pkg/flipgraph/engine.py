from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from fliplab.errors import PreconditionError


logger = logging.getLogger(__name__)

FAMILIES = ("signotope", "planar-pseudocircle", "cylindrical-diagram")

# (flip label, neighbouring state)
NeighborFn = Callable[[Any], Iterable[Tuple[Hashable, Any]]]
KeyFn = Callable[[Any], bytes]


@dataclass
class FlipGraph:
    """
    Flip graph of one state family.

    Vertices are canonical byte encodings, indexed in BFS order.
    `adjacency[u]` is sorted; `edge_labels[(u, v)]` is the flip that
    turns state u into state v.
    """

    family: str
    n: int
    vertices: List[bytes]
    adjacency: List[List[int]]
    states: List[Any]
    edge_labels: Dict[Tuple[int, int], Hashable] = field(default_factory=dict)
    truncated: bool = False
    index: Dict[bytes, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {key: i for i, key in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def index_of(self, key: bytes) -> int:
        try:
            return self.index[key]
        except KeyError:
            raise PreconditionError(f"state {key.hex()} is not a vertex of this graph")

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges())
        return g

    def induced_subgraph(self, keep: Sequence[int]) -> "FlipGraph":
        """Subgraph on `keep`, re-indexed in increasing old index order."""
        kept = sorted(set(keep))
        remap = {old: new for new, old in enumerate(kept)}
        adjacency = [
            [remap[v] for v in self.adjacency[old] if v in remap] for old in kept
        ]
        labels = {
            (remap[u], remap[v]): lab
            for (u, v), lab in self.edge_labels.items()
            if u in remap and v in remap
        }
        return FlipGraph(
            family=self.family,
            n=self.n,
            vertices=[self.vertices[old] for old in kept],
            adjacency=adjacency,
            states=[self.states[old] for old in kept],
            edge_labels=labels,
            truncated=self.truncated,
        )


def explore(
    seed: Any,
    neighbors: NeighborFn,
    key: KeyFn,
    family: str,
    n: int,
    limit: Optional[int] = None,
    threads: int = 1,
) -> FlipGraph:
    """
    Connected component of `seed` by BFS, layer by layer.

    Each new layer is ordered by encoding before indices are assigned,
    so the result does not depend on `threads`. When `limit` vertices
    are reached the remaining ones are dropped and the graph is marked
    truncated.
    """
    if family not in FAMILIES:
        raise PreconditionError(f"unknown state family {family!r}")
    if limit is not None and limit <= 0:
        raise PreconditionError("vertex budget must be positive")

    seed_key = key(seed)
    vertices: List[bytes] = [seed_key]
    states: List[Any] = [seed]
    index: Dict[bytes, int] = {seed_key: 0}
    adjacency: List[set] = [set()]
    labels: Dict[Tuple[int, int], Hashable] = {}
    truncated = False

    def expand(u: int) -> List[Tuple[Hashable, bytes, Any]]:
        return [(lab, key(st), st) for lab, st in neighbors(states[u])]

    frontier = [0]
    depth = 0
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            if executor is not None:
                expanded = list(executor.map(expand, frontier))
            else:
                expanded = [expand(u) for u in frontier]

            fresh: Dict[bytes, Any] = {}
            for results in expanded:
                for _, k, st in results:
                    if k not in index and k not in fresh:
                        fresh[k] = st

            new_keys = sorted(fresh)
            if limit is not None and len(vertices) + len(new_keys) > limit:
                new_keys = new_keys[: max(0, limit - len(vertices))]
                truncated = True
            for k in new_keys:
                index[k] = len(vertices)
                vertices.append(k)
                states.append(fresh[k])
                adjacency.append(set())

            for u, results in zip(frontier, expanded):
                for lab, k, _ in results:
                    v = index.get(k)
                    if v is None or v == u:
                        continue
                    adjacency[u].add(v)
                    adjacency[v].add(u)
                    labels[(u, v)] = lab

            depth += 1
            logger.debug("layer %d: %d new vertices (total %d)", depth, len(new_keys), len(vertices))
            if truncated:
                logger.info("vertex budget %s reached; graph truncated", limit)
                break
            frontier = [index[k] for k in new_keys]
    finally:
        if executor is not None:
            executor.shutdown()

    return FlipGraph(
        family=family,
        n=n,
        vertices=vertices,
        adjacency=[sorted(nbrs) for nbrs in adjacency],
        states=states,
        edge_labels=labels,
        truncated=truncated,
        index=index,
    )
