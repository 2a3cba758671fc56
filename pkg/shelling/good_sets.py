from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from fliplab.errors import MalformedInputError, PreconditionError
from shelling.sequences import from_shelling
from signotopes.core import Signotope, Triple, flippable_triples, is_flippable


@dataclass(frozen=True)
class GoodTriangleSet:
    """Triangles t_1..t_k; lines[i] is a line whose first triangle is t_i."""

    triangles: Tuple[Triple, ...]
    lines: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.triangles) != len(self.lines):
            raise MalformedInputError("one line per triangle is required")
        if len(set(self.triangles)) != len(self.triangles) or len(set(self.lines)) != len(self.lines):
            raise MalformedInputError("triangles and lines must be distinct")

    @property
    def k(self) -> int:
        return len(self.triangles)

    def first_occurrence_ok(self) -> bool:
        for i, line in enumerate(self.lines):
            first = next((j for j, t in enumerate(self.triangles) if line in t), None)
            if first != i:
                return False
        return True

    def to_json(self) -> Dict[str, object]:
        return {
            "triangles": [list(t) for t in self.triangles],
            "lines": list(self.lines),
        }


def build_good_set(s: Signotope) -> GoodTriangleSet:
    """
    Repeatedly takes the lowest line not on a chosen triangle and its
    lex smallest incident triangle. Each step covers at most three new
    lines, so k >= n/3.
    """
    tri = flippable_triples(s)
    covered: set = set()
    triangles: List[Triple] = []
    lines: List[int] = []
    for line in range(1, s.n + 1):
        if line in covered:
            continue
        t = next((t for t in tri if line in t), None)
        if t is None:
            raise PreconditionError(f"line {line} bounds no triangle")
        triangles.append(t)
        lines.append(line)
        covered.update(t)
    return GoodTriangleSet(tuple(triangles), tuple(lines))


def _as_plus(value: Union[str, bool, int]) -> bool:
    if value in ("+", True, 1):
        return True
    if value in ("-", False, -1, 0):
        return False
    raise MalformedInputError(f"invalid orientation {value!r}")


def shellable_for_assignment(
    T: GoodTriangleSet,
    alpha: Sequence[Union[str, bool]],
    n: int,
) -> Signotope:
    """
    Shellable signotope orienting each t_i as alpha[i]. Lines are
    removed in the order T.lines[k-1], ..., T.lines[0] and then the remaining
    lines; T.lines[i] is the first removed line of t_i, so its side alone
    decides sigma(t_i).
    """
    if len(alpha) != T.k:
        raise MalformedInputError(f"need {T.k} orientations, got {len(alpha)}")
    if not T.first_occurrence_ok():
        raise PreconditionError("triangle set lacks the first-occurrence property")
    if any(not 1 <= x <= n for t in T.triangles for x in t):
        raise PreconditionError(f"triangle set does not live on [{n}]")

    order = list(reversed(T.lines))
    sides = []
    for i in reversed(range(T.k)):
        middle = T.triangles[i][1] == T.lines[i]
        above = _as_plus(alpha[i]) == middle
        sides.append("above" if above else "below")
    rest = [x for x in range(n, 0, -1) if x not in T.lines]
    order.extend(rest)
    sides.extend("above" for _ in rest)
    return from_shelling(n, order, sides)


# ---------- Compatibility ----------


def compatible_triangles(s: Signotope, t1: Triple, t2: Triple) -> bool:
    """
    Two triangles share a vertex iff they share two lines, since a
    vertex is the crossing of two lines.
    """
    t1, t2 = tuple(sorted(t1)), tuple(sorted(t2))
    if t1 == t2:
        raise PreconditionError("compatibility needs two different triangles")
    for t in (t1, t2):
        if not is_flippable(s, t):
            raise PreconditionError(f"{t} is not a triangle")
    return len(set(t1) & set(t2)) < 2


def incompatible_partners(s: Signotope, t: Triple) -> List[Triple]:
    t = tuple(sorted(t))
    return [u for u in flippable_triples(s) if u != t and not compatible_triangles(s, t, u)]


# ---------- Triangle / line incidence ----------


@dataclass(frozen=True)
class IncidenceGraph:
    graph: nx.Graph
    component_line_counts: Tuple[int, ...]


def triangle_line_incidence_graph(s: Signotope) -> IncidenceGraph:
    """
    Bipartite graph with nodes ("triangle", t) and ("line", i); line i is
    joined to every triangle it bounds.
    """
    g = nx.Graph()
    g.add_nodes_from((("line", i) for i in range(1, s.n + 1)), bipartite=1)
    for t in flippable_triples(s):
        g.add_node(("triangle", t), bipartite=0)
        for line in t:
            g.add_edge(("triangle", t), ("line", line))
    counts = sorted(
        sum(1 for kind, _ in comp if kind == "line")
        for comp in nx.connected_components(g)
    )
    return IncidenceGraph(g, tuple(counts))
