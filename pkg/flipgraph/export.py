from __future__ import annotations

import json
from typing import Any, Dict

from flipgraph.engine import FlipGraph


def to_json_dict(g: FlipGraph) -> Dict[str, Any]:
    return {
        "n": g.n,
        "family": g.family,
        "truncated": g.truncated,
        "vertices": [key.hex() for key in g.vertices],
        "edges": [[u, v] for u, v in g.edges()],
    }


def to_json(g: FlipGraph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def to_dot(g: FlipGraph) -> str:
    """Unlabeled undirected DOT, vertices numbered in BFS order."""
    lines = [f'graph "{g.family}_{g.n}" {{']
    for u in range(len(g)):
        lines.append(f"  {u};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
