"""
SVG drawing of a planar arrangement: a spring embedding of the crossing
graph with each circle drawn as a closed polyline through its crossings.
The drawing is for inspection only; it need not be a faithful embedding.
"""
from __future__ import annotations

from typing import Dict, List

import networkx as nx
import numpy as np

from fliplab.errors import PreconditionError
from pcircles.planar import PlanarArrangement, Vertex


MAX_RENDER_CIRCLES = 6
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")

size_base = 400
margin = 30


def props_repr(d: Dict[str, object]) -> str:
    return " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in d.items())


def _layout(a: PlanarArrangement, seed: int) -> Dict[Vertex, np.ndarray]:
    g = nx.Graph()
    for c in a.labels:
        seq = a.seq(c)
        g.add_edges_from(zip(seq, seq[1:] + seq[:1]))
    pos = nx.spring_layout(g, seed=seed)
    pts = np.array([pos[v] for v in a.vertices])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.where(hi - lo > 0, hi - lo, 1.0)
    scale = size_base - 2 * margin
    return {v: margin + (np.asarray(pos[v]) - lo) / span * scale for v in a.vertices}


def render_svg(a: PlanarArrangement, seed: int = 0) -> str:
    if a.n > MAX_RENDER_CIRCLES:
        raise PreconditionError(f"rendering supports at most {MAX_RENDER_CIRCLES} circles")
    xy = _layout(a, seed)
    lines: List[str] = [
        f'<svg {props_repr({"xmlns": "http://www.w3.org/2000/svg", "width": size_base, "height": size_base})}>'
    ]
    for n_circle, c in enumerate(a.labels):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (xy[v] for v in a.seq(c)))
        props = {
            "points": pts,
            "fill": "none",
            "stroke": PALETTE[n_circle % len(PALETTE)],
            "stroke_width": 2,
            "data_circle": c,
        }
        lines.append(f"  <polygon {props_repr(props)} />")
    for v in a.vertices:
        x, y = xy[v]
        lines.append(f'  <circle {props_repr({"cx": f"{x:.2f}", "cy": f"{y:.2f}", "r": 3, "fill": "black"})} />')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
