from __future__ import annotations

import argparse
import json
import logging
import sys
from math import comb
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np

from config.settings import load_settings
from cylinder.bridge import diagram_to_planar, planar_to_diagram
from cylinder.canonicalize import flip_to_canonical
from cylinder.cylindrify import cylindrify
from cylinder.diagram import (
    SIGNS,
    CylindricalDiagram,
    apply_diagram_flips,
    canonical_diagram,
    diagram_neighbors,
    random_diagram,
    same_diagram,
)
from cylinder.graphs import canonical_arrangement, canonical_distance, cylindrical_flip_graph, intersecting_flip_graph
from flipgraph.analysis import (
    degree_histogram,
    diameter,
    max_degree,
    min_degree,
    random_walk,
    vertex_connectivity,
)
from flipgraph.engine import FlipGraph
from flipgraph.export import to_dot
from flipgraph.families import signotope_graph
from fliplab.errors import BudgetExceededError, FliplabError, MalformedInputError, PropertyViolation
from pcircles.canonical import canonical_code
from pcircles.classify import class_histogram, classify_all, cylindricity_verdicts, is_cylindrical
from pcircles.fixtures import FIXTURES, fixture
from pcircles.flips import apply_triangle_flips, triangle_neighbors
from pcircles.planar import PlanarArrangement, require_valid
from pcircles.render import render_svg
from realization.feasibility import count_feasible, slope_feasibility
from realization.lines import LineArrangement, SlopeVector, realize_shellable
from realization.motion import interpolate_motion
from shelling.sequences import path_to_shellable
from signotopes.core import Signotope, all_plus, neighbors


logger = logging.getLogger(__name__)

FAMILIES = ("pseudoline", "pseudocircle", "cylindrical")
EXIT_OK, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 3


# ---------- Input / output helpers ----------


def _emit(payload: Any, args: argparse.Namespace) -> None:
    """JSON to stdout or --out; strings are written as they are."""
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _read_json(path: Optional[str]) -> Any:
    if not path:
        raise MalformedInputError("--input is required for this command")
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}")


def _planar_input(args: argparse.Namespace) -> PlanarArrangement:
    if args.fixture:
        return fixture(args.fixture)
    data = _read_json(args.input)
    if isinstance(data, dict) and "word" in data:
        return diagram_to_planar(CylindricalDiagram.from_json(data))
    a = PlanarArrangement.from_json(data)
    require_valid(a)
    return a


def _diagram_input(args: argparse.Namespace, settings: Dict[str, Any]) -> CylindricalDiagram:
    if args.input or args.fixture:
        if args.input:
            data = _read_json(args.input)
            if isinstance(data, dict) and "word" in data:
                return CylindricalDiagram.from_json(data)
        d, _ = planar_to_diagram(_planar_input(args))
        return d
    n = _require_n(args)
    return random_diagram(n, np.random.default_rng(_seed(args, settings)))


def _require_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise MalformedInputError("--n is required for this command")
    if args.n < 3:
        raise MalformedInputError(f"n must be at least 3, got {args.n}")
    return args.n


def _seed(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    return int(args.seed if args.seed is not None else settings["seed"])


def _slopes(args: argparse.Namespace, n: int) -> SlopeVector:
    slopes = SlopeVector.parse(args.slopes) if args.slopes else SlopeVector.default(n)
    if len(slopes) != n:
        raise MalformedInputError(f"need {n} slopes, got {len(slopes)}")
    return slopes


def _build_graph(args: argparse.Namespace, settings: Dict[str, Any]) -> FlipGraph:
    n = _require_n(args)
    budget = int(args.budget if args.budget is not None else settings["budget"])
    if budget <= 0:
        raise MalformedInputError("budget must be positive")
    threads = int(args.threads if args.threads is not None else settings["threads"])
    builders = {
        "pseudoline": signotope_graph,
        "pseudocircle": intersecting_flip_graph,
        "cylindrical": cylindrical_flip_graph,
    }
    g = builders[args.family](n, limit=budget, threads=threads)
    logger.info("%s flip graph, n=%d: %d vertices, %d edges", args.family, n, len(g), g.num_edges)
    return g


def _complete_graph(args: argparse.Namespace, settings: Dict[str, Any]) -> FlipGraph:
    g = _build_graph(args, settings)
    if g.truncated:
        raise BudgetExceededError(f"flip graph truncated at {len(g)} vertices; raise --budget")
    return g


def _graph_summary(g: FlipGraph) -> Dict[str, Any]:
    return {
        "family": g.family,
        "n": g.n,
        "vertices": len(g),
        "edges": g.num_edges,
        "truncated": g.truncated,
    }


# ---------- Flip graph commands ----------


def cmd_enumerate(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    g = _build_graph(args, settings)
    if args.format == "dot":
        _emit(to_dot(g), args)
    elif args.format == "text":
        _emit(f"{g.family} n={g.n}: {len(g)} vertices, {g.num_edges} edges"
              f"{' (truncated)' if g.truncated else ''}\n", args)
    else:
        _emit(_graph_summary(g), args)
    return EXIT_BUDGET if g.truncated else EXIT_OK


def cmd_connectivity(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    g = _complete_graph(args, settings)
    samples = int(settings["connectivity_samples"])
    result = vertex_connectivity(g, mode=args.mode, samples=samples, seed=_seed(args, settings))
    _emit(
        {
            **_graph_summary(g),
            "connectivity": result.value,
            "mode": result.mode,
            "pairs_checked": result.pairs_checked,
            "witness": list(result.witness),
        },
        args,
    )
    return EXIT_OK


def cmd_diameter(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    g = _complete_graph(args, settings)
    result = diameter(g, cap=int(settings["diameter_cap"]))
    payload = {**_graph_summary(g), "diameter": result.value, "witness": list(result.witness)}
    if args.family == "cylindrical":
        payload["canonical_distance"] = canonical_distance(g)
        payload["bound"] = 2 * comb(g.n, 3)
    _emit(payload, args)
    return EXIT_OK


def cmd_degrees(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    g = _complete_graph(args, settings)
    _emit(
        {
            **_graph_summary(g),
            "min_degree": min_degree(g),
            "max_degree": max_degree(g),
            "histogram": {str(d): c for d, c in sorted(degree_histogram(g).items())},
        },
        args,
    )
    return EXIT_OK


def cmd_walk(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    n = _require_n(args)
    seed = _seed(args, settings)
    if args.family == "pseudoline":
        trajectory = random_walk(neighbors, all_plus(n), args.steps, seed)
        states = [s.signs() for s in trajectory]
    elif args.family == "pseudocircle":
        trajectory = random_walk(triangle_neighbors, canonical_arrangement(n), args.steps, seed)
        states = [canonical_code(a).hex() for a in trajectory]
    else:
        trajectory = random_walk(diagram_neighbors, canonical_diagram(n), args.steps, seed)
        states = [list(d.word) for d in trajectory]
    _emit({"family": args.family, "n": n, "seed": seed, "steps": args.steps, "states": states}, args)
    return EXIT_OK


# ---------- Pseudoline commands ----------


def cmd_path_to_shellable(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    data = _read_json(args.input)
    if isinstance(data, dict) and "from" in data:
        source = Signotope.from_json(data["from"])
        target = Signotope.from_json(data["to"]) if "to" in data else all_plus(source.n)
    else:
        source = Signotope.from_json(data)
        target = all_plus(source.n)
    path = path_to_shellable(source, target)
    _emit(
        {
            "flips": [list(t) for t in path],
            "length": len(path),
            "hamming": source.hamming(target),
            "target": target.to_json(),
        },
        args,
    )
    return EXIT_OK


def cmd_realize(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    s = Signotope.from_json(_read_json(args.input))
    L = realize_shellable(s, _slopes(args, s.n))
    _emit({"signotope": s.to_json(), "arrangement": L.to_json()}, args)
    return EXIT_OK


def cmd_feasible(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    """With --input: one signotope, exit 1 when infeasible. Otherwise count over all of --n."""
    if not args.input:
        n = _require_n(args)
        _emit(count_feasible(n, _slopes(args, n)), args)
        return EXIT_OK
    s = Signotope.from_json(_read_json(args.input))
    result = slope_feasibility(s, _slopes(args, s.n))
    _emit(
        {
            "feasible": result.feasible,
            "slack": str(result.slack),
            "arrangement": result.arrangement.to_json() if result.arrangement else None,
        },
        args,
    )
    return EXIT_OK if result.feasible else EXIT_VIOLATION


def cmd_interpolate(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    data = _read_json(args.input)
    try:
        L, L2 = LineArrangement.from_json(data["from"]), LineArrangement.from_json(data["to"])
    except (KeyError, TypeError):
        raise MalformedInputError("interpolation input needs 'from' and 'to' arrangements")
    report = interpolate_motion(L, L2)
    _emit(
        {
            "events": [{"time": str(ev.time), "triple": list(ev.triple)} for ev in report.events],
            "types": [s.signs() for s in report.types],
            "single_instant": report.single_instant,
            "max_events_per_triple": report.max_events_per_triple,
        },
        args,
    )
    return EXIT_OK


# ---------- Pseudocircle commands ----------


def cmd_classify(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    a = _planar_input(args)
    triples = classify_all(a)
    _emit(
        {
            "n": a.n,
            "triples": {",".join(map(str, t)): cls.value for t, cls in sorted(triples.items())},
            "histogram": class_histogram(a),
        },
        args,
    )
    return EXIT_OK


def cmd_cylindrical_check(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    a = _planar_input(args)
    verdicts = cylindricity_verdicts(a)
    agree = len(set(verdicts.values())) == 1
    _emit({"n": a.n, "predicates": verdicts, "agree": agree}, args)
    if not agree:
        raise PropertyViolation(f"cylindricity predicates disagree: {verdicts}")
    return EXIT_OK


def cmd_canonicalize(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    d = _diagram_input(args, settings)
    flips = flip_to_canonical(d, args.sign)
    reached = apply_diagram_flips(d, flips)
    if not same_diagram(reached, canonical_diagram(d.n, args.sign)):
        raise PropertyViolation("replayed flips do not reach the canonical diagram")
    _emit(
        {
            "diagram": d.to_json(),
            "sign": args.sign,
            "flips": [f.to_json() for f in flips],
            "count": len(flips),
            "bound": 2 * comb(d.n, 3),
        },
        args,
    )
    return EXIT_OK


def cmd_cylindrify(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    a = _planar_input(args)
    result = cylindrify(a, max_steps=int(settings["cylindrify_max_steps"]))
    replayed = apply_triangle_flips(a, result.flips)
    if canonical_code(replayed) != canonical_code(result.result) or not is_cylindrical(replayed):
        raise PropertyViolation("replaying the cylindrify flips does not give the reported arrangement")
    _emit(result.to_json(), args)
    return EXIT_OK


def cmd_render(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    a = _planar_input(args)
    _emit(render_svg(a, seed=_seed(args, settings)), args)
    return EXIT_OK


# ---------- Parser ----------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m fliplab.cli",
        description="Flip graphs of pseudoline and pseudocircle arrangements.",
    )
    subparsers = parser.add_subparsers(title="commands", dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="number of lines or circles")
    common.add_argument("--family", choices=FAMILIES, default="pseudoline")
    common.add_argument("--input", default=None, help="JSON input file")
    common.add_argument("--fixture", choices=sorted(FIXTURES), default=None, help="built-in arrangement of three circles")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--budget", type=int, default=None, help="vertex budget of the flip-graph search")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    common.add_argument("--sign", choices=SIGNS, default="minus")
    common.add_argument("--slopes", default=None, help="comma separated rationals, e.g. 1,3/2,4")
    common.add_argument("--format", choices=("json", "dot", "svg", "text"), default="json")
    common.add_argument("--steps", type=int, default=100, help="random walk length")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")

    commands = [
        ("enumerate", cmd_enumerate, "Flip closure and its vertex and edge counts"),
        ("connectivity", cmd_connectivity, "Vertex connectivity of a flip graph"),
        ("diameter", cmd_diameter, "Diameter of a flip graph by all-pairs BFS"),
        ("degrees", cmd_degrees, "Degree statistics of a flip graph"),
        ("classify", cmd_classify, "Krupp / NonKrupp class of every triple of circles"),
        ("cylindrical-check", cmd_cylindrical_check, "All cylindricity predicates and their agreement"),
        ("canonicalize", cmd_canonicalize, "Braid flips to the canonical cylindrical diagram"),
        ("cylindrify", cmd_cylindrify, "Triangle flips to a cylindrical arrangement"),
        ("path-to-shellable", cmd_path_to_shellable, "Flip path to a shellable signotope"),
        ("realize", cmd_realize, "Line arrangement with given slopes for a shellable signotope"),
        ("feasible", cmd_feasible, "Realizability with given slopes (LP)"),
        ("interpolate", cmd_interpolate, "Events of the linear motion between two line arrangements"),
        ("walk", cmd_walk, "Lazy random walk in a flip graph"),
        ("render", cmd_render, "SVG drawing of a pseudocircle arrangement"),
    ]
    for name, func, help_text in commands:
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)

    return parser


def main(argv: Optional[list[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings()
    except (FileNotFoundError, ValueError) as exc:
        logging.basicConfig(stream=sys.stderr)
        logger.error("%s", exc)
        sys.exit(2)

    level = (args.log_level or settings["log_level"]).upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        code = args.func(args, settings)
    except FliplabError as exc:
        logger.error("%s", exc)
        sys.exit(exc.exit_code)
    sys.exit(code)


if __name__ == "__main__":
    main()
