"""Command-line front-end: reproducible pipelines with JSON reports.

Every subcommand reads scene/colouring JSON, runs the relevant pipeline with
all checkers enabled, writes canonical (byte-stable) artifacts under --out,
and prints a JSON report to stdout.  Exit codes: 0 success, 1 internal check
failure (a certified bound or invariant was violated), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import (compute_arrangement, events_to_json,
                          intersection_graph)
from .colouring import (OrderedColouring, check_ordered, compute_params,
                        degeneracy_order, greedy_colouring)
from .decomp import (bounds, exact_treewidth, ltw_pipeline,
                     outerstring_decomposition, td_to_pace)
from .errors import CheckFailure, DegeneracyError, InvariantError, SceneError
from .families import (ConvexScene, convex_to_drawing, gen_grid_disk,
                       gen_grounded, gen_random, gen_random_convex,
                       gen_rectangle_family, gen_segment_family)
from .graph import Graph
from .localise import localise_pipeline
from .planarise import (check_coloured_planarisation, coloured_planarisation,
                        coloured_to_dot, coloured_to_json, euler_genus,
                        planarisation_to_dot, planarisation_to_json, planarise,
                        scene_to_svg)
from .product_model import (build_model, grounded_distance_check, verify_model,
                            walk_weak_diameter)
from .scene import StringScene, dumps_canonical, load_scene


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (SceneError, DegeneracyError) as exc:
        _emit({"error": str(exc), "kind": "invalid-input"})
        return 2
    except (CheckFailure, InvariantError) as exc:
        _emit({"error": str(exc), "kind": "check-failure"})
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}", "kind": "invalid-input"})
        return 2
    _emit(report)
    return 0 if report.get("ok", True) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strandkit",
        description="certified combinatorial structure of curve arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, **flags):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        if flags.get("inp"):
            p.add_argument("--in", dest="inp", required=True,
                           help="input scene JSON")
        if flags.get("out"):
            p.add_argument("--out", help="output directory for artifacts")
        if flags.get("colouring"):
            p.add_argument("--colouring", help="ordered colouring JSON; "
                           "default: greedy on the reverse degeneracy order")
        if flags.get("fmt"):
            p.add_argument("--format", default="json",
                           help="comma-separated: json,dot,svg,td")
        if flags.get("seed"):
            p.add_argument("--seed", type=int, default=0)
        if flags.get("params"):
            p.add_argument("--params", nargs="*", default=[], metavar="K=V")
        return p

    cmd("arrange", _cmd_arrange, inp=True, out=True, fmt=True)
    cmd("planarise", _cmd_planarise, inp=True, out=True, colouring=True, fmt=True)
    cmd("colour", _cmd_colour, inp=True, out=True)
    cmd("model", _cmd_model, inp=True, out=True, colouring=True)
    cmd("decomp", _cmd_decomp, inp=True, out=True, colouring=True, fmt=True)
    cmd("outerstring", _cmd_outerstring, inp=True, out=True, colouring=True,
        fmt=True)
    cmd("localise", _cmd_localise, inp=True, out=True)

    g = cmd("gen", _cmd_gen, out=True, seed=True, params=True)
    g.add_argument("--family", required=True,
                   choices=["segment", "grid-disk", "random", "grounded",
                            "rectangles", "convex"])

    b = cmd("bounds", _cmd_bounds, params=True)
    b.add_argument("--theorem", required=True)

    cmd("verify", _cmd_verify, inp=True, colouring=True)
    return parser


# --------------------------------------------------------------- plumbing

def _emit(obj: dict) -> None:
    sys.stdout.write(dumps_canonical(obj))


def _write(args, name: str, text: str) -> None:
    if args.out is None:
        return
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text)


def _write_json(args, name: str, obj) -> None:
    _write(args, name, dumps_canonical(obj))


def _formats(args) -> set:
    return set(getattr(args, "format", "json").split(","))


def _parse_params(tokens: list) -> dict:
    params = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise SceneError(f"--params entries must be K=V, got {tok!r}")
        params[key] = int(value)
    return params


def _load_colouring(args, scene: StringScene, events) -> OrderedColouring:
    if getattr(args, "colouring", None):
        data = json.loads(Path(args.colouring).read_text())
        colouring = OrderedColouring.from_json(data)
        missing = set(scene.curve_ids()) - set(colouring.phi)
        if missing:
            raise SceneError(f"colouring misses curves {sorted(missing)}")
        check_ordered(colouring, events)
        return colouring
    G = intersection_graph(scene, events)
    g = Graph(vertices=G.vertices, edges=G.edge_list())
    return greedy_colouring(g, degeneracy_order(g)[::-1])


def _graph_of(scene: StringScene, events) -> Graph:
    G = intersection_graph(scene, events)
    return Graph(vertices=G.vertices, edges=G.edge_list())


# ------------------------------------------------------------- subcommands

def _cmd_arrange(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    G = intersection_graph(scene, events)
    _write_json(args, "events.json", events_to_json(events))
    _write_json(args, "graph.json",
                {"vertices": G.vertices, "edges": G.edge_list()})
    if "dot" in _formats(args):
        lines = ["graph G {"]
        lines += [f'  "{v}";' for v in G.vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in G.edge_list()]
        lines.append("}")
        _write(args, "graph.dot", "\n".join(lines) + "\n")
    return {"command": "arrange", "curves": len(scene.curves),
            "events": len(events), "edges": len(G.edge_list())}


def _cmd_planarise(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    plan = planarise(scene, events)
    fmts = _formats(args)
    _write_json(args, "planarisation.json", planarisation_to_json(plan))
    if "dot" in fmts:
        _write(args, "planarisation.dot", planarisation_to_dot(plan))
    report = {"command": "planarise",
              "vertices": len(plan.embedding.rotation),
              "edges": plan.embedding.edge_count(),
              "genus": euler_genus(plan)}
    colouring = _load_colouring(args, scene, events)
    cp = coloured_planarisation(plan, colouring)
    check_coloured_planarisation(plan, cp)
    _write_json(args, "coloured.json", coloured_to_json(cp))
    if "dot" in fmts:
        _write(args, "coloured.dot", coloured_to_dot(cp))
    if "svg" in fmts and scene.is_geometric:
        _write(args, "scene.svg", scene_to_svg(scene, colouring))
    report["coloured_vertices"] = len(cp.embedding.rotation)
    report["coloured_genus"] = euler_genus(cp)
    return report


def _cmd_colour(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    colouring = _load_colouring(args, scene, events)
    params = compute_params(scene, events, colouring)
    _write_json(args, "colouring.json", colouring.to_json())
    _write_json(args, "params.json", params.to_json())
    return {"command": "colour", "colouring": colouring.to_json(),
            "params": params.to_json()}


def _cmd_model(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    colouring = _load_colouring(args, scene, events)
    plan = planarise(scene, events)
    cp = coloured_planarisation(plan, colouring)
    params = compute_params(scene, events, colouring)
    model = build_model(cp, params)
    G = _graph_of(scene, events)
    check = verify_model(model, G)
    diameters = walk_weak_diameter(cp, params)
    _write_json(args, "model.json", model.to_json())
    return {"command": "model", "ok": check["valid"], "check": check,
            "copies": model.copies, "branch_sets": len(model.mu),
            "max_walk_diameter": max(diameters.values(), default=0),
            "r": params.r}


def _cmd_decomp(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    colouring = _load_colouring(args, scene, events)
    result = ltw_pipeline(scene, colouring)
    td = result["td"]
    _write_json(args, "td.json", td.to_json())
    _write_json(args, "layering.json", result["layering"].to_json())
    if "td" in _formats(args):
        _write(args, "td.td", td_to_pace(td, _graph_of(scene, events)))
    report = {"command": "decomp", "width": td.width,
              "layered_width": result["layered_width"],
              "layered_width_bound": result["bound"],
              "genus": result["genus"],
              "params": result["params"].to_json()}
    g = _graph_of(scene, events)
    if len(g) <= 16:
        report["exact_treewidth"] = exact_treewidth(g)
    return report


def _cmd_outerstring(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    colouring = _load_colouring(args, scene, events)
    result = outerstring_decomposition(scene, colouring)
    td = result["td"]
    _write_json(args, "td.json", td.to_json())
    if "td" in _formats(args):
        _write(args, "td.td", td_to_pace(td, _graph_of(scene, events)))
    return {"command": "outerstring", "width": result["width"],
            "bound": result["bound"], "ok": result["valid"],
            "t": result["t"], "d": result["d"],
            "quotient_radius": result["quotient_radius"]}


def _cmd_localise(args) -> dict:
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    result = localise_pipeline(scene, events)
    _write_json(args, "instance.json", result["instance"].to_json())
    _write_json(args, "reduced.json", result["reduced"].to_json())
    _write_json(args, "scene.json", result["scene"].to_json())
    return {"command": "localise",
            "crossings_before": result["crossings_before"],
            "crossings_after": result["crossings_after"],
            "census_before": result["census_before"],
            "census_after": result["census_after"]}


def _cmd_gen(args) -> dict:
    params = _parse_params(args.params)
    family = args.family
    if family == "segment":
        obj = gen_segment_family(params.get("t", 2))
    elif family == "grid-disk":
        obj = gen_grid_disk(params.get("t", 2))
    elif family == "random":
        obj = gen_random(params.get("n", 6),
                         params.get("crossings_per_pair", 2), args.seed)
    elif family == "grounded":
        obj = gen_grounded(params.get("n", 6), args.seed)
    elif family == "rectangles":
        obj = gen_rectangle_family(params.get("delta", 3))
    else:
        obj = gen_random_convex(params.get("n", 6), args.seed)
    _write_json(args, "scene.json", obj.to_json())
    report = {"command": "gen", "family": family, "seed": args.seed}
    if isinstance(obj, StringScene):
        report["curves"] = len(obj.curves)
    else:
        report["sets"] = len(obj.sets)
        drawing = convex_to_drawing(obj)
        report["max_crossings"] = drawing["max_crossings"]
        report["crossing_cap"] = drawing["cap"]
    return report


def _cmd_bounds(args) -> dict:
    params = _parse_params(args.params)
    value = bounds(args.theorem, params)
    return {"command": "bounds", "theorem": args.theorem,
            "params": params, "value": value}


def _cmd_verify(args) -> dict:
    """Run every applicable checker; ok=false (exit 1) on any failure."""
    scene = load_scene(args.inp)
    events = compute_arrangement(scene)
    checks: dict = {}

    colouring = _load_colouring(args, scene, events)
    check_ordered(colouring, events)
    checks["ordered-colouring"] = True
    params = compute_params(scene, events, colouring)

    plan = planarise(scene, events)
    cp = coloured_planarisation(plan, colouring)
    check_coloured_planarisation(plan, cp)
    checks["coloured-planarisation"] = True
    genus = euler_genus(cp)

    model = build_model(cp, params)
    res = verify_model(model, _graph_of(scene, events))
    checks["minor-model"] = res["valid"]

    walk_weak_diameter(cp, params)
    checks["walk-weak-diameter"] = True

    if genus == 0 and len(scene.disks) == 1 and scene.grounded_curves():
        ends = {f"e:{cid}:{scene.curves[cid].grounded[1]}"
                for cid in scene.grounded_curves()}
        if set(scene.grounded_curves()) == set(scene.curve_ids()):
            grounded_distance_check(cp, ends)
            checks["grounded-distance"] = True
            outerstring_decomposition(scene, colouring)
            checks["outerstring"] = True

    ok = all(checks.values())
    return {"command": "verify", "ok": ok, "checks": checks,
            "params": params.to_json(), "genus": genus}


if __name__ == "__main__":
    sys.exit(main())
