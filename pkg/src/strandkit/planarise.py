"""Planarisation of a scene, fragments/sections/levels, and the coloured
planarisation with its contraction map and per-curve walks.

The planarisation C' replaces every crossing by a degree-4 dummy vertex and
adds the curve endpoints as degree-1 vertices; each curve gamma contributes a
path L_gamma.  Under an ordered colouring, curves split into fragments at
crossings with smaller-coloured curves; the interior of each fragment's
subpath (when it has >= 3 vertices) is a section.  Contracting every section
to a point yields the coloured planarisation with contraction map psi and
walks W_gamma = psi(L_gamma) with consecutive duplicates merged.

Note on walks: if two curves cross, their walks share a vertex.  The
converse fails: two non-crossing curves that both cross the same section of
a third curve meet at its contracted vertex.  Only the forward direction is
asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import events_on_curve
from .embedding import EmbeddedGraph
from .errors import InvariantError, SceneError
from .graph import Graph
from .scene import CrossingEvent, StringScene


def endpoint_id(curve_id: str, end: int) -> str:
    return f"e:{curve_id}:{end}"


def _edge_id(curve_id: str, i: int) -> str:
    return f"c:{curve_id}:{i}"


@dataclass
class Planarisation:
    embedding: EmbeddedGraph
    kind: dict                 # vertex -> "endpoint" | "dummy"
    curve_paths: dict          # curve id -> list of vertices (L_gamma)
    events: dict               # event id -> CrossingEvent
    scene: StringScene

    def endpoints(self) -> list:
        return sorted(v for v, k in self.kind.items() if k == "endpoint")

    def dummies(self) -> list:
        return sorted(v for v, k in self.kind.items() if k == "dummy")

    def graph(self) -> Graph:
        return self.embedding.simple_graph()

    def level_of(self, v, phi: dict) -> int:
        if self.kind[v] == "endpoint":
            return 0
        ev = self.events[v]
        return min(phi[ev.curve_a], phi[ev.curve_b])


def planarise(scene: StringScene, events: list[CrossingEvent]) -> Planarisation:
    """Build C' with its rotation system (and arc signatures, if twisted)."""
    for cid in scene.curve_ids():
        if not any(cid in (e.curve_a, e.curve_b) for e in events):
            raise SceneError(f"curve {cid!r} is isolated; strip first")

    g = EmbeddedGraph()
    kind: dict = {}
    paths: dict = {}
    by_id = {e.id: e for e in events}

    for cid in scene.curve_ids():
        mine = events_on_curve(events, cid)
        path = [endpoint_id(cid, 0)] + [e.id for e in mine] + [endpoint_id(cid, 1)]
        paths[cid] = path
        kind[path[0]] = kind[path[-1]] = "endpoint"
        for e in mine:
            kind[e.id] = "dummy"
        twists = set(scene.curves[cid].twists)
        for i in range(len(path) - 1):
            sig = -1 if i in twists else 1
            g.add_edge(_edge_id(cid, i), path[i], path[i + 1], sig=sig, label=cid)

    # rotation at each dummy follows the chirality sign: with a the lex-smaller
    # curve, +1 means [a-next, b-next, a-prev, b-prev] (counter-clockwise when
    # a heads east and b north), -1 the mirror order
    for e in events:
        a, b = e.curve_a, e.curve_b
        ja, jb = e.index_in_a, e.index_in_b
        a_prev, a_next = (_edge_id(a, ja), 1), (_edge_id(a, ja + 1), 0)
        b_prev, b_next = (_edge_id(b, jb), 1), (_edge_id(b, jb + 1), 0)
        if e.chirality == 1:
            g.rotation[e.id] = [a_next, b_next, a_prev, b_prev]
        else:
            g.rotation[e.id] = [a_next, b_prev, a_prev, b_next]

    g.check()
    plan = Planarisation(g, kind, paths, by_id, scene)
    _check_planarisation(plan, events)
    return plan


def _check_planarisation(plan: Planarisation, events: list[CrossingEvent]) -> None:
    g = plan.embedding
    n_end = sum(1 for k in plan.kind.values() if k == "endpoint")
    if len(g.rotation) != n_end + len(events):
        raise InvariantError("planarisation vertex count off")
    if g.edge_count() != sum(len(p) - 1 for p in plan.curve_paths.values()):
        raise InvariantError("planarisation edge count off")
    for v, k in plan.kind.items():
        want = 1 if k == "endpoint" else 4
        if g.degree(v) != want:
            raise InvariantError(f"vertex {v!r} has degree {g.degree(v)}, expected {want}")


@dataclass(frozen=True)
class Fragment:
    """Maximal piece of a curve between crossings with smaller-colour curves."""
    curve: str
    index: int
    path: tuple            # subpath of L_gamma, including its end vertices
    interior: tuple        # crossing ids strictly inside the fragment

    def section(self):
        """Interior of the subpath, or None when it has < 3 vertices."""
        if len(self.path) < 3:
            return None
        return list(self.path[1:-1])


def _phi_of(colouring) -> dict:
    return getattr(colouring, "phi", colouring)


def fragments(plan: Planarisation, colouring, curve_id: str) -> list[Fragment]:
    """Fragments of a curve in arc order under an ordered colouring."""
    phi = _phi_of(colouring)
    if curve_id not in plan.curve_paths:
        raise SceneError(f"unknown curve {curve_id!r}")
    path = plan.curve_paths[curve_id]
    my_colour = phi[curve_id]
    # positions in the path where a smaller-coloured curve crosses
    cuts = []
    for i, v in enumerate(path):
        if plan.kind[v] != "dummy":
            continue
        other = plan.events[v].other(curve_id)
        if phi[other] == my_colour:
            raise SceneError(
                f"not an ordered colouring: curves {curve_id!r} and {other!r} "
                f"cross and share colour {my_colour}")
        if phi[other] < my_colour:
            cuts.append(i)
    out = []
    bounds = [0] + cuts + [len(path) - 1]
    for fi in range(len(bounds) - 1):
        sub = path[bounds[fi]:bounds[fi + 1] + 1]
        interior = tuple(v for v in sub[1:-1] if plan.kind[v] == "dummy")
        out.append(Fragment(curve_id, fi, tuple(sub), interior))
    return out


def sections(plan: Planarisation, colouring, curve_id: str) -> list[list]:
    """Sections of L_gamma: fragment subpath interiors with >= 1 vertex."""
    out = []
    for frag in fragments(plan, colouring, curve_id):
        sec = frag.section()
        if sec is not None:
            out.append(sec)
    return out


@dataclass
class ColouredPlanarisation:
    embedding: EmbeddedGraph   # multigraph, for genus
    level: dict                # C^phi vertex -> level
    psi: dict                  # V(C') -> V(C^phi)
    walks: dict                # curve id -> walk W_gamma
    endpoints: set             # E_C inside C^phi
    sections: dict             # representative -> list of C' vertices (fibre)
    section_curve: dict        # representative -> owning curve id
    phi: dict = field(default_factory=dict)

    def graph(self) -> Graph:
        return self.embedding.simple_graph()


def coloured_planarisation(plan: Planarisation, colouring) -> ColouredPlanarisation:
    """Contract every section of C' to a single vertex.

    The representative of a section is its first vertex along the curve, so
    single-vertex sections keep their ids and C^phi = C' when nothing
    contracts.  The embedding is contracted edge by edge, which preserves the
    surface, so Euler genus can still be read off the result.
    """
    phi = dict(_phi_of(colouring))
    secs: dict = {}
    sec_curve: dict = {}
    owner: dict = {}
    for cid in sorted(plan.curve_paths):
        for sec in sections(plan, colouring, cid):
            rep = sec[0]
            secs[rep] = list(sec)
            sec_curve[rep] = cid
            for v in sec:
                if v in owner:
                    raise InvariantError(
                        f"sections not disjoint: {v!r} in sections of "
                        f"{owner[v]!r} and {cid!r}")
                owner[v] = cid
    for v in plan.dummies():
        if v not in owner:
            raise InvariantError(f"dummy {v!r} lies in no section")

    g = plan.embedding.copy()
    psi = {v: v for v in plan.kind}
    for rep in sorted(secs):
        sec = secs[rep]
        cid = sec_curve[rep]
        path = plan.curve_paths[cid]
        pos = path.index(sec[0])
        for off in range(len(sec) - 1):
            g.contract_edge(_edge_id(cid, pos + off))
        for v in sec:
            psi[v] = rep

    level = {}
    for v in g.rotation:
        if plan.kind.get(v) == "endpoint":
            level[v] = 0
        else:
            level[v] = phi[sec_curve[v]]

    walks = {}
    for cid in sorted(plan.curve_paths):
        walk = []
        for v in plan.curve_paths[cid]:
            x = psi[v]
            if not walk or walk[-1] != x:
                walk.append(x)
        walks[cid] = walk

    cp = ColouredPlanarisation(
        embedding=g, level=level, psi=psi, walks=walks,
        endpoints={v for v, k in plan.kind.items() if k == "endpoint"},
        sections=secs, section_curve=sec_curve, phi=phi)
    _check_contraction(plan, cp)
    return cp


def _check_contraction(plan: Planarisation, cp: ColouredPlanarisation) -> None:
    shrink = sum(len(s) - 1 for s in cp.sections.values())
    if len(plan.kind) - len(cp.embedding.rotation) != shrink:
        raise InvariantError("contraction count mismatch")
    for v in cp.endpoints:
        if cp.psi[v] != v:
            raise InvariantError(f"psi moved endpoint {v!r}")
    for cid, walk in cp.walks.items():
        for x in walk:
            if cp.level[x] > cp.phi[cid]:
                raise InvariantError(
                    f"walk of {cid!r} visits {x!r} of level {cp.level[x]}")


def check_coloured_planarisation(plan: Planarisation, cp: ColouredPlanarisation) -> None:
    """Deep invariant audit of a coloured planarisation.

    Raises InvariantError on the first violated clause: the psi-fibre
    partition, uniqueness of the level-defining curve per contracted vertex,
    no consecutive own-level vertices in any walk, and walks of two curves
    sharing a vertex exactly when the curves cross.
    """
    # psi fibres partition V(C')
    fibres: dict = {}
    for v, x in cp.psi.items():
        fibres.setdefault(x, set()).add(v)
    if sum(len(f) for f in fibres.values()) != len(plan.kind):
        raise InvariantError("psi fibres do not cover V(C')")
    for x, fibre in fibres.items():
        if x in cp.endpoints:
            if fibre != {x}:
                raise InvariantError(f"endpoint fibre of {x!r} not a singleton")
        elif fibre != set(cp.sections[x]):
            raise InvariantError(f"fibre of {x!r} is not its section")

    # exactly one curve gamma with phi(gamma) = level(x) and x in W_gamma,
    # and L_gamma contains the whole fibre
    for x in sorted(cp.level):
        if x in cp.endpoints:
            continue
        witnesses = [cid for cid, walk in cp.walks.items()
                     if cp.phi[cid] == cp.level[x] and x in walk]
        if len(witnesses) != 1:
            raise InvariantError(f"vertex {x!r}: {len(witnesses)} level-defining curves")
        if not set(cp.sections[x]) <= set(plan.curve_paths[witnesses[0]]):
            raise InvariantError(f"fibre of {x!r} escapes L of {witnesses[0]!r}")

    # no two own-level vertices consecutive in a walk
    for cid, walk in cp.walks.items():
        for i in range(len(walk) - 1):
            if cp.level[walk[i]] == cp.phi[cid] == cp.level[walk[i + 1]]:
                raise InvariantError(
                    f"walk of {cid!r}: consecutive level-{cp.phi[cid]} vertices "
                    f"{walk[i]!r}, {walk[i + 1]!r}")

    # crossing curves have intersecting walks (the converse is false: two
    # non-crossing curves may both cross the same section of a third curve
    # and then share its contracted vertex)
    crossing_pairs = set()
    for e in plan.events.values():
        crossing_pairs.add((e.curve_a, e.curve_b))
    for a, b in sorted(crossing_pairs):
        if not set(cp.walks[a]) & set(cp.walks[b]):
            raise InvariantError(f"curves {a!r}, {b!r} cross but walks are disjoint")


def euler_genus(obj) -> int:
    """Euler genus of a (coloured) planarisation's embedding."""
    return obj.embedding.euler_genus()


# ------------------------------------------------------------------ emitters

def planarisation_to_json(plan: Planarisation) -> dict:
    g = plan.embedding
    return {
        "vertices": [{"id": v, "kind": plan.kind[v]} for v in g.vertices()],
        "edges": [{"id": eid, "ends": sorted(g.edge_ends[eid]),
                   "curve": g.edge_label.get(eid)}
                  for eid in sorted(g.edge_ends)],
        "curve_paths": {cid: list(p) for cid, p in sorted(plan.curve_paths.items())},
        "rotation": {v: [list(d) for d in g.rotation[v]] for v in g.vertices()},
    }


def coloured_to_json(cp: ColouredPlanarisation) -> dict:
    g = cp.embedding
    return {
        "vertices": [{"id": v, "level": cp.level[v],
                      "kind": "endpoint" if v in cp.endpoints else "contracted"}
                     for v in g.vertices()],
        "edges": [{"id": eid, "ends": sorted(g.edge_ends[eid]),
                   "curve": g.edge_label.get(eid)}
                  for eid in sorted(g.edge_ends)],
        "psi": {v: cp.psi[v] for v in sorted(cp.psi)},
        "walks": {cid: list(w) for cid, w in sorted(cp.walks.items())},
    }


def _dot(vertices: list[str], edges: list[tuple]) -> str:
    lines = ["graph {"]
    lines.extend(vertices)
    lines.extend(f'  "{u}" -- "{v}"{attr};' for u, v, attr in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def planarisation_to_dot(plan: Planarisation) -> str:
    g = plan.embedding
    verts = [f'  "{v}" [kind="{plan.kind[v]}"];' for v in g.vertices()]
    edges = []
    for eid in sorted(g.edge_ends):
        u, v = g.edge_ends[eid]
        edges.append((u, v, f' [label="{g.edge_label.get(eid, "")}"]'))
    return _dot(verts, edges)


def coloured_to_dot(cp: ColouredPlanarisation) -> str:
    g = cp.embedding
    verts = [f'  "{v}" [level={cp.level[v]}];' for v in g.vertices()]
    edges = []
    for eid in sorted(g.edge_ends):
        u, v = g.edge_ends[eid]
        edges.append((u, v, f' [label="{g.edge_label.get(eid, "")}"]'))
    return _dot(verts, edges)


_SVG_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#8c564b",
                "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#ff7f0e"]


def scene_to_svg(scene: StringScene, colouring=None, highlight: str | None = None,
                 plan: Planarisation | None = None) -> str:
    """Presentation-only SVG of a geometric scene.

    Curves are coloured by their colour class when a colouring is given; the
    highlighted curve's fragments alternate dash patterns so sections are
    visible.  Never parsed back.
    """
    if not scene.is_geometric:
        raise SceneError("SVG emission needs a geometric scene")
    phi = _phi_of(colouring) if colouring is not None else {}
    pts = [p for c in scene.curves.values() for p in c.points]
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    pad = 0.5
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) + pad - x0, max(ys) + pad - y0
    scale = 60.0

    def sx(p):
        return (float(p.x) - x0) * scale

    def sy(p):
        return (h - (float(p.y) - y0)) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * scale:.0f}" '
           f'height="{h * scale:.0f}" viewBox="0 0 {w * scale:.0f} {h * scale:.0f}">']
    for did in sorted(scene.disks):
        d = scene.disks[did]
        if d.center is None:
            continue
        out.append(f'<circle cx="{sx(d.center):.1f}" cy="{sy(d.center):.1f}" '
                   f'r="{float(d.radius) * scale:.1f}" fill="#eee" stroke="#999"/>')
    for cid in scene.curve_ids():
        c = scene.curves[cid]
        colour = _SVG_PALETTE[(phi.get(cid, 1) - 1) % len(_SVG_PALETTE)]
        width = 3 if cid == highlight else 1.5
        path = " ".join(f"{sx(p):.1f},{sy(p):.1f}" for p in c.points)
        out.append(f'<polyline points="{path}" fill="none" stroke="{colour}" '
                   f'stroke-width="{width}"><title>{cid}</title></polyline>')
    if highlight is not None and plan is not None and colouring is not None:
        for frag in fragments(plan, colouring, highlight):
            for v in frag.interior:
                loc = plan.events[v].location
                if loc is not None:
                    out.append(f'<circle cx="{sx(loc):.1f}" cy="{sy(loc):.1f}" '
                               f'r="4" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
