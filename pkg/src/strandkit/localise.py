"""Crossing localisation: one selected crossing per intersection-graph edge,
the auxiliary instance (H, R, sigma), bigon reduction, and reassembly.

H has one vertex per edge of G (its selected crossing) and one edge per
piece of a curve between consecutive selected crossings.  R collects the
pairs of H-edges that are allowed to cross, read off the inherited drawing
D0; unselected crossings on the two tail pieces of a curve disappear with
the tails.  Bigon reduction deletes empty bigons (two crossings consecutive
on both participating pieces); it is a heuristic: the census reports
honestly whether the 2^d (d-1) + 1 per-curve bound is reached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import events_on_curve, intersection_graph
from .errors import CheckFailure, SceneError
from .graph import Graph
from .scene import Curve, CrossingEvent, StringScene


def select_crossings(scene: StringScene, events: list[CrossingEvent]) -> dict:
    """One crossing per curve pair: the first along the lex-smaller curve."""
    best: dict = {}
    for e in events:
        pair = (e.curve_a, e.curve_b)
        if pair not in best or e.index_in_a < best[pair].index_in_a:
            best[pair] = e
    return best


@dataclass
class AuxiliaryInstance:
    H: Graph                      # vertices: curve pairs; edges via pieces
    pieces: dict                  # piece id (curve, i) -> (vertex, vertex)
    R: set                        # frozensets of two piece ids allowed to cross
    sigma: dict                   # curve -> neighbour order along the curve
    drawing: dict                 # piece id -> event ids along the piece
    selection: dict               # curve pair -> CrossingEvent
    events: dict                  # event id -> CrossingEvent
    scene: StringScene

    def crossing_count(self) -> int:
        return sum(len(v) for v in self.drawing.values()) // 2

    def to_json(self) -> dict:
        return {
            "H": {"vertices": [list(v) for v in self.H.vertices()],
                  "edges": [[list(p), list(q)] for p, q in self.H.edges()]},
            "pieces": {f"{c}:{i}": [list(a), list(b)]
                       for (c, i), (a, b) in sorted(self.pieces.items())},
            "R": sorted(sorted(f"{c}:{i}" for c, i in pair) for pair in self.R),
            "sigma": {c: list(v) for c, v in sorted(self.sigma.items())},
            "drawing": {f"{c}:{i}": list(xs)
                        for (c, i), xs in sorted(self.drawing.items())},
        }


def build_HR(scene: StringScene, events: list[CrossingEvent],
             selection: dict) -> AuxiliaryInstance:
    """The auxiliary instance with its inherited combinatorial drawing."""
    H = Graph()
    for pair in sorted(selection):
        H.add_vertex(pair)
    pieces: dict = {}
    sigma: dict = {}
    drawing: dict = {}
    selected_ids = {e.id for e in selection.values()}
    # piece id of the segment of each curve covering a given event position
    piece_at: dict = {}

    for cid in scene.curve_ids():
        mine = events_on_curve(events, cid)
        sel_pos = [i for i, e in enumerate(mine) if e.id in selected_ids]
        sigma[cid] = [mine[i].other(cid) for i in sel_pos]
        for j in range(len(sel_pos) - 1):
            lo, hi = sel_pos[j], sel_pos[j + 1]
            e1, e2 = mine[lo], mine[hi]
            va = tuple(sorted((cid, e1.other(cid))))
            vb = tuple(sorted((cid, e2.other(cid))))
            pid = (cid, j)
            pieces[pid] = (va, vb)
            H.add_edge(va, vb)
            inner = [mine[p].id for p in range(lo + 1, hi)]
            drawing[pid] = inner
            for p in range(lo + 1, hi):
                piece_at[(cid, mine[p].id)] = pid

    # crossings whose both sides lie on interior pieces stay; others vanish
    # with the discarded tails
    R: set = set()
    for pid in sorted(drawing):
        cid = pid[0]
        kept = []
        for xid in drawing[pid]:
            e = events_by_id(events)[xid]
            other = e.other(cid)
            opid = piece_at.get((other, xid))
            if opid is None:
                continue
            kept.append(xid)
            R.add(frozenset((pid, opid)))
        drawing[pid] = kept

    for pair in R:
        (c1, _), (c2, _) = sorted(pair)
        if c1 == c2:
            raise CheckFailure(f"R pairs two pieces of curve {c1!r}")

    return AuxiliaryInstance(H, pieces, R, sigma, drawing, dict(selection),
                             events_by_id(events), scene)


def events_by_id(events: list[CrossingEvent]) -> dict:
    return {e.id: e for e in events}


def r_membership_counts(inst: AuxiliaryInstance) -> dict:
    """How many R-pairs each piece participates in (the delta_e audit)."""
    counts = {pid: 0 for pid in inst.pieces}
    for pair in inst.R:
        for pid in pair:
            counts[pid] += 1
    return counts


def bigon_reduce(inst: AuxiliaryInstance) -> AuxiliaryInstance:
    """Remove empty bigons until none remain.

    An empty bigon is a pair of crossings between the same two pieces that
    are consecutive on both; deleting the two crossings redraws the bigon
    away without introducing anything, so the result is still a weak
    realisation of (H, R) with strictly fewer crossings per step.
    """
    drawing = {pid: list(xs) for pid, xs in inst.drawing.items()}
    side: dict = {}
    for pid, xs in drawing.items():
        for x in xs:
            side.setdefault(x, []).append(pid)

    def other_piece(x, pid):
        a, b = side[x]
        return b if a == pid else a

    changed = True
    while changed:
        changed = False
        for pid in sorted(drawing):
            xs = drawing[pid]
            for i in range(len(xs) - 1):
                x, y = xs[i], xs[i + 1]
                opid = other_piece(x, pid)
                if other_piece(y, pid) != opid:
                    continue
                oxs = drawing[opid]
                ix, iy = oxs.index(x), oxs.index(y)
                if abs(ix - iy) != 1:
                    continue
                for pid2 in (pid, opid):
                    drawing[pid2] = [z for z in drawing[pid2] if z not in (x, y)]
                changed = True
                break
            if changed:
                break
    out = AuxiliaryInstance(inst.H, inst.pieces, set(inst.R), inst.sigma,
                            drawing, inst.selection, inst.events, inst.scene)
    if out.crossing_count() > inst.crossing_count():
        raise CheckFailure("bigon reduction increased the crossing count")
    return out


def reassemble(inst: AuxiliaryInstance) -> StringScene:
    """Concatenate each curve's pieces into a new curve alpha_u.

    The new scene is abstract: each alpha_u's crossing sequence keeps the
    selected crossings plus the surviving unselected ones, in arc order.
    The intersection graph must be isomorphic to the original one under the
    identity on curve ids (checked; failure means the drawing was not a weak
    realisation).
    """
    scene = inst.scene
    surviving = {x for xs in inst.drawing.values() for x in xs}
    selected_ids = {e.id for e in inst.selection.values()}
    events = sorted(inst.events.values(), key=lambda e: e.id)

    new = StringScene()
    for cid in scene.curve_ids():
        mine = events_on_curve(events, cid)
        keep = [e.id for e in mine if e.id in selected_ids or e.id in surviving]
        if not keep:
            continue
        new.curves[cid] = Curve(cid, None, tuple(keep))
    for e in events:
        if e.id in selected_ids or e.id in surviving:
            new.chirality[e.id] = e.chirality
    new.validate()

    new_events = [e for e in events
                  if e.id in selected_ids or e.id in surviving]
    got = intersection_graph(new, new_events).edge_list()
    want = sorted(tuple(sorted(p)) for p in inst.selection)
    if got != want:
        raise CheckFailure("reassembled scene changed the intersection graph")
    return new


def crossing_census(scene: StringScene, events: list[CrossingEvent],
                    delta: int | None = None) -> dict:
    """Per-curve crossing involvement vs the localisation bound."""
    by_curve: dict = {cid: [] for cid in scene.curve_ids()}
    for e in events:
        by_curve[e.curve_a].append(e)
        by_curve[e.curve_b].append(e)
    out = {}
    for cid in scene.curve_ids():
        count = len(by_curve[cid])
        deg = len({e.other(cid) for e in by_curve[cid]})
        bound = 2 ** deg * (deg - 1) + 1
        out[cid] = {"count": count, "degree": deg, "bound": bound,
                    "within_bound": count <= bound}
    report = {"curves": out}
    if delta is not None:
        report["delta"] = delta
        report["is_delta_string"] = all(c["count"] <= delta for c in out.values())
    return report


def localise_pipeline(scene: StringScene, events: list[CrossingEvent]) -> dict:
    """select -> build -> bigon-reduce -> reassemble, with before/after census."""
    selection = select_crossings(scene, events)
    inst = build_HR(scene, events, selection)
    reduced = bigon_reduce(inst)
    new_scene = reassemble(reduced)
    new_events = [inst.events[x] for c in new_scene.curves.values()
                  for x in c.crossings]
    seen = set()
    uniq = []
    for e in sorted(new_events, key=lambda e: e.id):
        if e.id not in seen:
            seen.add(e.id)
            uniq.append(e)
    return {
        "instance": inst,
        "reduced": reduced,
        "scene": new_scene,
        "census_before": crossing_census(scene, events),
        "census_after": crossing_census(new_scene, uniq),
        "crossings_before": inst.crossing_count(),
        "crossings_after": reduced.crossing_count(),
    }
