"""Crossing arrangements and the intersection graph of a scene."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegeneracyError, SceneError
from .geometry import Point, SegmentIntersection, direction_cross, intersect_segments
from .scene import Curve, CrossingEvent, StringScene


@dataclass
class IntersectionGraph:
    vertices: list[str]
    edges: set[frozenset] = field(default_factory=set)
    adjacency: dict[str, set[str]] = field(default_factory=dict)

    @staticmethod
    def from_edges(vertices, edges) -> "IntersectionGraph":
        g = IntersectionGraph(sorted(vertices))
        g.adjacency = {v: set() for v in g.vertices}
        for u, v in edges:
            if u == v:
                continue
            g.edges.add(frozenset((u, v)))
            g.adjacency[u].add(v)
            g.adjacency[v].add(u)
        return g

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def edge_list(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_json(self) -> dict:
        return {"vertices": self.vertices,
                "edges": [list(e) for e in self.edge_list()]}


def compute_arrangement(scene: StringScene) -> list[CrossingEvent]:
    """All pairwise transversal crossings of a scene, with deterministic ids.

    Geometric scenes get exact crossing locations; any degeneracy (tangency,
    collinear overlap, triple point, crossing at a polyline bend, endpoint on
    another curve) is an error, never perturbed away.  Abstract scenes just
    materialise their declared crossing sequences.
    """
    if scene.is_geometric:
        return _geometric_arrangement(scene)
    return _abstract_arrangement(scene)


def _geometric_arrangement(scene: StringScene) -> list[CrossingEvent]:
    ids = scene.curve_ids()
    raw: dict[tuple[str, str], list[dict]] = {}
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            hits = _curve_pair_crossings(scene.curves[a], scene.curves[b])
            if hits:
                raw[(a, b)] = hits

    # reject triple points: two events from different pairs at one location
    seen: dict[Point, tuple[str, str]] = {}
    for pair in sorted(raw):
        for hit in raw[pair]:
            p = hit["point"]
            if p in seen and seen[p] != pair:
                raise DegeneracyError(
                    f"three curves meet at {p}: pairs {seen[p]} and {pair}")
            seen[p] = pair

    events: list[CrossingEvent] = []
    per_curve: dict[str, list[tuple]] = {c: [] for c in ids}
    for (a, b) in sorted(raw):
        hits = sorted(raw[(a, b)], key=lambda h: h["pos_a"])
        for k, hit in enumerate(hits):
            ev = CrossingEvent(
                id=f"x:{a}:{b}:{k}",
                curve_a=a, curve_b=b,
                index_in_a=-1, index_in_b=-1,   # filled after global sort
                chirality=hit["sign"],
                location=hit["point"],
            )
            per_curve[a].append((hit["pos_a"], ev))
            per_curve[b].append((hit["pos_b"], ev))
            events.append(ev)

    # arc-sorted positions along each curve give the per-curve indices
    indexed: dict[str, dict[str, int]] = {}
    for c in ids:
        order = sorted(per_curve[c], key=lambda item: item[0])
        indexed[c] = {ev.id: i for i, (_, ev) in enumerate(order)}
    final = []
    for ev in events:
        final.append(CrossingEvent(
            id=ev.id, curve_a=ev.curve_a, curve_b=ev.curve_b,
            index_in_a=indexed[ev.curve_a][ev.id],
            index_in_b=indexed[ev.curve_b][ev.id],
            chirality=ev.chirality, location=ev.location))
    final.sort(key=lambda e: e.id)
    return final


def _curve_pair_crossings(a: Curve, b: Curve) -> list[dict]:
    hits = []
    pa, pb = list(a.points), list(b.points)
    for i in range(len(pa) - 1):
        for j in range(len(pb) - 1):
            res = intersect_segments(pa[i], pa[i + 1], pb[j], pb[j + 1])
            if res.kind == SegmentIntersection.DISJOINT:
                continue
            if res.kind == SegmentIntersection.OVERLAP:
                raise DegeneracyError(
                    f"curves {a.id!r} and {b.id!r} share a collinear piece")
            if res.kind == SegmentIntersection.TOUCH:
                raise DegeneracyError(
                    f"curves {a.id!r} and {b.id!r} touch non-transversally at {res.point} "
                    "(tangency, bend crossing, or endpoint on another curve)")
            p = res.point
            da = pa[i + 1] - pa[i]
            db = pb[j + 1] - pb[j]
            sign = 1 if direction_cross(da, db) > 0 else -1
            hits.append({
                "point": p,
                "sign": sign,
                "pos_a": (i, _segment_parameter(pa[i], pa[i + 1], p)),
                "pos_b": (j, _segment_parameter(pb[j], pb[j + 1], p)),
            })
    return hits


def _segment_parameter(a: Point, b: Point, p: Point) -> Fraction:
    if b.x != a.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def _abstract_arrangement(scene: StringScene) -> list[CrossingEvent]:
    owners: dict[str, list[tuple[str, int]]] = {}
    for cid in scene.curve_ids():
        for idx, x in enumerate(scene.curves[cid].crossings):
            owners.setdefault(x, []).append((cid, idx))
    events = []
    for x in sorted(owners):
        (a, ia), (b, ib) = sorted(owners[x])
        events.append(CrossingEvent(
            id=x, curve_a=a, curve_b=b, index_in_a=ia, index_in_b=ib,
            chirality=scene.chirality[x], location=None))
    return events


def events_on_curve(events: list[CrossingEvent], curve_id: str) -> list[CrossingEvent]:
    """Events involving curve_id, in arc order along the curve."""
    mine = [e for e in events if curve_id in (e.curve_a, e.curve_b)]
    mine.sort(key=lambda e: e.index_on(curve_id))
    return mine


def intersection_graph(scene: StringScene, events: list[CrossingEvent]) -> IntersectionGraph:
    """Simple graph on curve ids: adjacent iff the curves share a crossing."""
    pairs = {(e.curve_a, e.curve_b) for e in events}
    return IntersectionGraph.from_edges(scene.curve_ids(), pairs)


def events_to_json(events: list[CrossingEvent]) -> list[dict]:
    out = []
    for e in sorted(events, key=lambda e: e.id):
        entry = {
            "id": e.id, "curve_a": e.curve_a, "curve_b": e.curve_b,
            "index_in_a": e.index_in_a, "index_in_b": e.index_in_b,
            "chirality": e.chirality,
        }
        if e.location is not None:
            entry["location"] = e.location.to_json()
        out.append(entry)
    return out
