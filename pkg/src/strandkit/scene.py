"""Curve collections: the scene model, JSON (de)serialisation, validation.

A scene is either *geometric* (curves are rational polylines, disks are
centre/radius pairs) or *abstract* (curves are ordered crossing-id sequences
with per-crossing chirality signs, disks are cyclic boundary orders).  The
abstract form is the canonical internal one; geometric scenes compile to it
when the arrangement is computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import SceneError
from .geometry import Point, polyline_self_intersects, squared_distance


@dataclass(frozen=True)
class Curve:
    id: str
    points: Optional[tuple[Point, ...]] = None
    crossings: Optional[tuple[str, ...]] = None
    grounded: Optional[tuple[str, int]] = None   # (disk id, end 0|1)
    # abstract mode only: arc indices along the curve carrying a half-twist
    # (arc i joins the (i-1)-th and i-th stops of the curve's path); lets a
    # scene live on a non-orientable surface
    twists: tuple[int, ...] = ()

    @property
    def is_geometric(self) -> bool:
        return self.points is not None

    def endpoints(self) -> tuple[Point, Point]:
        assert self.points is not None
        return self.points[0], self.points[-1]


@dataclass(frozen=True)
class Disk:
    id: str
    center: Optional[Point] = None
    radius: Optional[Fraction] = None
    # abstract form: cyclic order of grounded endpoints (curve id, end)
    boundary: Optional[tuple[tuple[str, int], ...]] = None

    @property
    def is_geometric(self) -> bool:
        return self.center is not None


@dataclass(frozen=True)
class CrossingEvent:
    """One transversal crossing between two distinct curves.

    curve_a is always the lexicographically smaller curve id.  chirality is
    the sign of the cross product of the tangent of curve_a with the tangent
    of curve_b at the crossing (abstract scenes supply it directly).
    """
    id: str
    curve_a: str
    curve_b: str
    index_in_a: int
    index_in_b: int
    chirality: int
    location: Optional[Point] = None

    def other(self, curve_id: str) -> str:
        return self.curve_b if curve_id == self.curve_a else self.curve_a

    def index_on(self, curve_id: str) -> int:
        return self.index_in_a if curve_id == self.curve_a else self.index_in_b


@dataclass
class StringScene:
    curves: dict[str, Curve] = field(default_factory=dict)
    disks: dict[str, Disk] = field(default_factory=dict)
    chirality: dict[str, int] = field(default_factory=dict)

    @property
    def is_geometric(self) -> bool:
        return all(c.is_geometric for c in self.curves.values())

    def curve_ids(self) -> list[str]:
        return sorted(self.curves)

    def validate(self) -> None:
        if not self.curves:
            raise SceneError("scene has no curves")
        for cid in self.curves:
            curve = self.curves[cid]
            if curve.id != cid:
                raise SceneError(f"curve key {cid!r} does not match id {curve.id!r}")
            if (curve.points is None) == (curve.crossings is None):
                raise SceneError(f"curve {cid!r}: exactly one of points/crossings required")
            if curve.points is not None:
                if curve.twists:
                    raise SceneError(f"curve {cid!r}: twists require abstract mode")
                self._validate_polyline(curve)
            else:
                self._validate_abstract_curve(curve)
            if curve.grounded is not None:
                disk_id, end = curve.grounded
                if disk_id not in self.disks:
                    raise SceneError(f"curve {cid!r} grounded on unknown disk {disk_id!r}")
                if end not in (0, 1):
                    raise SceneError(f"curve {cid!r}: grounded end must be 0 or 1")
        if not self.is_geometric:
            self._validate_abstract_crossings()
        if any(c.is_geometric for c in self.curves.values()) and \
           any(not c.is_geometric for c in self.curves.values()):
            raise SceneError("mixed geometric/abstract curves are not supported")
        self._validate_disks()

    def _validate_polyline(self, curve: Curve) -> None:
        pts = curve.points
        if len(pts) < 2:
            raise SceneError(f"curve {curve.id!r}: polyline needs at least 2 points")
        if pts[0] == pts[-1]:
            raise SceneError(f"curve {curve.id!r}: endpoints coincide")
        if polyline_self_intersects(list(pts)):
            raise SceneError(f"curve {curve.id!r}: self-intersecting")

    def _validate_abstract_curve(self, curve: Curve) -> None:
        seq = curve.crossings
        if len(seq) != len(set(seq)):
            raise SceneError(f"curve {curve.id!r}: repeated crossing id in sequence")
        if len(seq) == 0:
            raise SceneError(f"curve {curve.id!r}: empty crossing sequence")
        for arc in curve.twists:
            if not 0 <= arc <= len(seq):
                raise SceneError(f"curve {curve.id!r}: twist index {arc} out of range")

    def _validate_abstract_crossings(self) -> None:
        owners: dict[str, list[str]] = {}
        for cid in sorted(self.curves):
            for x in self.curves[cid].crossings or ():
                owners.setdefault(x, []).append(cid)
        for x, cs in sorted(owners.items()):
            if len(cs) != 2:
                raise SceneError(f"crossing {x!r} appears on {len(cs)} curves, expected 2")
            if cs[0] == cs[1]:
                raise SceneError(f"crossing {x!r} references the same curve twice")
            sign = self.chirality.get(x)
            if sign not in (1, -1):
                raise SceneError(f"crossing {x!r}: chirality sign missing or not +-1")

    def _validate_disks(self) -> None:
        geo = [d for d in self.disks.values() if d.is_geometric]
        ids = sorted(d.id for d in geo)
        for i, a_id in enumerate(ids):
            for b_id in ids[i + 1:]:
                a, b = self.disks[a_id], self.disks[b_id]
                if squared_distance(a.center, b.center) <= (a.radius + b.radius) ** 2:
                    raise SceneError(f"disks {a_id!r} and {b_id!r} are not disjoint")
        for d in geo:
            if d.radius <= 0:
                raise SceneError(f"disk {d.id!r}: radius must be positive")
            for curve in self.curves.values():
                if curve.points is None:
                    continue
                self._check_curve_avoids_disk(curve, d)

    def _check_curve_avoids_disk(self, curve: Curve, disk: Disk) -> None:
        grounded_here = curve.grounded is not None and curve.grounded[0] == disk.id
        pts = list(curve.points)
        r2 = disk.radius ** 2
        if grounded_here:
            end = curve.grounded[1]
            anchor = pts[0] if end == 0 else pts[-1]
            if squared_distance(anchor, disk.center) != r2:
                raise SceneError(
                    f"curve {curve.id!r}: grounded endpoint not on boundary of disk {disk.id!r}")
        for i in range(len(pts) - 1):
            if _segment_enters_open_disk(pts[i], pts[i + 1], disk.center, r2):
                raise SceneError(
                    f"curve {curve.id!r} enters interior of disk {disk.id!r}")

    def grounded_curves(self) -> list[str]:
        return sorted(c for c in self.curves if self.curves[c].grounded is not None)

    # ------------------------------------------------------------------ JSON

    def to_json(self) -> dict:
        curves = []
        for cid in sorted(self.curves):
            c = self.curves[cid]
            entry: dict = {"id": c.id}
            if c.points is not None:
                entry["points"] = [p.to_json() for p in c.points]
            else:
                entry["crossings"] = list(c.crossings)
                if c.twists:
                    entry["twists"] = sorted(c.twists)
            if c.grounded is not None:
                entry["grounded"] = {"disk": c.grounded[0], "end": c.grounded[1]}
            curves.append(entry)
        disks = []
        for did in sorted(self.disks):
            d = self.disks[did]
            entry = {"id": d.id}
            if d.center is not None:
                entry["center"] = d.center.to_json()
                entry["radius"] = [d.radius.numerator, d.radius.denominator]
            if d.boundary is not None:
                entry["boundary"] = [[c, e] for c, e in d.boundary]
            disks.append(entry)
        out: dict = {"curves": curves, "disks": disks}
        if self.chirality:
            out["chirality"] = {k: self.chirality[k] for k in sorted(self.chirality)}
        return out

    @staticmethod
    def from_json(data: dict) -> "StringScene":
        try:
            scene = StringScene()
            for entry in data.get("curves", []):
                cid = entry["id"]
                points = None
                crossings = None
                if "points" in entry:
                    points = tuple(Point.from_json(p) for p in entry["points"])
                if "crossings" in entry:
                    crossings = tuple(entry["crossings"])
                grounded = None
                if "grounded" in entry:
                    grounded = (entry["grounded"]["disk"], int(entry["grounded"]["end"]))
                twists = tuple(int(i) for i in entry.get("twists", ()))
                scene.curves[cid] = Curve(cid, points, crossings, grounded, twists)
            for entry in data.get("disks", []):
                did = entry["id"]
                center = radius = boundary = None
                if "center" in entry:
                    center = Point.from_json(entry["center"])
                    rn, rd = entry["radius"]
                    radius = Fraction(rn, rd)
                if "boundary" in entry:
                    boundary = tuple((c, int(e)) for c, e in entry["boundary"])
                scene.disks[did] = Disk(did, center, radius, boundary)
            for k, v in data.get("chirality", {}).items():
                scene.chirality[k] = int(v)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SceneError(f"malformed scene JSON: {exc}") from exc
        return scene


def _segment_enters_open_disk(a: Point, b: Point, center: Point, r2: Fraction) -> bool:
    """Does the closed segment ab meet the open disk around center?"""
    d = b - a
    len2 = d.x * d.x + d.y * d.y
    if len2 == 0:
        return squared_distance(a, center) < r2
    t = ((center.x - a.x) * d.x + (center.y - a.y) * d.y) / len2
    t = max(Fraction(0), min(Fraction(1), t))
    closest = Point(a.x + d.x * t, a.y + d.y * t)
    return squared_distance(closest, center) < r2


def load_scene(path) -> StringScene:
    """Load and fully validate a scene file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise SceneError(f"scene file not found: {path}")
    except json.JSONDecodeError as exc:
        raise SceneError(f"scene file is not valid JSON: {exc}") from exc
    scene = StringScene.from_json(data)
    scene.validate()
    return scene


def dump_scene(scene: StringScene, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_canonical(scene.to_json()))


def dumps_canonical(obj) -> str:
    """Byte-stable JSON used for every emitted report."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def perturb(scene: StringScene, seed: int, magnitude: Fraction = Fraction(1, 1000)) -> StringScene:
    """Deterministically jitter polyline points of a geometric scene.

    Endpoints grounded on a disk are left in place.  The caller is expected to
    re-validate and re-run the arrangement; perturbation is an explicit,
    auditable preprocessing step, never applied implicitly.
    """
    import random
    rng = random.Random(seed)
    new_curves: dict[str, Curve] = {}
    for cid in sorted(scene.curves):
        c = scene.curves[cid]
        if c.points is None:
            new_curves[cid] = c
            continue
        pts = list(c.points)
        fixed = set()
        if c.grounded is not None:
            fixed.add(0 if c.grounded[1] == 0 else len(pts) - 1)
        out = []
        for i, p in enumerate(pts):
            if i in fixed:
                out.append(p)
            else:
                dx = Fraction(rng.randint(-999, 999), 999) * magnitude
                dy = Fraction(rng.randint(-999, 999), 999) * magnitude
                out.append(Point(p.x + dx, p.y + dy))
        new_curves[cid] = Curve(cid, tuple(out), None, c.grounded)
    return StringScene(new_curves, dict(scene.disks), dict(scene.chirality))
