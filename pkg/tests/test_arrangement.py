from fractions import Fraction
from itertools import combinations

import pytest

from strandkit.arrangement import (compute_arrangement, events_on_curve,
                                   events_to_json, intersection_graph)
from strandkit.errors import DegeneracyError
from strandkit.geometry import (Point, SegmentIntersection,
                                intersect_segments, pt)
from strandkit.scene import Curve, StringScene


def test_plus_sign_single_crossing(plus_sign):
    events = compute_arrangement(plus_sign)
    assert len(events) == 1
    e = events[0]
    assert e.id == "x:h:v:0"
    assert (e.curve_a, e.curve_b) == ("h", "v")
    assert e.location == pt(0, 0)
    assert e.index_in_a == 0 and e.index_in_b == 0
    g = intersection_graph(plus_sign, events)
    assert g.edge_list() == [("h", "v")]


def test_event_ids_ordered_along_smaller_curve():
    s = StringScene()
    s.curves["a"] = Curve("a", (pt(0, 0), pt(10, 0)))
    s.curves["b"] = Curve("b", (pt(2, -1), pt(2, 1), pt(4, 1), pt(4, -1)))
    s.validate()
    events = compute_arrangement(s)
    assert [e.id for e in events] == ["x:a:b:0", "x:a:b:1"]
    assert [e.location.x for e in events] == [Fraction(2), Fraction(4)]
    assert [e.index_in_a for e in events] == [0, 1]


def test_tangency_rejected():
    s = StringScene()
    s.curves["a"] = Curve("a", (pt(0, 0), pt(4, 0)))
    s.curves["b"] = Curve("b", (pt(2, 0), pt(2, 3)))
    s.validate()
    with pytest.raises(DegeneracyError):
        compute_arrangement(s)


def test_collinear_overlap_rejected():
    s = StringScene()
    s.curves["a"] = Curve("a", (pt(0, 0), pt(4, 0)))
    s.curves["b"] = Curve("b", (pt(2, 0), pt(6, 0)))
    s.validate()
    with pytest.raises(DegeneracyError):
        compute_arrangement(s)


def test_triple_point_rejected():
    s = StringScene()
    s.curves["a"] = Curve("a", (pt(-2, 0), pt(2, 0)))
    s.curves["b"] = Curve("b", (pt(0, -2), pt(0, 2)))
    s.curves["c"] = Curve("c", (pt(-2, -2), pt(2, 2)))
    s.validate()
    with pytest.raises(DegeneracyError):
        compute_arrangement(s)


def test_chirality_flips_with_direction():
    s = StringScene()
    s.curves["a"] = Curve("a", (pt(-1, 0), pt(1, 0)))
    s.curves["b"] = Curve("b", (pt(0, -1), pt(0, 1)))
    s.validate()
    up = compute_arrangement(s)[0].chirality
    s.curves["b"] = Curve("b", (pt(0, 1), pt(0, -1)))
    down = compute_arrangement(s)[0].chirality
    assert {up, down} == {1, -1}


def test_abstract_arrangement(abstract_multicross):
    events = compute_arrangement(abstract_multicross)
    assert len(events) == 9
    mine = events_on_curve(events, "m")
    assert [e.other("m") for e in mine] == \
        ["c4", "c5", "c1", "c4", "c2", "c4", "c5", "c1", "c2"]
    g = intersection_graph(abstract_multicross, events)
    assert g.degree("m") == 4


def test_events_on_curve_arc_order(bigon_scene):
    events = compute_arrangement(bigon_scene)
    mine = events_on_curve(events, "u")
    assert [e.other("u") for e in mine] == ["w1", "v", "v", "v", "v", "w2"]


def test_events_json_roundtrip_fields(plus_sign):
    events = compute_arrangement(plus_sign)
    data = events_to_json(events)
    assert data[0]["id"] == "x:h:v:0"
    assert data[0]["location"] == [[0, 1], [0, 1]]


def brute_force_pair_count(scene, a, b):
    """Oracle: count proper segment-pair crossings directly."""
    count = 0
    pa, pb = scene.curves[a].points, scene.curves[b].points
    for i in range(len(pa) - 1):
        for j in range(len(pb) - 1):
            res = intersect_segments(pa[i], pa[i + 1], pb[j], pb[j + 1])
            if res.kind == SegmentIntersection.PROPER:
                count += 1
    return count


def test_arrangement_matches_brute_force_oracle():
    from strandkit.families import gen_random
    for seed in range(5):
        scene = gen_random(8, 2, seed)
        events = compute_arrangement(scene)
        per = {}
        for e in events:
            per[(e.curve_a, e.curve_b)] = per.get((e.curve_a, e.curve_b), 0) + 1
        for a, b in combinations(scene.curve_ids(), 2):
            assert per.get((a, b), 0) == brute_force_pair_count(scene, a, b)


def test_deterministic_event_list(bigon_scene):
    one = events_to_json(compute_arrangement(bigon_scene))
    two = events_to_json(compute_arrangement(bigon_scene))
    assert one == two
