import pytest

from strandkit.colouring import OrderedColouring
from strandkit.decomp import (Layering, TreeDecomposition, bfs_layering,
                              bounds, exact_treewidth,
                              exact_treewidth_decomposition, grounded_quotient,
                              ltw_pipeline, merge_layers, minor_lift,
                              outerstring_decomposition, product_lift,
                              radius_decomposition, td_to_pace, verify_layering,
                              verify_td)
from strandkit.errors import SceneError
from strandkit.graph import Graph, eccentricity


def grid_graph(rows, cols):
    g = Graph()
    for i in range(rows):
        for j in range(cols):
            if i + 1 < rows:
                g.add_edge((i, j), (i + 1, j))
            if j + 1 < cols:
                g.add_edge((i, j), (i, j + 1))
    return g


def wheel_graph(n):
    g = Graph()
    hub = n
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(i, hub)
    return g


def complete_graph(n):
    return Graph(vertices=range(n),
                 edges=[(i, j) for i in range(n) for j in range(i + 1, n)])


# ----------------------------------------------------------- exact treewidth

def test_exact_treewidth_known_values():
    assert exact_treewidth(Graph(vertices=[0])) == 0
    assert exact_treewidth(Graph(vertices=range(4),
                                 edges=[(0, 1), (1, 2), (2, 3)])) == 1
    cycle = Graph(vertices=range(6), edges=[(i, (i + 1) % 6) for i in range(6)])
    assert exact_treewidth(cycle) == 2
    assert exact_treewidth(complete_graph(5)) == 4
    assert exact_treewidth(grid_graph(3, 3)) == 3
    assert exact_treewidth(grid_graph(4, 4)) == 4


def test_exact_decomposition_is_valid():
    for g in (grid_graph(3, 4), wheel_graph(6), complete_graph(4)):
        width, td = exact_treewidth_decomposition(g)
        assert td.width == width
        assert verify_td(td, g)["valid"]


def test_exact_treewidth_disconnected():
    g = Graph(vertices=range(6), edges=[(0, 1), (1, 2), (0, 2), (3, 4)])
    width, td = exact_treewidth_decomposition(g)
    assert width == 2
    assert verify_td(td, g)["valid"]


def test_exact_treewidth_cutoff():
    big = Graph(vertices=range(17), edges=[(i, i + 1) for i in range(16)])
    with pytest.raises(SceneError):
        exact_treewidth(big)


# ------------------------------------------------------------ verifiers

def test_verify_td_detects_violations():
    g = Graph(vertices="abc", edges=[("a", "b"), ("b", "c")])
    good = TreeDecomposition([0, 1], [(0, 1)],
                             {0: frozenset("ab"), 1: frozenset("bc")})
    assert verify_td(good, g)["valid"]

    uncovered = TreeDecomposition([0], [], {0: frozenset("ab")})
    assert not verify_td(uncovered, g)["valid"]

    split = TreeDecomposition(
        [0, 1, 2], [(0, 1), (1, 2)],
        {0: frozenset("ab"), 1: frozenset("c"), 2: frozenset(("a", "b", "c"))})
    res = verify_td(split, g)
    assert not res["valid"]  # subtree of 'a'/'b' is disconnected

    cyclic = TreeDecomposition([0, 1], [(0, 1), (1, 0)],
                               {0: frozenset("ab"), 1: frozenset("bc")})
    assert not verify_td(cyclic, g)["valid"]


def test_bfs_layering_valid():
    g = grid_graph(3, 3)
    lay = bfs_layering(g, [(0, 0)])
    assert verify_layering(lay, g)["valid"]
    assert len(lay.layers) == 5


# ----------------------------------------------------- radius decomposition

def test_radius_decomposition_wheel():
    g = wheel_graph(8)
    td = radius_decomposition(g, 8)
    assert verify_td(td, g)["valid"]
    r = eccentricity(g, 8)
    assert td.width <= 3 * r + 1
    assert td.width >= exact_treewidth(g)


def test_radius_decomposition_grid():
    g = grid_graph(4, 4)
    root = (0, 0)
    td = radius_decomposition(g, root)
    assert verify_td(td, g)["valid"]
    assert td.width <= 3 * eccentricity(g, root) + 1
    assert td.width >= exact_treewidth(g)


def test_radius_decomposition_tree_and_cycle():
    tree = Graph(vertices=range(7),
                 edges=[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    td = radius_decomposition(tree, 0)
    assert verify_td(td, tree)["valid"]
    cycle = Graph(vertices=range(5), edges=[(i, (i + 1) % 5) for i in range(5)])
    td = radius_decomposition(cycle, 0)
    assert verify_td(td, cycle)["valid"]
    assert td.width <= 3 * 2 + 1


def test_radius_decomposition_rejects_nonplanar():
    with pytest.raises(SceneError):
        radius_decomposition(complete_graph(5), 0)


# --------------------------------------------------------------- lifts

def test_product_lift():
    g = Graph(vertices="ab", edges=[("a", "b")])
    td = TreeDecomposition([0], [], {0: frozenset("ab")})
    lifted = product_lift(td, 3)
    assert lifted.width == 2 * 3 - 1
    prod_bags = lifted.bags[0]
    assert ("a", 1) in prod_bags and ("b", 3) in prod_bags


def test_minor_lift_width_bound():
    from strandkit.product_model import MinorModel
    host = Graph(vertices="xy", edges=[("x", "y")])
    model = MinorModel({"a": frozenset({("x", 1)}),
                        "b": frozenset({("y", 1), ("y", 2)})}, host, 2)
    host_td = TreeDecomposition([0], [], {0: frozenset("xy")})
    prod_td = product_lift(host_td, 2)
    td = minor_lift(prod_td, model)
    G = Graph(vertices="ab", edges=[("a", "b")])
    assert verify_td(td, G)["valid"]


def test_merge_layers():
    g = grid_graph(2, 4)
    width, td = exact_treewidth_decomposition(g)
    lay = bfs_layering(g, [(0, 0)])
    rep = merge_layers(td, lay)
    assert rep["layered_width"] >= 1
    assert rep["width_bound"] >= width


# ------------------------------------------------------- pipelines

def test_grounded_quotient(outerstring_scene, outerstring_colouring):
    from strandkit.arrangement import compute_arrangement
    from strandkit.planarise import coloured_planarisation, planarise
    events = compute_arrangement(outerstring_scene)
    plan = planarise(outerstring_scene, events)
    cp = coloured_planarisation(plan, outerstring_colouring)
    q, centers = grounded_quotient(cp, outerstring_scene)
    assert centers == ["w:D"]
    assert eccentricity(q, "w:D") <= outerstring_colouring.t - 1


def test_outerstring_decomposition(outerstring_scene, outerstring_colouring):
    rep = outerstring_decomposition(outerstring_scene, outerstring_colouring)
    assert rep["valid"]
    assert rep["t"] == 2
    assert rep["width"] <= rep["bound"] == bounds(
        "planar-outerstring", {"t": rep["t"], "d": rep["d"]})
    g = Graph(vertices=["a", "b", "c"], edges=[("a", "b"), ("b", "c")])
    assert rep["width"] >= exact_treewidth(g) == 1


def test_outerstring_needs_one_disk(plus_sign, plus_colouring):
    with pytest.raises(SceneError):
        outerstring_decomposition(plus_sign, plus_colouring)


def test_ltw_pipeline(plus_sign, plus_colouring):
    rep = ltw_pipeline(plus_sign, plus_colouring)
    assert rep["layered_width"] <= rep["bound"]
    assert rep["genus"] == 0
    assert rep["td"].width >= 0


def test_ltw_pipeline_multicross(bigon_scene):
    from strandkit.arrangement import compute_arrangement, intersection_graph
    from strandkit.colouring import degeneracy_order, greedy_colouring
    events = compute_arrangement(bigon_scene)
    IG = intersection_graph(bigon_scene, events)
    g = Graph(vertices=IG.vertices, edges=IG.edge_list())
    col = greedy_colouring(g, degeneracy_order(g)[::-1])
    rep = ltw_pipeline(bigon_scene, col)
    assert rep["layered_width"] <= rep["bound"]


# ----------------------------------------------------------- bounds + PACE

def test_bounds_registry():
    assert bounds("planar-outerstring", {"t": 3, "d": 2}) == 23
    assert bounds("localised", {"delta": 2}) == 5
    assert bounds("ss-crossing", {"m": 3}) == 72
    assert bounds("weak-diameter", {"t": 2, "k": 1}) == 3
    assert bounds("planar-radius-tw", {"r": 4}) == 13
    assert bounds("product-tw", {"tw": 2, "n": 3}) == 8
    assert bounds("tw-from-ltw", {"r": 1, "c": 1, "ltw": 4}) == 11


def test_bounds_errors():
    with pytest.raises(SceneError):
        bounds("no-such-theorem", {})
    with pytest.raises(SceneError):
        bounds("planar-outerstring", {"t": 3})


def test_td_to_pace():
    g = Graph(vertices="abc", edges=[("a", "b"), ("b", "c")])
    td = TreeDecomposition([0, 1], [(0, 1)],
                           {0: frozenset("ab"), 1: frozenset("bc")})
    text = td_to_pace(td, g)
    lines = text.splitlines()
    assert lines[0] == "s td 2 2 3"
    assert lines[1] == "b 1 1 2"
    assert lines[2] == "b 2 2 3"
    assert lines[3] == "1 2"
    assert td_to_pace(td, g) == text  # byte-stable
