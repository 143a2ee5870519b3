import pytest

from strandkit.embedding import EmbeddedGraph, reverse
from strandkit.errors import InvariantError


def square_embedding() -> EmbeddedGraph:
    g = EmbeddedGraph()
    g.add_edge("e0", 0, 1)
    g.add_edge("e1", 1, 2)
    g.add_edge("e2", 2, 3)
    g.add_edge("e3", 3, 0)
    return g


def test_cycle_is_planar():
    g = square_embedding()
    g.check()
    assert g.euler_genus() == 0
    assert len(g.trace_faces()) == 2


def test_k4_planar_embedding():
    g = EmbeddedGraph()
    # planar rotation system of K4: 3 in the middle of triangle 0-1-2
    g.add_edge("a", 0, 1)
    g.add_edge("b", 1, 2)
    g.add_edge("c", 2, 0)
    g.add_edge("d", 0, 3)
    g.add_edge("e", 1, 3)
    g.add_edge("f", 2, 3)
    g.rotation[0] = [("a", 0), ("d", 0), ("c", 1)]
    g.rotation[1] = [("b", 0), ("e", 0), ("a", 1)]
    g.rotation[2] = [("c", 0), ("f", 0), ("b", 1)]
    g.rotation[3] = [("d", 1), ("e", 1), ("f", 1)]
    g.check()
    assert g.euler_genus() == 0
    assert len(g.trace_faces()) == 4


def test_k4_toroidal_embedding():
    g = EmbeddedGraph()
    g.add_edge("a", 0, 1)
    g.add_edge("b", 1, 2)
    g.add_edge("c", 2, 0)
    g.add_edge("d", 0, 3)
    g.add_edge("e", 1, 3)
    g.add_edge("f", 2, 3)
    # swap two darts at vertex 3: genus goes up
    g.rotation[0] = [("a", 0), ("d", 0), ("c", 1)]
    g.rotation[1] = [("b", 0), ("e", 0), ("a", 1)]
    g.rotation[2] = [("c", 0), ("f", 0), ("b", 1)]
    g.rotation[3] = [("e", 1), ("d", 1), ("f", 1)]
    g.check()
    assert g.euler_genus() == 2


def test_loop_on_sphere():
    g = EmbeddedGraph()
    g.add_edge("l", 0, 0)
    assert g.euler_genus() == 0
    assert len(g.trace_faces()) == 2


def test_one_signature_edge_gives_crosscap():
    g = square_embedding()
    g.signature["e1"] = -1
    assert g.euler_genus() == 1


def test_vertex_flip_preserves_surface():
    g = square_embedding()
    g.signature["e1"] = -1
    g.flip_vertex(2)
    # the twist moves to the other edge at vertex 2; the surface is unchanged
    assert g.signature["e1"] == 1 and g.signature["e2"] == -1
    assert g.euler_genus() == 1
    g.flip_vertex(3)
    g.flip_vertex(0)  # pushes the twist around the cycle and back
    assert g.euler_genus() == 1


def test_contract_edge_preserves_genus():
    for sig in (1, -1):
        g = square_embedding()
        g.signature["e1"] = sig
        before = g.euler_genus()
        g.contract_edge("e0")
        g.check()
        assert g.euler_genus() == before
        assert 0 in g.rotation and 1 not in g.rotation


def test_contract_loop_rejected():
    g = EmbeddedGraph()
    g.add_edge("l", 0, 0)
    with pytest.raises(InvariantError):
        g.contract_edge("l")


def test_oriented_faces_partition_darts():
    g = square_embedding()
    g.add_edge("diag", 0, 2)
    g.rotation[0] = [("e0", 0), ("diag", 0), ("e3", 1)]
    g.rotation[2] = [("e2", 0), ("diag", 1), ("e1", 1)]
    faces = g.trace_faces_oriented()
    darts = [d for f in faces for d in f]
    assert len(darts) == 2 * g.edge_count()
    assert len(set(darts)) == len(darts)
    assert len(faces) == 3  # square with a chord, planar


def test_oriented_tracing_requires_positive_signatures():
    g = square_embedding()
    g.signature["e2"] = -1
    with pytest.raises(InvariantError):
        g.trace_faces_oriented()


def test_add_chord_splits_face():
    g = square_embedding()
    faces = g.trace_faces_oriented()
    face = max(faces, key=len)
    g.add_chord(face, 0, 2, "chord")
    g.check()
    assert g.euler_genus() == 0
    assert len(g.trace_faces_oriented()) == 3


def test_reverse_dart():
    assert reverse(("e", 0)) == ("e", 1)
    assert reverse(("e", 1)) == ("e", 0)


def test_delete_vertex_and_edge():
    g = square_embedding()
    g.delete_edge("e0")
    assert g.edge_count() == 3
    g.delete_vertex(2)
    assert 2 not in g.rotation
    assert g.edge_count() == 1
