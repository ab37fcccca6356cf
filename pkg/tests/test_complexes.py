from __future__ import annotations

import pytest

from morsemerge.complexes import (
    ComplexError,
    OrientedPath,
    SimplicialTree,
    Subcomplex,
    connected_component,
    format_tree_file,
    full_subcomplex,
    parse_tree_file,
)
from morsemerge.dmf import strict_sublevel_complex, sublevel_complex

from conftest import on_path


def path3():
    return OrientedPath((0, 1, 2))


def test_tree_invariants():
    with pytest.raises(ComplexError):
        SimplicialTree(frozenset(), frozenset())
    with pytest.raises(ComplexError):
        SimplicialTree(frozenset({0, 1}), frozenset())  # disconnected
    with pytest.raises(ComplexError):
        SimplicialTree(frozenset({0, 1, 2}), frozenset({(0, 1), (1, 2), (0, 2)}))
    t = SimplicialTree.from_edges([(0, 1), (1, 2)])
    assert t.degree(1) == 2 and t.degree(0) == 1


def test_component_of_connected_path_is_everything():
    comp = connected_component(path3(), (0,))
    assert comp.simplices == frozenset(path3().simplex_seq())


def test_component_with_middle_edge_removed():
    universe = frozenset(path3().simplex_seq()) - {(0, 1)}
    sub = Subcomplex(path3(), universe)
    comp = connected_component(sub, (2,))
    assert comp.simplices == {(2,), (1, 2), (1,)}


def test_component_of_isolated_vertex_in_star():
    star = SimplicialTree.from_edges([(0, 1), (0, 2), (0, 3)])
    vertices_only = Subcomplex(star, frozenset({(0,), (1,), (2,), (3,)}))
    assert connected_component(vertices_only, (1,)).simplices == {(1,)}


def test_component_requires_membership():
    with pytest.raises(ComplexError):
        connected_component(path3(), (7,))


def test_sublevel_examples():
    f = on_path([0, 4, 1, 5, 2, 6, 3])
    below5 = strict_sublevel_complex(f, 5)
    comps = [frozenset(f(s) for s in c.simplices) for c in below5.components()]
    assert sorted(comps, key=min) == [frozenset({0, 4, 1}), frozenset({2}), frozenset({3})]
    assert sublevel_complex(f, -1).simplices == frozenset()
    assert sublevel_complex(f, 6).simplices == frozenset(f.complex.simplex_seq())


def test_sublevels_nested_and_face_closed():
    f = on_path([1, 3, 0, 5, 2, 6, 4])
    prev = frozenset()
    for a in range(-1, 8):
        sub = sublevel_complex(f, a)
        assert prev <= sub.simplices
        prev = sub.simplices  # Subcomplex construction enforces face closure


def test_subcomplex_rejects_missing_faces():
    with pytest.raises(ComplexError):
        Subcomplex(path3(), frozenset({(0, 1)}))


def test_oriented_path_basics():
    p = OrientedPath((4, 7, 5))
    assert p.simplex_seq() == ((4,), (4, 7), (7,), (5, 7), (5,))
    assert p.reversed().vertex_seq == (5, 7, 4)
    assert p.as_tree().edges == {(4, 7), (5, 7)}
    with pytest.raises(ComplexError):
        OrientedPath((1, 1))


def test_tree_file_roundtrip():
    t = SimplicialTree.from_edges([(0, 1), (1, 2), (1, 3)])
    assert parse_tree_file(format_tree_file(t)) == t
    with pytest.raises(ComplexError):
        parse_tree_file("v x\n")


def test_full_subcomplex_components():
    assert len(full_subcomplex(path3()).components()) == 1
