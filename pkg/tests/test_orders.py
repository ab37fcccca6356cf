from __future__ import annotations

import itertools
import random

import pytest

from morsemerge.complexes import OrientedPath
from morsemerge.mergetree import MergeTree, TreeError
from morsemerge.orders import (
    MorseLabeling,
    index_morse_order,
    is_morse_labeling,
    is_morse_order,
    labeling_from_order,
    order_from_labeling,
    order_isomorphism,
    simplex_order_less_literal,
    simplex_order_path,
    simplex_order_tree,
    sublevel_connected_morse_order,
)
from morsemerge.oracle import enumerate_merge_trees

from conftest import J, L, ex35_tree, muex_tree


def words(tree, nodes):
    return [tree.path_word(n) for n in nodes]


def test_index_order_chain_ex35():
    t = ex35_tree()
    io = index_morse_order(t)
    assert words(t, io.ascending) == [
        "LLL_", "LLRR", "LLRL", "LRR_", "LRL_", "LLR_", "LL__", "LR__", "L___",
    ]


def test_index_order_single_node():
    t = L()
    assert index_morse_order(t).ascending == (t.root,)


def test_index_labeling_figure_ex35():
    t = ex35_tree()
    lam = labeling_from_order(index_morse_order(t))
    by_word = {t.path_word(n): int(lam(n)) for n in t.nodes()}
    assert by_word == {
        "L___": 8, "LL__": 6, "LR__": 7, "LLL_": 0, "LLR_": 5,
        "LRL_": 4, "LRR_": 3, "LLRL": 2, "LLRR": 1,
    }


def test_sublevel_connected_chain_muex():
    t = muex_tree()
    sc = sublevel_connected_morse_order(t)
    lam = labeling_from_order(sc)
    by_word = {t.path_word(n): int(lam(n)) for n in t.nodes()}
    assert by_word == {
        "LLL": 0, "LLR": 1, "LL_": 2, "LRR": 3, "LRL": 4, "LR_": 5, "L__": 6,
    }


def test_sc_subtree_intervals_ex35():
    t = ex35_tree()
    sc = sublevel_connected_morse_order(t)
    rank = {n: i for i, n in enumerate(sc.ascending)}
    for p in t.nodes():
        ranks = sorted(rank[m] for m in t.subtree_nodes(p))
        assert ranks == list(range(ranks[0], ranks[-1] + 1))


def test_both_canonical_orders_are_morse_orders():
    for n in range(1, 6):
        for t in enumerate_merge_trees(n):
            assert is_morse_order(t, index_morse_order(t))
            assert is_morse_order(t, sublevel_connected_morse_order(t))


def test_orders_agree_per_class():
    for t in enumerate_merge_trees(5):
        io, sc = index_morse_order(t), sublevel_connected_morse_order(t)
        sel = lambda order, keep: [n for n in order.ascending if keep(n)]
        assert sel(io, t.is_leaf) == sel(sc, t.is_leaf)
        assert sel(io, lambda n: not t.is_leaf(n)) == sel(sc, lambda n: not t.is_leaf(n))


def test_counterexample_labeling_is_morse_but_not_index():
    # root 4; inner 3 with leaves 0, 2; right leaf 1
    t = J(J(L(), L()), L())
    by_word = {"L__": 4, "LL_": 3, "LLL": 0, "LLR": 2, "LR_": 1}
    labels = [by_word[t.path_word(n)] for n in t.nodes()]
    lam = MorseLabeling(t, tuple(labels))
    assert is_morse_labeling(t, lam)
    io = labeling_from_order(index_morse_order(t))
    assert [int(io(n)) for n in t.nodes()] != [int(lam(n)) for n in t.nodes()]


def test_chirality_violation_detected():
    t = J(L(), L())
    good = {t.root: 2, t.left[t.root]: 0, t.right[t.root]: 1}
    assert is_morse_labeling(t, MorseLabeling(t, tuple(good[n] for n in t.nodes())))
    # minimum on the right leaf while the root has chirality L
    swapped = {t.root: 2, t.left[t.root]: 1, t.right[t.root]: 0}
    assert not is_morse_labeling(t, MorseLabeling(t, tuple(swapped[n] for n in t.nodes())))


def test_labeling_order_roundtrips():
    for t in enumerate_merge_trees(5)[:7]:
        io = index_morse_order(t)
        assert order_from_labeling(labeling_from_order(io)).ascending == io.ascending


def test_iml_imo_roundtrip_on_arbitrary_morse_labelings():
    # exhaustive over all injective labelings of a 3-leaf tree
    t = J(J(L(), L()), L())
    count = 0
    for perm in itertools.permutations(range(5)):
        lam = MorseLabeling(t, tuple(perm))
        if is_morse_labeling(t, lam):
            count += 1
            back = labeling_from_order(order_from_labeling(lam))
            assert is_morse_labeling(t, back)
            ranks = sorted(range(5), key=lambda n: lam(n))
            assert order_from_labeling(back).ascending == tuple(ranks)
    assert count > 0


def test_simplex_order_reads_index_labels_ex35():
    t = ex35_tree()
    lam = labeling_from_order(index_morse_order(t))
    assert [int(lam(n)) for n in simplex_order_tree(t)] == [0, 6, 2, 5, 1, 8, 4, 7, 3]


def test_simplex_order_single_node():
    t = L()
    assert simplex_order_tree(t) == (t.root,)


def test_inorder_matches_literal_comparator():
    rng = random.Random(7)
    trees = []
    for n in range(1, 8):
        pool = enumerate_merge_trees(n)
        trees.extend(rng.sample(pool, min(4, len(pool))))
    for t in trees:
        seq = simplex_order_tree(t)
        for i, a in enumerate(seq):
            for b in seq[i + 1 :]:
                assert simplex_order_less_literal(t, a, b)
                assert not simplex_order_less_literal(t, b, a)


def test_subtree_runs_in_simplex_order():
    t = ex35_tree()
    seq = simplex_order_tree(t)
    pos = {n: i for i, n in enumerate(seq)}
    for p in t.nodes():
        ranks = sorted(pos[m] for m in t.subtree_nodes(p))
        assert ranks == list(range(ranks[0], ranks[-1] + 1))


def test_simplex_order_path():
    p = OrientedPath((0, 1))
    assert simplex_order_path(p) == ((0,), (0, 1), (1,))
    assert simplex_order_path(p.reversed()) == ((1,), (0, 1), (0,))
    assert len(simplex_order_path(OrientedPath((0, 1, 2, 3)))) == 7


def test_order_isomorphism_properties():
    t = ex35_tree()
    p = OrientedPath.of_length(t.n_inner())
    phi = order_isomorphism(p, t)
    seq = simplex_order_tree(t)
    assert [phi[s] for s in p.simplex_seq()] == list(seq)
    for s, n in phi.items():
        assert (len(s) == 1) == t.is_leaf(n)
    mirrored = order_isomorphism(p, t, mirrored=True)
    assert [mirrored[s] for s in p.simplex_seq()[::-1]] == list(seq)
    with pytest.raises(TreeError):
        order_isomorphism(OrientedPath((0, 1)), t)


def test_vertices_map_to_leaves_small_exhaustive():
    for n in range(1, 7):
        for t in enumerate_merge_trees(n):
            p = OrientedPath.of_length(t.n_inner())
            for s, node in order_isomorphism(p, t).items():
                assert (len(s) == 1) == t.is_leaf(node)
