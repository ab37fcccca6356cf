from __future__ import annotations

import pytest

from morsemerge.mergetree import (
    MergeTree,
    TreeError,
    isomorphic,
    parse_merge_tree,
)

from conftest import J, L, ex35_tree


def test_path_words_ex35():
    t = ex35_tree()
    words = {t.path_word(n) for n in t.nodes()}
    assert words == {
        "L___", "LL__", "LR__", "LLL_", "LLR_", "LRL_", "LRR_", "LLRL", "LLRR",
    }
    assert t.path_word(t.root) == "L___"


def test_path_word_root_of_cherry():
    t = J(L(), L())
    assert t.path_word(t.root) == "L_"
    assert t.path_word(t.right[t.root]) == "LR"


def test_path_word_injective_and_prefix_matches_ancestry():
    t = ex35_tree()
    words = {n: t.path_word(n).rstrip("_") for n in t.nodes()}
    assert len(set(words.values())) == len(t)
    for n in t.nodes():
        for a in t.ancestors(n):
            assert words[n].startswith(words[a])


def test_youngest_common_ancestor():
    t = ex35_tree()
    a = t.node_by_path_word("LLRL")
    b = t.node_by_path_word("LRR_")
    assert t.youngest_common_ancestor(a, b) == t.root
    assert t.youngest_common_ancestor(a, a) == a
    ll = t.node_by_path_word("LL__")
    assert t.youngest_common_ancestor(ll, a) == ll


def test_descendants_and_subtree():
    t = ex35_tree()
    ll = t.node_by_path_word("LL__")
    words = {t.path_word(d) for d in t.descendants(ll)}
    assert words == {"LLL_", "LLR_", "LLRL", "LLRR"}
    sub = t.subtree(ll)
    assert sub.n_leaves() == 3 and sub.depth() == 2
    leaf = t.node_by_path_word("LLL_")
    assert len(t.subtree(leaf)) == 1
    assert isomorphic(t.subtree(t.root), t)


def test_isomorphic_is_chirality_sensitive():
    t = ex35_tree()
    assert isomorphic(t, t)
    cherry_left = J(J(L(), L()), L())
    cherry_right = J(L(), J(L(), L()))
    assert not isomorphic(cherry_left, cherry_right)


def test_three_leaf_trees_fall_in_two_classes():
    shapes = {t.canonical() for t in (J(J(L(), L()), L()), J(L(), J(L(), L())))}
    assert len(shapes) == 2


def test_full_binary_leaf_count():
    t = ex35_tree()
    assert t.n_leaves() == t.n_inner() + 1


def test_mirrored_is_involution():
    t = ex35_tree()
    assert isomorphic(t.mirrored().mirrored(), t)
    assert not isomorphic(t.mirrored(), t)


def test_canonical_serialization_stable_under_arena_relabeling():
    a = J(J(L(), L()), L())
    b = J(J(L(), L()), L())
    assert a.canonical() == b.canonical() == "((*,*),*)"


def test_parse_unlabeled_and_labeled():
    t, labels = parse_merge_tree("((*,*),*)")
    assert labels is None and t.n_leaves() == 3
    t2, labels2 = parse_merge_tree("((0,(2,1):5):6,(4,3):7):8")
    assert labels2 is not None
    assert t2.canonical(labels2) == "((0,(2,1):5):6,(4,3):7):8"


def test_parse_tolerates_redundant_parens():
    t, labels = parse_merge_tree("(((0,(2,1):5):6),((4,3):7)):8")
    assert t.canonical(labels) == "((0,(2,1):5):6,(4,3):7):8"
    t2, labels2 = parse_merge_tree("((0,(2,1):5)):6")
    assert t2.canonical(labels2) == "(0,(2,1):5):6"


def test_parse_rejects_partial_labels_and_garbage():
    with pytest.raises(TreeError):
        parse_merge_tree("(*,1)")
    with pytest.raises(TreeError):
        parse_merge_tree("((*,*)")
    with pytest.raises(TreeError):
        parse_merge_tree("(*,*) trailing")


def test_tree_validation_rejects_orphans():
    with pytest.raises(TreeError):
        MergeTree((None, 0), (None, None), (None, None), ("L", "L"))


def test_dot_export_children_above_parents():
    dot = ex35_tree().to_dot()
    assert "rankdir=BT" in dot
    assert dot.count("->") == 8
    assert 'label="L"' in dot and 'label="R"' in dot
