"""Morse orders, Morse labelings, and simplex orders.

A Morse order is a total order on merge-tree nodes that is root-maximal on
every subtree and whose subtree minimum always sits in the child subtree
matching the root's chirality.  The two canonical Morse orders (index and
sublevel-connected) both compare path words with a twisted
length-lexicographic rule: after a common prefix ending in L the L branch
ranks lower, after a common prefix ending in R the R branch does, and
ancestors always rank higher.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .complexes import OrientedPath, Simplex
from .mergetree import BLANK, LEFT, MergeTree, TreeError


class OrderError(ValueError):
    """An order or labeling that is not what an operation requires."""


@dataclass(frozen=True)
class MorseOrder:
    """Total order on the nodes of a merge tree, listed ascending."""

    tree: MergeTree
    ascending: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ascending) != list(self.tree.nodes()):
            raise OrderError("ascending list must be a permutation of the nodes")

    def rank(self, node: int) -> int:
        return self.ascending.index(node)

    def serialize(self) -> str:
        return " ".join(self.tree.path_word(n) for n in self.ascending) + "\n"


@dataclass(frozen=True)
class MorseLabeling:
    """Injective rational labeling of merge-tree nodes, indexed by node id."""

    tree: MergeTree
    labels: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(Fraction(x) for x in self.labels))
        if len(self.labels) != len(self.tree):
            raise OrderError("one label per node required")
        if len(set(self.labels)) != len(self.labels):
            raise OrderError("labeling must be injective")

    def __call__(self, node: int) -> Fraction:
        return self.labels[node]

    def as_dict(self) -> dict[int, Fraction]:
        return dict(enumerate(self.labels))


def _twisted_less(word_a: str, word_b: str) -> bool:
    """Strict path-word comparison shared by both canonical Morse orders."""
    if word_a == word_b:
        return False
    k = 0
    while k + 1 < len(word_a) and word_a[k + 1] == word_b[k + 1]:
        k += 1
    nxt_a, nxt_b = word_a[k + 1], word_b[k + 1]
    if nxt_b == BLANK:
        return True  # b is an ancestor of a
    if nxt_a == BLANK:
        return False
    return nxt_a == word_a[k]  # continuing the common chirality ranks lower


def index_morse_order(tree: MergeTree) -> MorseOrder:
    """Leaves below inner nodes; within each class the twisted word order."""
    words = {n: tree.path_word(n) for n in tree.nodes()}

    def less(a: int, b: int) -> bool:
        if tree.is_leaf(a) != tree.is_leaf(b):
            return tree.is_leaf(a)
        return _twisted_less(words[a], words[b])

    key = functools.cmp_to_key(lambda a, b: -1 if less(a, b) else (1 if less(b, a) else 0))
    return MorseOrder(tree, tuple(sorted(tree.nodes(), key=key)))


def sublevel_connected_morse_order(tree: MergeTree) -> MorseOrder:
    """The twisted word order with no leaf/inner split; subtrees form intervals."""
    words = {n: tree.path_word(n) for n in tree.nodes()}
    key = functools.cmp_to_key(
        lambda a, b: -1 if _twisted_less(words[a], words[b])
        else (1 if _twisted_less(words[b], words[a]) else 0)
    )
    return MorseOrder(tree, tuple(sorted(tree.nodes(), key=key)))


def is_morse_order(tree: MergeTree, order: MorseOrder) -> bool:
    """Check root-maximality and chirality-compatibility on every subtree."""
    if order.tree is not tree and order.tree != tree:
        return False
    rank = {n: i for i, n in enumerate(order.ascending)}
    for p in tree.nodes():
        nodes = tree.subtree_nodes(p)
        if max(nodes, key=rank.get) != p:
            return False
        if not tree.is_leaf(p):
            lo = min(nodes, key=rank.get)
            side = tree.left[p] if tree.chirality[p] == LEFT else tree.right[p]
            if lo not in tree.subtree_nodes(side):
                return False
    return True


def is_morse_labeling(tree: MergeTree, labeling: MorseLabeling) -> bool:
    return is_morse_order(tree, order_from_labeling(labeling))


def labeling_from_order(order: MorseOrder) -> MorseLabeling:
    """iMl: the unique order isomorphism onto {0, ..., i(T)+l(T)-1}."""
    labels = [Fraction(0)] * len(order.tree)
    for i, n in enumerate(order.ascending):
        labels[n] = Fraction(i)
    return MorseLabeling(order.tree, tuple(labels))


def order_from_labeling(labeling: MorseLabeling) -> MorseOrder:
    """iMo: rank nodes by their labels."""
    return MorseOrder(
        labeling.tree, tuple(sorted(labeling.tree.nodes(), key=labeling))
    )


def simplex_order_tree(tree: MergeTree) -> tuple[int, ...]:
    """The simplex order on V(T), ascending.

    Materialized as the in-order traversal (left subtree, node, right
    subtree), which the tests cross-validate against the literal
    youngest-common-ancestor comparator.
    """
    return tuple(tree.in_order())


def simplex_order_less_literal(tree: MergeTree, a: int, b: int) -> bool:
    """Literal four-case definition of the simplex order (strictly less)."""
    if a == b:
        return False
    p = tree.youngest_common_ancestor(a, b)
    if a == p:
        return b in tree.subtree_nodes(tree.right[p])
    if b == p:
        return a in tree.subtree_nodes(tree.left[p])
    return a in tree.subtree_nodes(tree.left[p])


def simplex_order_path(path: OrientedPath) -> tuple[Simplex, ...]:
    """v0 < e01 < v1 < ... left to right along the orientation."""
    return path.simplex_seq()


def order_isomorphism(
    path: OrientedPath, tree: MergeTree, mirrored: bool = False
) -> dict[Simplex, int]:
    """The unique order isomorphism phi: simplices of P -> nodes of T.

    Requires the path to have i(T) edges.  `mirrored` uses the reversed
    orientation of the path instead.
    """
    simplices = simplex_order_path(path)
    if mirrored:
        simplices = simplices[::-1]
    nodes = simplex_order_tree(tree)
    if len(simplices) != len(nodes):
        raise TreeError(
            f"path with {len(simplices)} simplices cannot match a tree "
            f"with {len(nodes)} nodes"
        )
    return dict(zip(simplices, nodes))
