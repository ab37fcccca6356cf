"""Shared example objects used across the suite."""

from __future__ import annotations

import pytest

from morsemerge import DiscreteMorseFunction, MergeTree
from morsemerge.dmf import parse_dmf_text

L = MergeTree.leaf
J = MergeTree.join


def ex35_tree() -> MergeTree:
    """Nine-node tree: cherry grafted under the left child's right leaf."""
    return J(J(L(), J(L(), L())), J(L(), L()))


def muex_tree() -> MergeTree:
    """Four-leaf tree with two inner children under the root."""
    return J(J(L(), L()), J(L(), L()))


def appendix_tree() -> MergeTree:
    """The 15-leaf tree of the step-by-step worked example."""
    lrl = J(L(), J(J(L(), L()), L()))
    lrr = J(J(L(), J(L(), L())), L())
    lll = J(J(L(), J(L(), L())), L())
    llr = J(L(), J(L(), L()))
    return J(J(lll, llr), J(lrl, lrr))


# path states after each step of the appendix construction, read from the
# worked example (vertex,edge,... alternating), with their case tags
APPENDIX_STEPS = [
    ("L", (0, 2, 1)),
    ("LR", (0, 4, 2, 3, 1)),
    ("RL", (0, 6, 2, 4, 3, 5, 1)),
    ("LR", (0, 8, 2, 6, 4, 5, 3, 7, 1)),
    ("RL", (0, 10, 2, 8, 4, 6, 5, 7, 3, 9, 1)),
    ("RR", (0, 12, 3, 10, 5, 8, 6, 9, 4, 11, 2, 7, 1)),
    ("RL", (0, 14, 4, 12, 6, 10, 7, 11, 5, 13, 2, 8, 3, 9, 1)),
    ("LR", (0, 16, 5, 14, 7, 12, 8, 13, 6, 15, 2, 10, 4, 9, 3, 11, 1)),
    ("LL", (0, 10, 1, 18, 6, 16, 8, 14, 9, 15, 7, 17, 3, 12, 5, 11, 4, 13, 2)),
    ("LR", (0, 12, 2, 11, 1, 20, 7, 18, 9, 16, 10, 17, 8, 19, 4, 14, 6, 13, 5, 15, 3)),
    ("RR", (0, 14, 3, 13, 2, 12, 1, 22, 8, 20, 10, 18, 11, 19, 9, 21, 5, 16, 7, 15, 6, 17, 4)),
    ("LL", (0, 13, 1, 16, 4, 15, 3, 14, 2, 24, 9, 22, 11, 20, 12, 21, 10, 23, 6, 18, 8, 17, 7, 19, 5)),
    ("LL", (0, 14, 1, 15, 2, 18, 5, 17, 4, 16, 3, 26, 10, 24, 12, 22, 13, 23, 11, 25, 7, 20, 9, 19, 8, 21, 6)),
    ("LR", (0, 16, 2, 15, 1, 17, 3, 20, 6, 19, 5, 18, 4, 28, 11, 26, 13, 24, 14, 25, 12, 27, 8, 22, 10, 21, 9, 23, 7)),
]

# the ten-vertex tree dMf with critical edge values 5 < 6 < 9 < 11 < 14
TEN_VERTEX_TREE_DMF = """
v 0 13
v 1 10
v 2 12
v 3 8
v 4 7
v 5 3
v 6 4
v 7 2
v 8 0
v 9 1
e 0 1 14
e 1 2 12
e 1 3 11
e 3 4 9
e 4 5 7
e 5 6 5
e 6 8 6
e 7 8 2
e 8 9 1
"""

STAR_TREE_DMF = """
v 0 2
v 1 1
v 2 0
v 3 3
e 0 1 5
e 1 2 4
e 1 3 6
"""


@pytest.fixture
def ten_vertex_dmf() -> DiscreteMorseFunction:
    return parse_dmf_text(TEN_VERTEX_TREE_DMF)


@pytest.fixture
def star_dmf() -> DiscreteMorseFunction:
    return parse_dmf_text(STAR_TREE_DMF)


def on_path(labels) -> DiscreteMorseFunction:
    return DiscreteMorseFunction.on_path(labels)
