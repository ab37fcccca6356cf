"""The merge tree induced by a discrete Morse function, with its labeling.

The construction walks the critical edge values from highest to lowest.
Each critical edge becomes an inner node; splitting its strict sublevel
component at that edge yields the two child components, labeled with their
maximal critical values.  By the elder rule, the side holding the smaller
minimum inherits the parent's chirality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import Simplex, _component_in
from .dmf import DiscreteMorseFunction, DmfError, validate
from .mergetree import LEFT, RIGHT, MergeTree, _Builder
from .orders import MorseLabeling, OrderError, is_morse_labeling


@dataclass(frozen=True)
class MlTree:
    """Morse labeled merge tree: the labeling induces a Morse order."""

    tree: MergeTree
    labeling: MorseLabeling

    def __post_init__(self):
        if not is_morse_labeling(self.tree, self.labeling):
            raise OrderError("labeling does not induce a Morse order")

    def label(self, node: int) -> Fraction:
        return self.labeling(node)

    def canonical(self) -> str:
        return self.tree.canonical(self.labeling.as_dict())

    def to_dot(self, name: str = "mltree") -> str:
        return self.tree.to_dot(self.labeling.as_dict(), name=name)


@lru_cache(maxsize=65536)
def induced_ml_tree(f: DiscreteMorseFunction) -> MlTree:
    """Construct the induced merge tree together with its canonical labeling.

    Matched simplices take part in the sublevel components but never label a
    node; leaves carry exactly the critical vertex values and inner nodes
    the critical edge values.  A dMf without critical edges induces a
    single-leaf tree.
    """
    crit = validate(f)
    if not crit.critical_edges:
        if len(crit.critical_vertices) != 1:
            raise DmfError("a dMf with no critical edge must have one critical vertex")
        tree = MergeTree.leaf()
        value = f(crit.critical_vertices[0])
        return MlTree(tree, MorseLabeling(tree, (value,)))

    builder = _Builder()
    labels: dict[int, Fraction] = {}
    crit_set = crit.critical
    edge_by_value = {f(e): e for e in crit.critical_edges}
    all_simplices = f.complex.simplices()

    def split_below(e: Simplex) -> list[tuple[Fraction, Fraction]]:
        """For both endpoints of e: (max critical value, min value) of the
        component of the endpoint strictly below f(e), lower-min side first."""
        below = frozenset(s for s in all_simplices if f(s) < f(e))
        sides = []
        for v in e:
            comp = _component_in(below, (v,))
            lam = max((f(s) for s in comp if s in crit_set))
            sides.append((lam, min(f(s) for s in comp)))
        if sides[0][1] == sides[1][1]:
            raise DmfError(f"components at edge {e} share their minimum")
        return sorted(sides, key=lambda t: t[1])

    def expand(e: Simplex, node: int):
        (lam_low, _), (lam_high, _) = split_below(e)
        # the lower-minimum side inherits the parent's chirality (elder rule)
        first = builder.add(node, builder.chirality[node])
        other = LEFT if builder.chirality[node] == RIGHT else RIGHT
        second = builder.add(node, other)
        if builder.chirality[node] == LEFT:
            builder.set_children(node, first, second)
        else:
            builder.set_children(node, second, first)
        labels[first], labels[second] = lam_low, lam_high
        for child, lam in ((first, lam_low), (second, lam_high)):
            if lam in edge_by_value:
                expand(edge_by_value[lam], child)

    top = crit.critical_edges[-1]
    root = builder.add(None, LEFT)
    labels[root] = f(top)
    expand(top, root)
    tree = builder.freeze(root)
    return MlTree(tree, MorseLabeling(tree, tuple(labels[n] for n in tree.nodes())))


def induced_merge_tree(f: DiscreteMorseFunction) -> MergeTree:
    """Forget the Morse label of the induced Ml tree."""
    return induced_ml_tree(f).tree
