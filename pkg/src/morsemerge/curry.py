"""Orientation-sensitive merge trees and the piecewise-linear bridge.

A Curry Morse labeled tree takes its chirality from the path orientation
instead of the elder rule, so it distinguishes symmetry-equivalent dMfs;
quotienting by subtree reflections recovers the elder-rule Ml tree.  The
same section of the theory identifies all-critical dMfs on oriented paths
with distinct-valued piecewise-linear functions on [0,1] whose boundary
values are local minima.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import OrientedPath, Simplex, _component_in, format_value, parse_value
from .dmf import DiscreteMorseFunction, DmfError, validate
from .equiv import UnsupportedRegime
from .induce import MlTree, induced_ml_tree
from .mergetree import LEFT, RIGHT, MergeTree, _Builder
from .orders import MorseLabeling
from .realize import induced_dmf


@dataclass(frozen=True)
class CMlTree:
    """Merge tree with a labeling that is root-maximal on every subtree.

    Unlike an Ml tree, no chirality compatibility is required of the
    labeling; the chirality records which component was left on the path.
    """

    tree: MergeTree
    labeling: MorseLabeling

    def __post_init__(self):
        for p in self.tree.inner_nodes():
            top = max(self.tree.subtree_nodes(p), key=self.labeling)
            if top != p:
                raise DmfError("labeling is not root-maximal on every subtree")

    def label(self, node: int) -> Fraction:
        return self.labeling(node)

    def canonical(self) -> str:
        return self.tree.canonical(self.labeling.as_dict())

    def to_dot(self, name: str = "cmltree") -> str:
        return self.tree.to_dot(self.labeling.as_dict(), name=name)


@lru_cache(maxsize=65536)
def induced_cml_tree(f: DiscreteMorseFunction) -> CMlTree:
    """Like the induced Ml tree, but the left component gets chirality L."""
    if not isinstance(f.complex, OrientedPath):
        raise UnsupportedRegime("CMl trees are induced from dMfs on oriented paths")
    crit = validate(f)
    if not crit.all_critical:
        raise UnsupportedRegime("CMl trees are induced from all-critical dMfs")
    if not crit.critical_edges:
        tree = MergeTree.leaf()
        return CMlTree(tree, MorseLabeling(tree, (f(crit.critical_vertices[0]),)))

    position = {s: i for i, s in enumerate(f.complex.simplex_seq())}
    edge_by_value = {f(e): e for e in crit.critical_edges}
    all_simplices = f.complex.simplices()
    builder = _Builder()
    labels: dict[int, Fraction] = {}

    def expand(e: Simplex, node: int):
        below = frozenset(s for s in all_simplices if f(s) < f(e))
        sides = []
        for v in e:
            comp = _component_in(below, (v,))
            lam = max(f(s) for s in comp if s in crit.critical)
            sides.append((min(position[s] for s in comp), lam))
        sides.sort()  # left component first, by position
        left_child = builder.add(node, LEFT)
        right_child = builder.add(node, RIGHT)
        builder.set_children(node, left_child, right_child)
        for child, (_, lam) in zip((left_child, right_child), sides):
            labels[child] = lam
            if lam in edge_by_value:
                expand(edge_by_value[lam], child)

    top = crit.critical_edges[-1]
    root = builder.add(None, LEFT)
    labels[root] = f(top)
    expand(top, root)
    tree = builder.freeze(root)
    return CMlTree(tree, MorseLabeling(tree, tuple(labels[n] for n in tree.nodes())))


def reflect_subtree(t: CMlTree, node: int) -> CMlTree:
    """Mirror the whole subtree below a node (labels unchanged).

    This is the tree shadow of reflecting the corresponding path segment, so
    left/right swaps propagate through every descendant.
    """
    mirrored = t.tree.mirrored(node)
    # mirrored() renumbers nodes; labels follow the structural walk
    relabeled = _transport_labels(t, mirrored, node)
    return CMlTree(mirrored, MorseLabeling(mirrored, relabeled))


def _transport_labels(src: CMlTree, dst: MergeTree, pivot: int) -> tuple[Fraction, ...]:
    out: dict[int, Fraction] = {}

    def walk(a: int, b: int, flip: bool):
        out[b] = src.label(a)
        if not src.tree.is_leaf(a):
            la, ra = src.tree.children(a)
            child_flip = flip or a == pivot
            if child_flip:
                la, ra = ra, la
            walk(la, dst.left[b], child_flip)
            walk(ra, dst.right[b], child_flip)

    walk(src.tree.root, dst.root, False)
    return tuple(out[n] for n in dst.nodes())


def js_quotient(t: CMlTree) -> MlTree:
    """Canonicalize chirality by the elder rule.

    Top-down, the child subtree holding the smaller minimum must sit on the
    side named by its parent's chirality; offending nodes have their
    children swapped.  The result is the Ml tree of any dMf inducing t.
    """
    builder = _Builder()
    labels: dict[int, Fraction] = {}

    def mins(n: int) -> Fraction:
        return min(t.label(m) for m in t.tree.subtree_nodes(n))

    def build(src: int, parent, chir) -> int:
        new = builder.add(parent, chir)
        labels[new] = t.label(src)
        if not t.tree.is_leaf(src):
            l, r = t.tree.children(src)
            min_left = mins(l) < mins(r)
            keep = min_left if chir == LEFT else not min_left
            if not keep:
                l, r = r, l
            builder.set_children(new, build(l, new, LEFT), build(r, new, RIGHT))
        return new

    root = build(t.tree.root, None, LEFT)
    tree = builder.freeze(root)
    return MlTree(tree, MorseLabeling(tree, tuple(labels[n] for n in tree.nodes())))


def o_js(
    f: DiscreteMorseFunction,
) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """The symmetry-equivalence representative compatible with chirality.

    Realizes the induced Ml tree with its own labels, so the result's CMl
    tree coincides with its Ml tree.
    """
    ml = induced_ml_tree(f)
    return induced_dmf(ml.tree, ml.labeling)


@dataclass(frozen=True)
class PLFunction:
    """Distinct-valued piecewise-linear function on [0,1] by breakpoints.

    Breakpoints sit on the uniform grid 0, 1/2k, ..., 1; values alternate
    local minimum / local maximum, and both boundary values are minima.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = tuple((Fraction(p), Fraction(v)) for p, v in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        n = len(pts)
        if n % 2 == 0 or n < 1:
            raise DmfError("a PL function needs an odd number of breakpoints")
        k = n // 2
        expected = [Fraction(i, 2 * k) if k else Fraction(0) for i in range(n)]
        if [p for p, _ in pts] != expected:
            raise DmfError("breakpoint positions must be the uniform grid 0, 1/2k, ..., 1")
        values = [v for _, v in pts]
        if len(set(values)) != len(values):
            raise DmfError("breakpoint values must be distinct")
        for i in range(1, n, 2):  # odd positions are the local maxima
            if not (values[i] > values[i - 1] and values[i] > values[i + 1]):
                raise DmfError("values must alternate minima and maxima")

    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for _, v in self.breakpoints)


def dmf_to_pl(f: DiscreteMorseFunction) -> PLFunction:
    """Put f(n_i) at i/k and f(e_i) at (2i-1)/2k along [0,1]."""
    if not isinstance(f.complex, OrientedPath):
        raise UnsupportedRegime("only dMfs on oriented paths convert to PL functions")
    if not validate(f).all_critical:
        raise UnsupportedRegime("only all-critical dMfs convert to PL functions")
    labels = f.path_labels()
    k = len(labels) // 2
    grid = [Fraction(i, 2 * k) if k else Fraction(0) for i in range(len(labels))]
    return PLFunction(tuple(zip(grid, labels)))


def pl_to_dmf(pl: PLFunction) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """Read local minima as vertex values and local maxima as edge values."""
    f = DiscreteMorseFunction.on_path(pl.values())
    return f.complex, f


def parse_pl_file(text: str) -> PLFunction:
    """Parse the PL file format: one `<pos_num>/<pos_den> <value>` per line."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DmfError(f"line {lineno}: expected `<position> <value>`")
        pts.append((parse_value(parts[0]), parse_value(parts[1])))
    return PLFunction(tuple(pts))


def format_pl_file(pl: PLFunction) -> str:
    lines = []
    for p, v in pl.breakpoints:
        pos = f"{p.numerator}/{p.denominator}"
        lines.append(f"{pos} {format_value(v)}")
    return "\n".join(lines) + "\n"
