"""Equivalence relations on discrete Morse functions and labeled trees.

Shuffle equivalence compares the induced orders on critical vertices and
critical edges separately.  Symmetry equivalence is generated by reflections
of sublevel components; component-merge (cm) equivalence additionally allows
a merging edge to reattach between the same components, which extends the
theory from paths to arbitrary trees.  For all-critical dMfs both symmetry
and cm equivalence are decided through the induced Ml tree; the
generator-orbit search is kept as a desk-scale oracle and witness finder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import OrientedPath, Simplex, format_value
from .dmf import DiscreteMorseFunction, validate
from .induce import MlTree, induced_ml_tree
from .mergetree import MergeTree
from .orders import MorseOrder


class UnsupportedRegime(ValueError):
    """Input outside the decision procedure's regime (e.g. matched cells)."""


@dataclass(frozen=True)
class EquivalenceWitness:
    """Replayable evidence for an equivalence; one move per step line."""

    kind: str  # shuffle | symmetry | cm
    steps: tuple[str, ...] = ()
    simplex_map: tuple[tuple[Simplex, Simplex], ...] = ()
    value_map: tuple[tuple[Fraction, Fraction], ...] = ()

    def format(self) -> str:
        lines = [f"witness kind: {self.kind}"]
        lines += [f"  step: {s}" for s in self.steps]
        if self.simplex_map:
            pairs = ", ".join(f"{a}->{b}" for a, b in self.simplex_map)
            lines.append(f"  simplex map: {pairs}")
        if self.value_map:
            pairs = ", ".join(
                f"{format_value(a)}->{format_value(b)}" for a, b in self.value_map
            )
            lines.append(f"  value map: {pairs}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SublevelAutomorphism:
    """Reflection of one connected sublevel component of a path dMf.

    `span` is the inclusive range of simplex positions (left-to-right) that
    the reflection reverses; everything else stays fixed.
    """

    level: Fraction
    span: tuple[int, int]

    def apply_labels(self, labels: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        a, b = self.span
        return labels[:a] + labels[a : b + 1][::-1] + labels[b + 1 :]

    def describe(self) -> str:
        return (
            f"reflect the level-{format_value(self.level)} component "
            f"(simplex positions {self.span[0]}..{self.span[1]})"
        )


def _require_all_critical_path(f: DiscreteMorseFunction, what: str):
    if not isinstance(f.complex, OrientedPath):
        raise UnsupportedRegime(f"{what} is decided for dMfs on paths only")
    if not validate(f).all_critical:
        raise UnsupportedRegime(f"{what} is decided for all-critical dMfs only")


def path_reflection_generators(f: DiscreteMorseFunction) -> list[SublevelAutomorphism]:
    """All non-trivial component reflections of all critical sublevels."""
    labels = f.path_labels()
    crit = validate(f)
    gens = []
    seen = set()
    for c in crit.critical_values:
        start = None
        for pos in range(len(labels) + 1):
            inside = pos < len(labels) and labels[pos] <= c
            if inside and start is None:
                start = pos
            if not inside and start is not None:
                if pos - start >= 2 and (start, pos - 1) not in seen:
                    seen.add((start, pos - 1))
                    gens.append(SublevelAutomorphism(c, (start, pos - 1)))
                start = None
    return gens


def sublevel_orbit(
    f: DiscreteMorseFunction, max_vertices: int = 12
) -> frozenset[DiscreteMorseFunction]:
    """Closure of {f} under all sublevel-component reflections.

    Every member is validated, exercising that the reflections act on the
    set of dMfs.  Exponential in general, hence the size guard.
    """
    _require_all_critical_path(f, "the sublevel orbit")
    if len(f.complex.vertex_seq) > max_vertices:
        raise UnsupportedRegime(
            f"orbit search is desk-scale only (> {max_vertices} vertices)"
        )
    start = f.path_labels()
    seen = {start}
    frontier = [start]
    while frontier:
        labels = frontier.pop()
        h = DiscreteMorseFunction.on_path(labels)
        validate(h)
        for gen in path_reflection_generators(h):
            nxt = gen.apply_labels(labels)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(DiscreteMorseFunction.on_path(labels) for labels in seen)


def _reflection_path(
    f: DiscreteMorseFunction, targets: set[tuple[Fraction, ...]]
) -> list[SublevelAutomorphism] | None:
    """BFS for a generator sequence carrying f onto one of the label rows."""
    start = f.path_labels()
    parent: dict[tuple, tuple | None] = {start: None}
    move: dict[tuple, SublevelAutomorphism] = {}
    queue = [start]
    while queue:
        labels = queue.pop(0)
        if labels in targets:
            seq = []
            while parent[labels] is not None:
                seq.append(move[labels])
                labels = parent[labels]
            return seq[::-1]
        for gen in path_reflection_generators(DiscreteMorseFunction.on_path(labels)):
            nxt = gen.apply_labels(labels)
            if nxt not in parent:
                parent[nxt] = labels
                move[nxt] = gen
                queue.append(nxt)
    return None


def shuffle_equivalent(
    f: DiscreteMorseFunction, g: DiscreteMorseFunction
) -> tuple[bool, EquivalenceWitness | None]:
    """Same critical cells and the same induced orders per dimension.

    On the same complex the identity is the only map tried; between two
    distinct paths the forward and reversed orientation bijections are
    searched.
    """
    if f.complex == g.complex:
        return _shuffle_same_complex(f, g, ())
    if isinstance(f.complex, OrientedPath) and isinstance(g.complex, OrientedPath):
        if len(f.complex.vertex_seq) != len(g.complex.vertex_seq):
            return False, None
        for mirrored in (False, True):
            g_seq = g.path_labels()
            if mirrored:
                g_seq = g_seq[::-1]
            transported = DiscreteMorseFunction.on_path(g_seq)
            f_norm = DiscreteMorseFunction.on_path(f.path_labels())
            ok, witness = _shuffle_same_complex(
                f_norm, transported, ("orientation: reversed" if mirrored else "orientation: forward",)
            )
            if ok:
                return True, witness
        return False, None
    return False, None


def _shuffle_same_complex(f, g, notes) -> tuple[bool, EquivalenceWitness | None]:
    cf, cg = validate(f), validate(g)
    if cf.critical != cg.critical:
        return False, None
    if cf.critical_vertices != cg.critical_vertices:
        return False, None
    if cf.critical_edges != cg.critical_edges:
        return False, None
    value_map = tuple(
        (f(s), g(s)) for s in cf.critical_vertices + cf.critical_edges
    )
    witness = EquivalenceWitness(
        kind="shuffle",
        steps=notes,
        simplex_map=tuple((s, s) for s in sorted(cf.critical)),
        value_map=value_map,
    )
    return True, witness


def symmetry_equivalent(
    f: DiscreteMorseFunction,
    g: DiscreteMorseFunction,
    want_witness: bool = False,
) -> tuple[bool, EquivalenceWitness | None]:
    """Decide symmetry equivalence of all-critical dMfs on paths.

    Decision: equal critical values and isomorphic induced Ml trees.  The
    witness, when requested, is an explicit reflection sequence found by
    orbit search.
    """
    _require_all_critical_path(f, "symmetry equivalence")
    _require_all_critical_path(g, "symmetry equivalence")
    if validate(f).critical_values != validate(g).critical_values:
        return False, None
    if induced_ml_tree(f).canonical() != induced_ml_tree(g).canonical():
        return False, None
    if not want_witness:
        return True, None
    g_seq = g.path_labels()
    moves = _reflection_path(f, {g_seq, g_seq[::-1]})
    steps = tuple(m.describe() for m in moves) if moves is not None else ()
    return True, EquivalenceWitness(kind="symmetry", steps=steps)


def cm_equivalent(
    f: DiscreteMorseFunction,
    g: DiscreteMorseFunction,
    want_witness: bool = False,
) -> tuple[bool, EquivalenceWitness | None]:
    """Decide component-merge equivalence of all-critical dMfs on trees."""
    for h in (f, g):
        if not validate(h).all_critical:
            raise UnsupportedRegime("cm equivalence is decided for all-critical dMfs")
    if validate(f).critical_values != validate(g).critical_values:
        return False, None
    if induced_ml_tree(f).canonical() != induced_ml_tree(g).canonical():
        return False, None
    if not want_witness:
        return True, None
    pf, ff, steps_f = _cm_to_path_with_log(f)
    pg, fg, steps_g = _cm_to_path_with_log(g)
    moves = _reflection_path(ff, {fg.path_labels(), fg.path_labels()[::-1]})
    steps = tuple(f"on the first input: {s}" for s in steps_f)
    steps += tuple(f"on the second input: {s}" for s in steps_g)
    if moves is not None:
        steps += tuple(f"between the straightened paths: {m.describe()}" for m in moves)
    return True, EquivalenceWitness(kind="cm", steps=steps)


def cm_to_path(
    f: DiscreteMorseFunction,
) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """A dMf on a path, cm-equivalent to the input, with identical values.

    Merging edges are processed from the lowest level upwards; whenever an
    edge meets a component at an interior vertex it is reattached to an end
    of that component, which is a cm move of that level.  A path input is
    returned unchanged.
    """
    path, g, _ = _cm_to_path_with_log(f)
    return path, g


def _cm_to_path_with_log(f: DiscreteMorseFunction):
    crit = validate(f)
    if not crit.all_critical:
        raise UnsupportedRegime("cm straightening needs an all-critical dMf")
    if isinstance(f.complex, OrientedPath):
        return f.complex, f, []
    # each component is a left-to-right list of values; vertices start alone
    segment_of: dict[Simplex, list] = {}
    for v in crit.critical_vertices:
        segment_of[v] = [f(v)]
    steps: list[str] = []
    for e in crit.critical_edges:
        u, w = (e[0],), (e[1],)
        seg_u, seg_w = segment_of[u], segment_of[w]
        # elder convention: the component with the smaller minimum goes left
        if min(seg_u) > min(seg_w):
            seg_u, seg_w = seg_w, seg_u
            u, w = w, u
        if seg_u[-1] != f(u) or seg_w[0] != f(w):
            steps.append(
                f"level {format_value(f(e))}: reattach the merging edge to the "
                f"free ends of its two components"
            )
        merged = seg_u + [f(e)] + seg_w
        for s, seg in list(segment_of.items()):
            if seg is seg_u or seg is seg_w:
                segment_of[s] = merged
    labels = next(iter(segment_of.values()))
    g = DiscreteMorseFunction.on_path(labels)
    return g.complex, g, steps


def _structural_map(t1: MergeTree, t2: MergeTree) -> dict[int, int] | None:
    """The unique chirality-preserving node correspondence, if shapes agree."""
    if t1.canonical() != t2.canonical():
        return None
    out: dict[int, int] = {}
    stack = [(t1.root, t2.root)]
    while stack:
        a, b = stack.pop()
        out[a] = b
        if not t1.is_leaf(a):
            stack.append((t1.left[a], t2.left[b]))
            stack.append((t1.right[a], t2.right[b]))
    return out


def _order_preserving(pairs: list[tuple[Fraction, Fraction]]) -> bool:
    pairs = sorted(pairs)
    return all(x[1] < y[1] for x, y in zip(pairs, pairs[1:]))


def ml_isomorphic(t1: MlTree, t2: MlTree) -> bool:
    """Merge-tree isomorphism plus a fully order-preserving label match."""
    phi = _structural_map(t1.tree, t2.tree)
    if phi is None:
        return False
    pairs = [(t1.label(n), t2.label(m)) for n, m in phi.items()]
    return _order_preserving(pairs)


def ml_shuffle_equivalent(t1: MlTree, t2: MlTree) -> bool:
    """Label match order-preserving separately on leaves and inner nodes."""
    phi = _structural_map(t1.tree, t2.tree)
    if phi is None:
        return False
    leaves = [(t1.label(n), t2.label(m)) for n, m in phi.items() if t1.tree.is_leaf(n)]
    inner = [(t1.label(n), t2.label(m)) for n, m in phi.items() if not t1.tree.is_leaf(n)]
    return _order_preserving(leaves) and _order_preserving(inner)


def mo_isomorphic(o1: MorseOrder, o2: MorseOrder) -> bool:
    """Order-preserving isomorphism of the underlying merge trees."""
    phi = _structural_map(o1.tree, o2.tree)
    if phi is None:
        return False
    rank2 = {n: i for i, n in enumerate(o2.ascending)}
    image = [rank2[phi[n]] for n in o1.ascending]
    return image == sorted(image)
