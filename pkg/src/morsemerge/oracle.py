"""Exhaustive desk-scale enumeration and theorem verification.

Every structural theorem of the library is rechecked here over complete
enumerations of merge trees (by leaf count) and of all-critical dMfs on
paths (by vertex count).  The report is deterministic and empty of
failures on a healthy build.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import OrientedPath
from .curry import dmf_to_pl, induced_cml_tree, js_quotient, o_js, pl_to_dmf, reflect_subtree
from .dmf import (
    DiscreteMorseFunction,
    is_index_ordered,
    is_sublevel_connected,
    min_simplex,
    sublevel_complex,
    validate,
)
from .equiv import (
    cm_equivalent,
    ml_isomorphic,
    path_reflection_generators,
    shuffle_equivalent,
    symmetry_equivalent,
)
from .induce import MlTree, induced_merge_tree, induced_ml_tree
from .mergetree import MergeTree, isomorphic
from .orders import (
    index_morse_order,
    is_morse_order,
    labeling_from_order,
    order_from_labeling,
    simplex_order_less_literal,
    simplex_order_tree,
    sublevel_connected_morse_order,
)
from .realize import (
    build_index_ordered_dmf,
    build_sublevel_connected_dmf,
    induced_dmf,
    step_by_step_dmf,
    step_by_step_trace,
)


_TREE_CACHE: dict[int, list[MergeTree]] = {}


def enumerate_merge_trees(n_leaves: int) -> list[MergeTree]:
    """All merge trees with the given leaf count (Catalan many)."""
    if n_leaves < 1:
        raise ValueError("a merge tree has at least one leaf")
    if n_leaves in _TREE_CACHE:
        return list(_TREE_CACHE[n_leaves])
    if n_leaves == 1:
        out = [MergeTree.leaf()]
    else:
        out = [
            MergeTree.join(left, right)
            for k in range(1, n_leaves)
            for left in enumerate_merge_trees(k)
            for right in enumerate_merge_trees(n_leaves - k)
        ]
    _TREE_CACHE[n_leaves] = out
    return list(out)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _crit_label_rows(n_vertices: int):
    """All label rows of all-critical dMfs on a path with n vertices.

    Rows are permutations of 0..2n-2 whose odd (edge) positions exceed both
    neighbours; built by backtracking left to right.
    """
    size = 2 * n_vertices - 1
    row = [0] * size
    used = [False] * size

    def place(i: int):
        if i == size:
            yield tuple(row)
            return
        for v in range(size):
            if used[v]:
                continue
            if i % 2 == 1 and v < row[i - 1]:
                continue
            if i % 2 == 0 and i > 0 and v > row[i - 1]:
                continue
            used[v] = True
            row[i] = v
            yield from place(i + 1)
            used[v] = False

    yield from place(0)


def enumerate_crit_dmfs(n_vertices: int) -> list[DiscreteMorseFunction]:
    """All all-critical dMfs on a path with values 0..2n-2."""
    out = []
    for labels in _crit_label_rows(n_vertices):
        f = DiscreteMorseFunction.on_path(labels)
        assert validate(f).all_critical
        out.append(f)
    return out


@dataclass
class EnumerationReport:
    """Aggregated verification outcome; failures is empty on a clean run."""

    max_leaves: int
    max_vertices: int
    counts: dict[str, int] = field(default_factory=dict)
    checks: dict[str, int] = field(default_factory=dict)  # name -> instances run
    failures: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures

    def format(self, color: bool = False) -> str:
        green, red, off = ("\x1b[32m", "\x1b[31m", "\x1b[0m") if color else ("", "", "")
        width = max(len(n) for n in list(self.checks) + list(self.counts) + ["check"])
        lines = [f"{'count':<8} {'name':<{width}}"]
        for name in sorted(self.counts):
            lines.append(f"{self.counts[name]:<8} {name:<{width}}")
        lines.append("")
        lines.append(f"{'status':<8} {'check':<{width}} instances")
        failed_names = {f.split(":", 1)[0] for f in self.failures}
        for name in sorted(self.checks):
            mark = f"{red}FAIL{off}" if name in failed_names else f"{green}pass{off}"
            lines.append(f"{mark:<8} {name:<{width}} {self.checks[name]}")
        for f in self.failures:
            lines.append(f"FAIL {f}")
        tail = "all checks passed" if self.ok() else f"{len(self.failures)} failure(s)"
        lines.append(tail)
        return "\n".join(lines) + "\n"


def check_tree_theorems(tree: MergeTree) -> dict[str, str | None]:
    """Run every tree-side theorem on one merge tree.

    Returns check name -> None (pass) or a failure witness string.
    """
    results: dict[str, str | None] = {}
    name = tree.canonical()

    io = index_morse_order(tree)
    sc = sublevel_connected_morse_order(tree)
    results["index-order-is-morse-order"] = (
        None if is_morse_order(tree, io) else f"on {name}: index order fails"
    )
    results["sc-order-is-morse-order"] = (
        None if is_morse_order(tree, sc) else f"on {name}: sublevel-connected order fails"
    )

    leaves_io = [n for n in io.ascending if tree.is_leaf(n)]
    leaves_sc = [n for n in sc.ascending if tree.is_leaf(n)]
    inner_io = [n for n in io.ascending if not tree.is_leaf(n)]
    inner_sc = [n for n in sc.ascending if not tree.is_leaf(n)]
    results["orders-agree-per-class"] = (
        None if leaves_io == leaves_sc and inner_io == inner_sc
        else f"on {name}: leaf/inner restrictions of the two orders differ"
    )

    ok = True
    rank = {n: i for i, n in enumerate(sc.ascending)}
    for p in tree.nodes():
        ranks = sorted(rank[m] for m in tree.subtree_nodes(p))
        if ranks != list(range(ranks[0], ranks[-1] + 1)):
            ok = False
    results["sc-subtrees-are-intervals"] = (
        None if ok else f"on {name}: a subtree is not an sc-interval"
    )

    seq = simplex_order_tree(tree)
    ok = all(
        simplex_order_less_literal(tree, a, b)
        for i, a in enumerate(seq)
        for b in seq[i + 1 :]
    )
    results["inorder-matches-literal-simplex-order"] = (
        None if ok else f"on {name}: in-order traversal disagrees with the comparator"
    )

    ok = (
        order_from_labeling(labeling_from_order(io)).ascending == io.ascending
        and order_from_labeling(labeling_from_order(sc)).ascending == sc.ascending
    )
    results["iml-imo-roundtrip"] = None if ok else f"on {name}: iMo(iMl(order)) != order"

    path_io, f_io = build_index_ordered_dmf(tree)
    path_sc, f_sc = build_sublevel_connected_dmf(tree)
    results["fio-is-index-ordered"] = (
        None if is_index_ordered(f_io) and validate(f_io).all_critical
        else f"on {name}: f_io is not an all-critical index-ordered dMf"
    )
    results["fsc-is-sublevel-connected"] = (
        None if is_sublevel_connected(f_sc) and validate(f_sc).all_critical
        else f"on {name}: f_sc is not an all-critical sublevel-connected dMf"
    )

    _, f_step = step_by_step_dmf(tree)
    results["step-equals-fio"] = (
        None if f_step.path_labels() == f_io.path_labels()
        else f"on {name}: step-by-step {f_step.path_labels()} != f_io {f_io.path_labels()}"
    )

    results["step-invariants"] = _check_step_invariants(tree)

    ok = isomorphic(induced_merge_tree(f_io), tree) and isomorphic(
        induced_merge_tree(f_sc), tree
    )
    results["realize-roundtrip"] = (
        None if ok else f"on {name}: induced merge tree of f_io/f_sc differs from the input"
    )

    results["fio-fsc-shuffle-equivalent"] = (
        None if shuffle_equivalent(f_io, f_sc)[0]
        else f"on {name}: f_io and f_sc are not shuffle-equivalent"
    )

    phi = {s: n for s, n in zip(path_io.simplex_seq(), seq)}
    ok = all((len(s) == 1) == tree.is_leaf(n) for s, n in phi.items())
    results["phi-maps-vertices-to-leaves"] = (
        None if ok else f"on {name}: phi mismatches dimensions and leaf/inner status"
    )

    ok = True
    for order in (io, sc):
        lam = labeling_from_order(order)
        _, f_lam = induced_dmf(tree, lam)
        if not ml_isomorphic(induced_ml_tree(f_lam), MlTree(tree, lam)):
            ok = False
    results["ml-roundtrip"] = (
        None if ok else f"on {name}: M(Phi(T,lambda)) is not isomorphic to (T,lambda)"
    )
    return results


def _check_step_invariants(tree: MergeTree) -> str | None:
    """Per-step lemmas of the step-by-step construction."""
    if tree.n_inner() == 0:
        return None
    records = step_by_step_trace(tree)
    io = index_morse_order(tree)
    inner_desc = [n for n in reversed(io.ascending) if not tree.is_leaf(n)]
    if [r.node for r in records] != inner_desc:
        return f"on {tree.canonical()}: visit order differs from descending index order"
    prev_min_edge = None
    for r in records:
        vlabels = r.labels[::2]
        elabels = r.labels[1::2]
        if max(vlabels) + 1 != min(elabels):
            return f"on {tree.canonical()} step {r.index}: vertex/edge label gap is not 1"
        if sorted(vlabels) != list(range(len(vlabels))):
            return f"on {tree.canonical()} step {r.index}: vertex labels not 0..k"
        if r.case != "L":
            x, y, z = r.triple
            if y != min(elabels):
                return f"on {tree.canonical()} step {r.index}: new edge is not minimal"
            if y != prev_min_edge + 1:
                return f"on {tree.canonical()} step {r.index}: new edge label jumps"
            chir = tree.chirality[r.node]
            if (chir == "L" and z != x + 1) or (chir == "R" and x != z + 1):
                return f"on {tree.canonical()} step {r.index}: triple violates chirality"
        prev_min_edge = min(elabels)
    return None


def _ml_key(f: DiscreteMorseFunction) -> str:
    return induced_ml_tree(f).canonical()


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def check_path_theorems(n_vertices: int) -> tuple[dict[str, int], dict[str, list[str]]]:
    """Run every path-side theorem over all all-critical dMfs of one size.

    Returns (counts, failures per check name).
    """
    fails: dict[str, list[str]] = {}
    checks: dict[str, int] = {}

    def note(check: str, witness: str | None):
        checks[check] = checks.get(check, 0) + 1
        if witness is not None:
            fails.setdefault(check, []).append(f"{check}: {witness}")

    rows = list(_crit_label_rows(n_vertices))
    counts = {f"dmfs-on-{n_vertices}-vertex-paths": len(rows)}
    dmf_of = {row: DiscreteMorseFunction.on_path(row) for row in rows}
    uf = _UnionFind(rows)
    ml_keys: dict[tuple, str] = {}
    merge_keys: dict[tuple, str] = {}

    def as_row(labels) -> tuple:
        return tuple(int(x) for x in labels)

    for row in rows:
        f = dmf_of[row]
        tag = " ".join(str(x) for x in row)
        crit = validate(f)

        # sublevel structure: nesting, face closure, contiguous components
        prev = frozenset()
        ok_nest = ok_runs = True
        positions = {s: i for i, s in enumerate(f.complex.simplex_seq())}
        for c in crit.critical_values:
            sub = sublevel_complex(f, c)
            if not prev <= sub.simplices:
                ok_nest = False
            prev = sub.simplices
            for comp in sub.components():
                pos = sorted(positions[s] for s in comp.simplices)
                if pos != list(range(pos[0], pos[-1] + 1)):
                    ok_runs = False
                lo = min_simplex(f, comp)
                note(
                    "min-on-critical-vertex",
                    None if len(lo) == 1 and lo in crit.critical else f"on {tag} at level {c}",
                )
                comp_crit = [s for s in comp.simplices if s in crit.critical]
                if any(len(s) == 2 for s in comp_crit):
                    hi = max(comp_crit, key=f)
                    note(
                        "max-crit-on-critical-edge",
                        None if len(hi) == 2 else f"on {tag} at level {c}",
                    )
        note("sublevels-nested", None if ok_nest else f"on {tag}")
        note("sublevel-components-contiguous", None if ok_runs else f"on {tag}")

        ml = induced_ml_tree(f)  # construction validates the Morse labeling
        ml_keys[row] = ml.canonical()
        merge_keys[row] = ml.tree.canonical()
        leaf_vals = sorted(ml.label(n) for n in ml.tree.leaves())
        inner_vals = sorted(ml.label(n) for n in ml.tree.inner_nodes())
        ok = leaf_vals == [f(s) for s in crit.critical_vertices] and inner_vals == [
            f(s) for s in crit.critical_edges
        ]
        note("node-labels-are-critical-values", None if ok else f"on {tag}")

        ok = True
        subtree_label_sets = {
            frozenset(ml.label(m) for m in ml.tree.subtree_nodes(p))
            for p in ml.tree.nodes()
        }
        for c in crit.critical_values:
            for comp in sublevel_complex(f, c).components():
                cv = frozenset(f(s) for s in comp.simplices if s in crit.critical)
                if cv not in subtree_label_sets:
                    ok = False
        note("components-match-subtrees", None if ok else f"on {tag}")

        # Thm 5.1 (1): realizing the induced Ml tree is symmetry-equivalent
        _, back = induced_dmf(ml.tree, ml.labeling)
        back_row = as_row(back.path_labels())
        in_enum = back_row in dmf_of
        note(
            "phi-roundtrip-in-enumeration",
            None if in_enum else f"on {tag}: realization left the enumeration",
        )
        if in_enum:
            uf.union(row, back_row)
            ok, _ = symmetry_equivalent(f, dmf_of[back_row])
            note("phi-roundtrip-symmetry-equivalent", None if ok else f"on {tag}")

        # orbit generators stay inside the enumeration and fix the Ml tree
        cml = induced_cml_tree(f)
        for gen in path_reflection_generators(f):
            a, b = gen.span
            moved = row[:a] + row[a : b + 1][::-1] + row[b + 1 :]
            if moved not in dmf_of:
                note("generators-stay-valid", f"on {tag}: generator left the enumeration")
                continue
            note("generators-stay-valid", None)
            uf.union(row, moved)
            g = dmf_of[moved]
            note(
                "generators-preserve-ml-tree",
                None if induced_ml_tree(g).canonical() == ml.canonical() else f"on {tag}",
            )
            span_values = [
                f(s)
                for s in sublevel_complex(f, gen.level).simplices
                if s in crit.critical and a <= positions[s] <= b
            ]
            pivot = _node_with_label(cml, max(span_values))
            note(
                "generators-reflect-curry-tree",
                None
                if induced_cml_tree(g).canonical() == reflect_subtree(cml, pivot).canonical()
                else f"on {tag} via {gen.describe()}",
            )

        note(
            "curry-js-quotient-matches-ml",
            None if js_quotient(cml).canonical() == ml.canonical() else f"on {tag}",
        )

        _, rep = o_js(f)
        ok = (
            induced_cml_tree(rep).canonical() == induced_ml_tree(rep).canonical()
            and symmetry_equivalent(f, rep)[0]
            and o_js(rep)[1].path_labels() == rep.path_labels()
        )
        note("ojs-representative", None if ok else f"on {tag}")

        _, back_pl = pl_to_dmf(dmf_to_pl(f))
        note(
            "pl-roundtrip",
            None if as_row(back_pl.path_labels()) == row else f"on {tag}",
        )

    # partition agreement: generator orbits vs Ml-tree isomorphism classes
    orbit_of: dict[tuple, tuple] = {row: uf.find(row) for row in rows}
    by_orbit: dict[tuple, set[str]] = {}
    by_key: dict[str, set[tuple]] = {}
    for row in rows:
        by_orbit.setdefault(orbit_of[row], set()).add(ml_keys[row])
        by_key.setdefault(ml_keys[row], set()).add(orbit_of[row])
    for root, keys in sorted(by_orbit.items()):
        note(
            "orbit-has-one-ml-tree",
            None if len(keys) == 1 else f"orbit of {root} hits {len(keys)} Ml trees",
        )
    for key, roots in sorted(by_key.items()):
        note(
            "ml-tree-has-one-orbit",
            None if len(roots) == 1 else f"Ml tree {key} split over {len(roots)} orbits",
        )
    counts[f"symmetry-classes-on-{n_vertices}-vertex-paths"] = len(by_key)

    # shuffle equivalence implies isomorphic merge trees, via class grouping
    by_shuffle: dict[tuple, set[str]] = {}
    for row in rows:
        f = dmf_of[row]
        c = validate(f)
        pos = {s: i for i, s in enumerate(f.complex.simplex_seq())}
        key = (
            tuple(pos[s] for s in c.critical_vertices),
            tuple(pos[s] for s in c.critical_edges),
        )
        by_shuffle.setdefault(key, set()).add(merge_keys[row])
    for key, trees in sorted(by_shuffle.items()):
        note(
            "shuffle-class-single-merge-tree",
            None if len(trees) == 1 else f"shuffle class {key} has {len(trees)} merge trees",
        )

    # on paths, cm equivalence coincides with symmetry equivalence: the two
    # library decisions must agree with the class partition, instance by
    # instance against each class representative and one foreign class
    rep_of: dict[str, tuple] = {}
    for row in rows:
        key = ml_keys[row]
        rep_of[key] = min(rep_of.get(key, row), row)
    some_key = min(rep_of)
    for row in rows:
        f = dmf_of[row]
        same = dmf_of[rep_of[ml_keys[row]]]
        agree = symmetry_equivalent(f, same)[0] and cm_equivalent(f, same)[0]
        if ml_keys[row] != some_key:
            foreign = dmf_of[rep_of[some_key]]
            agree = (
                agree
                and not symmetry_equivalent(f, foreign)[0]
                and not cm_equivalent(f, foreign)[0]
            )
        note(
            "cm-equals-symmetry-on-paths",
            None if agree else f"on {' '.join(map(str, row))}",
        )

    return {**counts, **{f"check-{k}@{n_vertices}": v for k, v in checks.items()}}, fails


def _node_with_label(cml, value):
    for n in cml.tree.nodes():
        if cml.label(n) == value:
            return n
    raise AssertionError(f"no node labeled {value}")


def verify_theorems(max_leaves: int = 7, max_vertices: int = 5) -> EnumerationReport:
    """Run every cross-module invariant over the full enumerations."""
    report = EnumerationReport(max_leaves=max_leaves, max_vertices=max_vertices)

    realized: set[str] = set()
    for n in range(1, max_leaves + 1):
        trees = enumerate_merge_trees(n)
        report.counts[f"merge-trees-{n}-leaves"] = len(trees)
        if len(trees) != catalan(n - 1):
            report.failures.append(
                f"catalan-count: {len(trees)} trees with {n} leaves, expected {catalan(n - 1)}"
            )
        report.checks["catalan-count"] = report.checks.get("catalan-count", 0) + 1
        canon = {t.canonical() for t in trees}
        if len(canon) != len(trees):
            report.failures.append(f"catalan-count: duplicate trees at {n} leaves")
        for tree in trees:
            for check, witness in check_tree_theorems(tree).items():
                report.checks[check] = report.checks.get(check, 0) + 1
                if witness is not None:
                    report.failures.append(f"{check}: {witness}")
            realized.add(induced_merge_tree(build_index_ordered_dmf(tree)[1]).canonical())
        missing = canon - realized
        report.checks["every-tree-realized"] = report.checks.get("every-tree-realized", 0) + 1
        if missing:
            report.failures.append(
                f"every-tree-realized: {len(missing)} trees with {n} leaves unrealized"
            )

    for n in range(1, max_vertices + 1):
        counts, fails = check_path_theorems(n)
        for key, value in counts.items():
            if key.startswith("check-"):
                name = key[len("check-") :].split("@")[0]
                report.checks[name] = report.checks.get(name, 0) + value
            else:
                report.counts[key] = value
        for messages in fails.values():
            report.failures.extend(messages)

    expected = {1: 1, 2: 2, 3: 16}
    for n, want in expected.items():
        if n <= max_vertices:
            got = report.counts.get(f"dmfs-on-{n}-vertex-paths")
            report.checks["enumeration-count"] = report.checks.get("enumeration-count", 0) + 1
            if got != want:
                report.failures.append(
                    f"enumeration-count: {got} dMfs on {n}-vertex paths, expected {want}"
                )

    report.failures.sort()
    return report
