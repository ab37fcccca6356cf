"""Realizing merge trees as discrete Morse functions on paths.

Two routes are implemented.  The all-at-once route composes a Morse
labeling with the order isomorphism between the path and the tree.  The
step-by-step route rebuilds the path edge by edge while walking the inner
nodes in descending index Morse order; both must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import OrientedPath
from .dmf import DiscreteMorseFunction
from .mergetree import LEFT, RIGHT, MergeTree
from .orders import (
    MorseLabeling,
    OrderError,
    index_morse_order,
    is_morse_labeling,
    labeling_from_order,
    order_isomorphism,
    sublevel_connected_morse_order,
)


def induced_dmf(
    tree: MergeTree, labeling: MorseLabeling, mirrored: bool = False
) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """The dMf induced by a Morse labeling: f = labeling o phi.

    The path has i(T) edges; vertices correspond to leaves and edges to
    inner nodes.  The result has only critical cells.
    """
    if not is_morse_labeling(tree, labeling):
        raise OrderError("labeling does not induce a Morse order")
    path = OrientedPath.of_length(tree.n_inner())
    phi = order_isomorphism(path, tree, mirrored=mirrored)
    values = {s: labeling(node) for s, node in phi.items()}
    return path, DiscreteMorseFunction(path, values)


def build_index_ordered_dmf(tree: MergeTree) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """f_io: the dMf induced by the index Morse order."""
    return induced_dmf(tree, labeling_from_order(index_morse_order(tree)))


def build_sublevel_connected_dmf(tree: MergeTree) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """f_sc: the dMf induced by the sublevel-connected Morse order."""
    return induced_dmf(tree, labeling_from_order(sublevel_connected_morse_order(tree)))


@dataclass(frozen=True)
class StepRecord:
    """Audit entry for one step of the step-by-step construction."""

    index: int
    node: int
    case: str  # 'L' for the root, else parent+child chirality: LR/RL/RR/LL
    triple: tuple[int, int, int] | None  # labels written to (s_l(c), s(c), s_r(c))
    m_value: int | None  # the RR/LL minimum-edge-label parameter
    labels: tuple[int, ...]  # alternating v,e,...,v labels after the step

    def format(self) -> str:
        row = " ".join(str(x) for x in self.labels)
        return f"Step {self.index} ({self.case}): {row}"


class _StepMachine:
    """Single-use state machine for the step-by-step construction."""

    def __init__(self, tree: MergeTree):
        self.tree = tree
        self.vlabels: list[int] = []
        self.elabels: list[int] = []
        self.eowner: list[int] = []
        self.log: list[StepRecord] = []

    def run(self) -> list[StepRecord]:
        tree = self.tree
        if tree.n_inner() == 0:
            self.vlabels = [0]
            self.log.append(StepRecord(0, tree.root, "L", None, None, (0,)))
            return self.log
        for step, node in enumerate(self._visit_order()):
            if node == tree.root:
                self._start(step)
            else:
                self._step(step, node)
        return self.log

    def _visit_order(self) -> list[int]:
        """Inner nodes, opposite-chirality child subtree first.

        This is exactly the descending index Morse order on inner nodes.
        """
        order: list[int] = []

        def visit(n: int):
            order.append(n)
            l, r = self.tree.children(n)
            first, second = (r, l) if self.tree.chirality[n] == LEFT else (l, r)
            for child in (first, second):
                if not self.tree.is_leaf(child):
                    visit(child)

        visit(self.tree.root)
        return order

    def _start(self, step: int):
        self.vlabels = [0, 1]
        self.elabels = [2]
        self.eowner = [self.tree.root]
        self._record(step, self.tree.root, "L", (0, 2, 1), None)

    def _step(self, step: int, node: int):
        tree = self.tree
        parent = tree.parent[node]
        case = tree.chirality[parent] + tree.chirality[node]
        j = self.eowner.index(parent)
        x, y, z = self.vlabels[j], self.elabels[j], self.vlabels[j + 1]

        m = None
        if case in ("RR", "LL"):
            in_subtree = tree.subtree_nodes(parent)
            m = min(
                lab for lab, owner in zip(self.elabels, self.eowner)
                if owner in in_subtree
            )

        if case == "LR":
            triple = (z + 1, y + 1, x + 1)
        elif case == "RL":
            triple = (z + 1, y + 1, x + 1)
        elif case == "RR":
            triple = (z + 1, m + 1, z)
        else:  # LL
            triple = (x, m + 1, x + 1)
        bump_above = z if case in ("LR", "RR") else x

        # +2 on all pre-existing edges, +1 on pre-existing vertices above the
        # threshold; the vertices rewritten by the triple sit at or below it.
        self.elabels = [lab + 2 for lab in self.elabels]
        self.vlabels = [lab + 1 if lab > bump_above else lab for lab in self.vlabels]

        if case in ("LR", "RR"):
            # new edge directly right of s(p); s_l(c) = s_r(p)
            self.vlabels[j + 1] = triple[0]
            self.vlabels.insert(j + 2, triple[2])
            self.elabels.insert(j + 1, triple[1])
            self.eowner.insert(j + 1, node)
        else:
            # new edge directly left of s(p); s_r(c) = s_l(p)
            self.vlabels[j] = triple[2]
            self.vlabels.insert(j, triple[0])
            self.elabels.insert(j, triple[1])
            self.eowner.insert(j, node)

        self._record(step, node, case, triple, m)

    def _record(self, step: int, node: int, case: str, triple, m):
        row: list[int] = []
        for i, v in enumerate(self.vlabels):
            if i:
                row.append(self.elabels[i - 1])
            row.append(v)
        self.log.append(StepRecord(step, node, case, triple, m, tuple(row)))


def step_by_step_dmf(tree: MergeTree) -> tuple[OrientedPath, DiscreteMorseFunction]:
    """Build f = f_io by induction over the inner nodes of the tree."""
    machine = _StepMachine(tree)
    machine.run()
    f = DiscreteMorseFunction.on_path(machine.log[-1].labels)
    return f.complex, f


def step_by_step_trace(tree: MergeTree) -> list[StepRecord]:
    """The full audit log of the step-by-step construction."""
    machine = _StepMachine(tree)
    return machine.run()


def format_trace(records: list[StepRecord]) -> str:
    return "\n".join(r.format() for r in records) + "\n"
