"""Chiral full rooted binary trees (merge trees).

Every node has zero or two children, and each child carries the datum of
being the left (L) or right (R) child.  The root is conventionally L.
Nodes are referenced by arena index; trees are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import format_value, parse_value

LEFT = "L"
RIGHT = "R"
BLANK = "_"


class TreeError(ValueError):
    """Malformed merge tree or invalid node reference."""


@dataclass(frozen=True)
class MergeTree:
    """Arena-backed full rooted chiral binary tree.

    parent[i] is None for the root; left[i]/right[i] are both None (leaf)
    or both node ids (inner node).  chirality[i] is 'L' or 'R'; the root is
    'L' by convention.
    """

    parent: tuple
    left: tuple
    right: tuple
    chirality: tuple
    root: int = 0

    def __post_init__(self):
        n = len(self.parent)
        if not n:
            raise TreeError("merge tree must be non-empty")
        if self.parent[self.root] is not None or self.chirality[self.root] != LEFT:
            raise TreeError("root must be parentless with chirality L")
        seen = {self.root}
        for i in range(n):
            if (self.left[i] is None) != (self.right[i] is None):
                raise TreeError(f"node {i} has exactly one child")
            if self.left[i] is not None:
                if self.chirality[self.left[i]] != LEFT or self.chirality[self.right[i]] != RIGHT:
                    raise TreeError(f"children of node {i} carry wrong chirality data")
                if self.parent[self.left[i]] != i or self.parent[self.right[i]] != i:
                    raise TreeError(f"child/parent links of node {i} disagree")
                seen.update((self.left[i], self.right[i]))
        if len(seen) != n:
            raise TreeError("arena contains nodes not reachable as children")

    # -- construction ------------------------------------------------------

    @classmethod
    def leaf(cls) -> MergeTree:
        return cls((None,), (None,), (None,), (LEFT,))

    @classmethod
    def join(cls, left_tree: MergeTree, right_tree: MergeTree) -> MergeTree:
        """New tree whose root has `left_tree` as L child and `right_tree` as R."""
        builder = _Builder()
        root = builder.add(None, LEFT)
        builder.set_children(
            root,
            builder.graft(left_tree, left_tree.root, root, LEFT),
            builder.graft(right_tree, right_tree.root, root, RIGHT),
        )
        return builder.freeze(root)

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.parent)

    def nodes(self) -> range:
        return range(len(self.parent))

    def is_leaf(self, n: int) -> bool:
        return self.left[n] is None

    def children(self, n: int) -> tuple[int, int]:
        if self.is_leaf(n):
            raise TreeError(f"node {n} is a leaf")
        return self.left[n], self.right[n]

    def leaves(self) -> list[int]:
        return [n for n in self.nodes() if self.is_leaf(n)]

    def inner_nodes(self) -> list[int]:
        return [n for n in self.nodes() if not self.is_leaf(n)]

    def n_leaves(self) -> int:
        return len(self.leaves())

    def n_inner(self) -> int:
        return len(self.parent) - self.n_leaves()

    def depth_of(self, n: int) -> int:
        d = 0
        while self.parent[n] is not None:
            n = self.parent[n]
            d += 1
        return d

    def depth(self) -> int:
        return max(self.depth_of(n) for n in self.nodes())

    def ancestors(self, n: int) -> list[int]:
        """Path from n up to the root, inclusive of both."""
        out = [n]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def descendants(self, n: int) -> set[int]:
        """All nodes strictly below n."""
        out: set[int] = set()
        stack = [n]
        while stack:
            m = stack.pop()
            if not self.is_leaf(m):
                out.update(self.children(m))
                stack.extend(self.children(m))
        return out

    def subtree_nodes(self, n: int) -> set[int]:
        return {n} | self.descendants(n)

    def youngest_common_ancestor(self, a: int, b: int) -> int:
        """The common ancestor with no descendant that is also one."""
        pa = self.ancestors(a)[::-1]
        pb = self.ancestors(b)[::-1]
        yca = pa[0]
        for x, y in zip(pa, pb):
            if x != y:
                break
            yca = x
        return yca

    def path_word(self, n: int) -> str:
        """Chiralities along the root-to-n path, blank-padded to depth+1."""
        word = "".join(self.chirality[m] for m in reversed(self.ancestors(n)))
        return word.ljust(self.depth() + 1, BLANK)

    def node_by_path_word(self, word: str) -> int:
        n = self.root
        for letter in word.rstrip(BLANK)[1:]:
            n = self.left[n] if letter == LEFT else self.right[n]
        return n

    def in_order(self) -> list[int]:
        """Left subtree, node, right subtree; root-first tie-in for leaves."""
        out: list[int] = []
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            n, expanded = stack.pop()
            if self.is_leaf(n):
                out.append(n)
            elif expanded:
                out.append(n)
            else:
                stack.append((self.right[n], False))
                stack.append((n, True))
                stack.append((self.left[n], False))
        return out

    # -- subtree extraction and surgery --------------------------------------

    def subtree(self, n: int) -> MergeTree:
        """The rerooted subtree below (and including) n, chiralities kept."""
        builder = _Builder()
        root = builder.graft(self, n, None, LEFT)
        return builder.freeze(root)

    def mirrored(self, n: int | None = None) -> MergeTree:
        """Recursively swap left/right everywhere below (and including) n."""
        if n is None:
            n = self.root
        builder = _Builder()

        def copy(m: int, parent, chir, flip: bool) -> int:
            new = builder.add(parent, chir)
            if not self.is_leaf(m):
                l, r = self.children(m)
                if flip or m == n:
                    l, r = r, l
                builder.set_children(
                    new,
                    copy(l, new, LEFT, flip or m == n),
                    copy(r, new, RIGHT, flip or m == n),
                )
            return new

        root = copy(self.root, None, LEFT, False)
        return builder.freeze(root)

    # -- canonical form -------------------------------------------------------

    def canonical(self, labels: dict[int, Fraction] | None = None) -> str:
        """Serialization with the left child printed first.

        Unlabeled: leaf `*`, inner `(<left>,<right>)`.  Labeled: leaf
        `<number>`, inner `(<left>,<right>):<number>`.
        """

        def render(n: int) -> str:
            if self.is_leaf(n):
                return "*" if labels is None else format_value(labels[n])
            l, r = self.children(n)
            body = f"({render(l)},{render(r)})"
            return body if labels is None else f"{body}:{format_value(labels[n])}"

        return render(self.root)

    def to_dot(self, labels: dict[int, Fraction] | None = None, name: str = "mergetree") -> str:
        """GraphViz DOT; drawn upside down (children above parents)."""
        order = {n: i for i, n in enumerate(self._dfs_left_first())}
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
        for n in sorted(self.nodes(), key=order.get):
            text = format_value(labels[n]) if labels is not None else self.path_word(n)
            lines.append(f'  n{order[n]} [label="{text}"];')
        for n in sorted(self.nodes(), key=order.get):
            if not self.is_leaf(n):
                for c in self.children(n):
                    lines.append(f'  n{order[n]} -> n{order[c]} [label="{self.chirality[c]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _dfs_left_first(self) -> list[int]:
        out, stack = [], [self.root]
        while stack:
            n = stack.pop()
            out.append(n)
            if not self.is_leaf(n):
                stack.append(self.right[n])
                stack.append(self.left[n])
        return out


class _Builder:
    """Mutable arena used during tree construction."""

    def __init__(self):
        self.parent: list = []
        self.left: list = []
        self.right: list = []
        self.chirality: list = []

    def add(self, parent, chir) -> int:
        self.parent.append(parent)
        self.left.append(None)
        self.right.append(None)
        self.chirality.append(chir)
        return len(self.parent) - 1

    def set_children(self, n: int, l: int, r: int):
        self.left[n] = l
        self.right[n] = r

    def graft(self, src: MergeTree, src_node: int, parent, chir) -> int:
        new = self.add(parent, chir)
        if not src.is_leaf(src_node):
            l, r = src.children(src_node)
            self.set_children(
                new, self.graft(src, l, new, LEFT), self.graft(src, r, new, RIGHT)
            )
        return new

    def freeze(self, root: int) -> MergeTree:
        if root != 0:
            raise TreeError("builder roots must be allocated first")
        return MergeTree(
            tuple(self.parent), tuple(self.left), tuple(self.right),
            tuple(self.chirality), root,
        )


def isomorphic(t1: MergeTree, t2: MergeTree) -> bool:
    """Root- and chirality-preserving isomorphism of merge trees."""
    return t1.canonical() == t2.canonical()


def parse_merge_tree(text: str) -> tuple[MergeTree, dict[int, Fraction] | None]:
    """Parse the merge-tree text format; returns (tree, labels or None).

    Grammar: leaf `*` (unlabeled) or `<number>` (labeled); inner node
    `(<left>,<right>)` with an optional `:<number>` label.  Redundant
    parentheses around a node are tolerated.
    """
    s = text.strip()
    pos = 0

    def error(msg: str):
        raise TreeError(f"merge tree text, column {pos + 1}: {msg}")

    def skip_ws():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def parse_number() -> Fraction:
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isdigit() or s[pos] in "+-./"):
            pos += 1
        if start == pos:
            error("expected a number")
        return parse_value(s[start:pos])

    # node -> ('leaf', label|None) | ('inner', left, right, label|None)
    def parse_node():
        nonlocal pos
        skip_ws()
        if pos >= len(s):
            error("unexpected end of input")
        if s[pos] == "*":
            pos += 1
            return ("leaf", None)
        if s[pos] != "(":
            return ("leaf", parse_number())
        pos += 1  # consume '('
        first = parse_node()
        skip_ws()
        if pos < len(s) and s[pos] == ")":  # redundant parens around one node
            pos += 1
            skip_ws()
            if pos < len(s) and s[pos] == ":":
                pos += 1
                node = first
                if node[0] == "leaf":
                    error("label after a grouped leaf")
                if node[3] is not None:
                    error("doubly labeled node")
                return ("inner", node[1], node[2], parse_number())
            return first
        if pos >= len(s) or s[pos] != ",":
            error("expected ',' or ')'")
        pos += 1
        second = parse_node()
        skip_ws()
        if pos >= len(s) or s[pos] != ")":
            error("expected ')'")
        pos += 1
        label = None
        skip_ws()
        if pos < len(s) and s[pos] == ":":
            pos += 1
            label = parse_number()
        return ("inner", first, second, label)

    ast = parse_node()
    skip_ws()
    if pos != len(s):
        error("trailing input")

    builder = _Builder()
    labels: dict[int, Fraction] = {}
    labeled_flags: list[bool] = []

    def build(node, parent, chir) -> int:
        new = builder.add(parent, chir)
        if node[0] == "leaf":
            labeled_flags.append(node[1] is not None)
            if node[1] is not None:
                labels[new] = node[1]
        else:
            labeled_flags.append(node[3] is not None)
            if node[3] is not None:
                labels[new] = node[3]
            builder.set_children(
                new, build(node[1], new, LEFT), build(node[2], new, RIGHT)
            )
        return new

    root = build(ast, None, LEFT)
    tree = builder.freeze(root)
    if all(labeled_flags):
        return tree, labels
    if any(labeled_flags):
        raise TreeError("tree is only partially labeled")
    return tree, None
