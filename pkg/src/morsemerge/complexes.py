"""Finite simplicial 1-complexes: trees, oriented paths, and subcomplexes.

Simplices are plain tuples of vertex ids: ``(v,)`` for a vertex and
``(u, v)`` with ``u < v`` for an edge.  All types are immutable values;
every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Simplex = tuple  # (v,) or (u, v) with u < v


class ComplexError(ValueError):
    """Raised when an input fails to be a valid 1-complex."""


def edge(u: int, v: int) -> Simplex:
    """Canonicalize an edge as the ordered pair (min, max)."""
    if u == v:
        raise ComplexError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


def dim(simplex: Simplex) -> int:
    return len(simplex) - 1


def faces(simplex: Simplex) -> tuple[Simplex, ...]:
    """Proper faces of a simplex (endpoints of an edge, nothing for a vertex)."""
    if len(simplex) == 1:
        return ()
    u, v = simplex
    return ((u,), (v,))


@dataclass(frozen=True)
class SimplicialTree:
    """A non-empty finite tree viewed as a 1-dimensional simplicial complex."""

    vertices: frozenset[int]
    edges: frozenset[Simplex]

    def __post_init__(self):
        if not self.vertices:
            raise ComplexError("tree must be non-empty")
        if any(v < 0 for v in self.vertices):
            raise ComplexError("vertex ids must be non-negative")
        for e in self.edges:
            if len(e) != 2 or e[0] >= e[1]:
                raise ComplexError(f"edge {e} is not a canonical (min,max) pair")
            if e[0] not in self.vertices or e[1] not in self.vertices:
                raise ComplexError(f"edge {e} has an endpoint outside the vertex set")
        if len(self.edges) != len(self.vertices) - 1:
            raise ComplexError("a tree needs exactly |V| - 1 edges")
        if len(self._reach(next(iter(self.vertices)))) != len(self.vertices):
            raise ComplexError("complex is not connected")
        # connected + |E| = |V|-1 implies acyclic and simple

    @classmethod
    def from_edges(cls, pairs) -> SimplicialTree:
        es = frozenset(edge(u, v) for u, v in pairs)
        vs = frozenset(v for e in es for v in e)
        return cls(vs, es)

    def _reach(self, start: int) -> set[int]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    @cached_property
    def _all_simplices(self) -> tuple[Simplex, ...]:
        return tuple(sorted(((v,) for v in self.vertices))) + tuple(sorted(self.edges))

    def simplices(self) -> tuple[Simplex, ...]:
        return self._all_simplices

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __contains__(self, simplex: Simplex) -> bool:
        if len(simplex) == 1:
            return simplex[0] in self.vertices
        return simplex in self.edges


@dataclass(frozen=True)
class OrientedPath:
    """A path with a left-to-right orientation given by its vertex sequence."""

    vertex_seq: tuple[int, ...]

    def __post_init__(self):
        if not self.vertex_seq:
            raise ComplexError("path must be non-empty")
        if len(set(self.vertex_seq)) != len(self.vertex_seq):
            raise ComplexError("path vertices must be distinct")
        if any(v < 0 for v in self.vertex_seq):
            raise ComplexError("vertex ids must be non-negative")

    @classmethod
    def of_length(cls, n_edges: int) -> OrientedPath:
        return cls(tuple(range(n_edges + 1)))

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_seq)

    @cached_property
    def edges(self) -> frozenset[Simplex]:
        return frozenset(self.edge_seq())

    def edge_seq(self) -> tuple[Simplex, ...]:
        return tuple(
            edge(u, v) for u, v in zip(self.vertex_seq, self.vertex_seq[1:])
        )

    @cached_property
    def _simplex_seq(self) -> tuple[Simplex, ...]:
        out: list[Simplex] = []
        for i, v in enumerate(self.vertex_seq):
            if i:
                out.append(edge(self.vertex_seq[i - 1], v))
            out.append((v,))
        return tuple(out)

    def simplex_seq(self) -> tuple[Simplex, ...]:
        """All simplices in left-to-right order: v0, e01, v1, ..., vk."""
        return self._simplex_seq

    def simplices(self) -> tuple[Simplex, ...]:
        return self.simplex_seq()

    def reversed(self) -> OrientedPath:
        return OrientedPath(self.vertex_seq[::-1])

    def as_tree(self) -> SimplicialTree:
        return SimplicialTree(self.vertices, self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edge_seq() if v in e)

    def __contains__(self, simplex: Simplex) -> bool:
        if len(simplex) == 1:
            return simplex[0] in self.vertices
        return simplex in self.edges


Complex1D = SimplicialTree | OrientedPath


@dataclass(frozen=True)
class Subcomplex:
    """A face-closed subset of the simplices of a parent complex."""

    parent: Complex1D = field(compare=False)
    simplices: frozenset[Simplex]

    def __post_init__(self):
        for s in self.simplices:
            if s not in self.parent:
                raise ComplexError(f"simplex {s} is not in the parent complex")
            for f in faces(s):
                if f not in self.simplices:
                    raise ComplexError(f"subcomplex is not face-closed at {s}")

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def components(self) -> list[Subcomplex]:
        """All connected components, sorted by their smallest simplex."""
        remaining = set(self.simplices)
        out = []
        while remaining:
            comp = _component_in(self.simplices, min(remaining))
            out.append(Subcomplex(self.parent, comp))
            remaining -= comp
        return sorted(out, key=lambda c: min(c.simplices))


def _component_in(simplices: frozenset[Simplex] | set[Simplex], start: Simplex) -> frozenset[Simplex]:
    """Connected component of `start` inside a face-closed simplex set."""
    by_vertex: dict[int, list[Simplex]] = {}
    for s in simplices:
        for v in s:
            by_vertex.setdefault(v, []).append(s)
    seen = {start}
    stack = [start]
    while stack:
        s = stack.pop()
        for v in s:
            for t in by_vertex[v]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return frozenset(seen)


def full_subcomplex(complex: Complex1D) -> Subcomplex:
    return Subcomplex(complex, frozenset(complex.simplices()))


def connected_component(parent: Complex1D | Subcomplex, simplex: Simplex) -> Subcomplex:
    """Maximal connected face-closed subset containing `simplex`."""
    if isinstance(parent, Subcomplex):
        base, universe = parent.parent, parent.simplices
    else:
        base, universe = parent, frozenset(parent.simplices())
    if simplex not in universe:
        raise ComplexError(f"simplex {simplex} is not in the complex")
    return Subcomplex(base, _component_in(universe, simplex))


def parse_tree_file(text: str) -> SimplicialTree:
    """Parse the tree text format: lines `v <id>` and `e <id1> <id2>`."""
    vs: set[int] = set()
    es: set[Simplex] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                vs.add(int(parts[1]))
            elif parts[0] == "e" and len(parts) == 3:
                es.add(edge(int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise ComplexError(f"line {lineno}: cannot parse {raw!r}") from None
    return SimplicialTree(frozenset(vs), frozenset(es))


def format_tree_file(tree: SimplicialTree) -> str:
    lines = [f"v {v}" for v in sorted(tree.vertices)]
    lines += [f"e {u} {v}" for u, v in sorted(tree.edges)]
    return "\n".join(lines) + "\n"


def format_value(x: Fraction) -> str:
    """Exact rational rendering: integers bare, otherwise num/den."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_value(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ComplexError(f"cannot parse rational value {token!r}") from None
