"""Discrete Morse functions on 1-complexes.

A discrete Morse function assigns an exact rational value to every simplex
such that values weakly increase along face relations, no value is used more
than twice, and equal values occur only on an incident vertex/edge pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import (
    Complex1D,
    ComplexError,
    OrientedPath,
    Simplex,
    Subcomplex,
    connected_component,
    dim,
    edge,
    faces,
    format_value,
    parse_value,
)


class DmfError(ValueError):
    """A map that fails one of the three defining conditions."""


class WeaklyIncreasingViolation(DmfError):
    def __init__(self, face: Simplex, coface: Simplex, fv: Fraction, cv: Fraction):
        self.face, self.coface = face, coface
        super().__init__(
            f"value {format_value(cv)} on {coface} is below value "
            f"{format_value(fv)} on its face {face}"
        )


class MultiplicityViolation(DmfError):
    def __init__(self, value: Fraction, simplices):
        self.value, self.simplices = value, tuple(simplices)
        super().__init__(
            f"value {format_value(value)} is taken by {len(self.simplices)} simplices: "
            f"{self.simplices}"
        )


class MatchingViolation(DmfError):
    def __init__(self, a: Simplex, b: Simplex, value: Fraction):
        self.pair = (a, b)
        super().__init__(
            f"simplices {a} and {b} share value {format_value(value)} but are not incident"
        )


@dataclass(frozen=True)
class DiscreteMorseFunction:
    """Mapping simplex -> exact rational on a tree or oriented path."""

    complex: Complex1D
    values: dict[Simplex, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "values", {s: Fraction(v) for s, v in self.values.items()}
        )
        for s in self.complex.simplices():
            if s not in self.values:
                raise DmfError(f"no value assigned to simplex {s}")
        if len(self.values) != len(self.complex.simplices()):
            raise DmfError("values assigned outside the complex")

    def __call__(self, simplex: Simplex) -> Fraction:
        return self.values[simplex]

    def __hash__(self):
        if "_hash" not in self.__dict__:
            self.__dict__["_hash"] = hash(
                (self.complex, tuple(sorted(self.values.items())))
            )
        return self.__dict__["_hash"]

    def __eq__(self, other):
        return (
            isinstance(other, DiscreteMorseFunction)
            and self.complex == other.complex
            and self.values == other.values
        )

    @classmethod
    def on_path(cls, labels) -> DiscreteMorseFunction:
        """Build a dMf on a fresh path 0-1-...-k from the alternating
        vertex,edge,...,vertex label sequence read left to right."""
        labels = [Fraction(x) for x in labels]
        if len(labels) % 2 == 0:
            raise DmfError("a path dMf needs an odd number of values")
        path = OrientedPath.of_length(len(labels) // 2)
        values: dict[Simplex, Fraction] = {}
        for pos, s in enumerate(path.simplex_seq()):
            values[s] = labels[pos]
        return cls(path, values)

    def path_labels(self) -> tuple[Fraction, ...]:
        if not isinstance(self.complex, OrientedPath):
            raise DmfError("path_labels needs a dMf on an oriented path")
        return tuple(self.values[s] for s in self.complex.simplex_seq())

    def scaled(self, factor) -> DiscreteMorseFunction:
        factor = Fraction(factor)
        return DiscreteMorseFunction(
            self.complex, {s: v * factor for s, v in self.values.items()}
        )


@dataclass(frozen=True)
class CriticalData:
    """Critical/matched partition of a valid dMf."""

    critical: frozenset[Simplex]
    matched_pairs: frozenset[tuple[Simplex, Simplex]]  # (vertex, edge)
    critical_values: tuple[Fraction, ...]  # ascending
    critical_vertices: tuple[Simplex, ...]  # ascending by value
    critical_edges: tuple[Simplex, ...]  # ascending by value

    @property
    def all_critical(self) -> bool:
        return not self.matched_pairs


@lru_cache(maxsize=65536)
def validate(f: DiscreteMorseFunction) -> CriticalData:
    """Check conditions (i)-(iii) and return the critical/matched partition.

    Raises WeaklyIncreasingViolation, MultiplicityViolation or
    MatchingViolation with concrete witnesses otherwise.
    """
    by_value: dict[Fraction, list[Simplex]] = {}
    for s in f.complex.simplices():
        by_value.setdefault(f(s), []).append(s)
        for face in faces(s):
            if f(face) > f(s):
                raise WeaklyIncreasingViolation(face, s, f(face), f(s))
    matched = []
    critical = []
    for v, group in by_value.items():
        if len(group) > 2:
            raise MultiplicityViolation(v, sorted(group))
        if len(group) == 2:
            a, b = sorted(group, key=len)
            if dim(a) == dim(b) or a[0] not in b:
                raise MatchingViolation(a, b, v)
            matched.append((a, b))
        else:
            critical.append(group[0])
    crit_set = frozenset(critical)
    vertices = sorted((s for s in crit_set if dim(s) == 0), key=f)
    edges = sorted((s for s in crit_set if dim(s) == 1), key=f)
    return CriticalData(
        critical=crit_set,
        matched_pairs=frozenset(matched),
        critical_values=tuple(sorted(f(s) for s in crit_set)),
        critical_vertices=tuple(vertices),
        critical_edges=tuple(edges),
    )


def sublevel_complex(f: DiscreteMorseFunction, a) -> Subcomplex:
    """All simplices with value <= a (face-closed since f weakly increases)."""
    a = Fraction(a)
    return Subcomplex(
        f.complex, frozenset(s for s in f.complex.simplices() if f(s) <= a)
    )


def strict_sublevel_complex(f: DiscreteMorseFunction, a) -> Subcomplex:
    """All simplices with value strictly below a.

    This is the symbolic reading of "level a - epsilon"; no numeric epsilon
    is ever used.
    """
    a = Fraction(a)
    return Subcomplex(
        f.complex, frozenset(s for s in f.complex.simplices() if f(s) < a)
    )


def min_simplex(f: DiscreteMorseFunction, component: Subcomplex) -> Simplex:
    """The unique minimum-value simplex of a component; a critical vertex."""
    if not component.simplices:
        raise DmfError("component is empty")
    return min(component.simplices, key=f)


def is_index_ordered(f: DiscreteMorseFunction) -> bool:
    """Every critical vertex value below every critical edge value."""
    crit = validate(f)
    if not crit.critical_vertices or not crit.critical_edges:
        return True
    return f(crit.critical_vertices[-1]) < f(crit.critical_edges[0])


def is_sublevel_connected(f: DiscreteMorseFunction) -> bool:
    """Critical values of each critical-edge component form an interval.

    For every critical edge e, the critical values on the connected component
    of e in the sublevel complex at level f(e) must be contiguous inside the
    sorted list of all critical values.
    """
    crit = validate(f)
    ranks = {v: i for i, v in enumerate(crit.critical_values)}
    for e in crit.critical_edges:
        comp = connected_component(sublevel_complex(f, f(e)), e)
        got = sorted(ranks[f(s)] for s in comp.simplices if s in crit.critical)
        if got != list(range(got[0], got[-1] + 1)):
            return False
    return True


def parse_dmf_text(text: str) -> DiscreteMorseFunction:
    """Parse either dMf file format.

    A single line of 2k+1 rationals is a dMf on an oriented path (file order
    = orientation).  Otherwise, lines `v <id> <value>` and
    `e <id1> <id2> <value>` give a dMf on a tree.
    """
    lines = [
        ln.split("#", 1)[0].strip()
        for ln in text.splitlines()
        if ln.split("#", 1)[0].strip()
    ]
    if not lines:
        raise DmfError("empty dMf file")
    if len(lines) == 1 and not lines[0].startswith(("v ", "e ")):
        return DiscreteMorseFunction.on_path(
            [parse_value(tok) for tok in lines[0].split()]
        )
    vs: dict[int, Fraction] = {}
    es: dict[Simplex, Fraction] = {}
    for lineno, line in enumerate(lines, start=1):
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 3:
                vs[int(parts[1])] = parse_value(parts[2])
            elif parts[0] == "e" and len(parts) == 4:
                es[edge(int(parts[1]), int(parts[2]))] = parse_value(parts[3])
            else:
                raise ValueError
        except (ValueError, ComplexError):
            raise DmfError(f"line {lineno}: cannot parse {line!r}") from None
    from .complexes import SimplicialTree

    tree = SimplicialTree(frozenset(vs), frozenset(es))
    values: dict[Simplex, Fraction] = {(v,): x for v, x in vs.items()}
    values.update(es)
    return DiscreteMorseFunction(tree, values)


def format_dmf_text(f: DiscreteMorseFunction) -> str:
    if isinstance(f.complex, OrientedPath):
        return " ".join(format_value(x) for x in f.path_labels()) + "\n"
    lines = [f"v {v} {format_value(f((v,)))}" for v in sorted(f.complex.vertices)]
    lines += [f"e {u} {v} {format_value(f((u, v)))}" for u, v in sorted(f.complex.edges)]
    return "\n".join(lines) + "\n"
