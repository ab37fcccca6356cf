from __future__ import annotations

from fractions import Fraction

import pytest

from morsemerge.complexes import OrientedPath
from morsemerge.dmf import (
    DiscreteMorseFunction,
    DmfError,
    MatchingViolation,
    MultiplicityViolation,
    WeaklyIncreasingViolation,
    format_dmf_text,
    is_index_ordered,
    is_sublevel_connected,
    min_simplex,
    parse_dmf_text,
    strict_sublevel_complex,
    sublevel_complex,
    validate,
)
from morsemerge.complexes import connected_component

from conftest import on_path


def test_validate_matched_pair_example():
    # vertices (3,0,1), edges (3,2): the maximum sits on a matched pair
    f = on_path([3, 3, 0, 2, 1])
    crit = validate(f)
    assert crit.matched_pairs == {((0,), (0, 1))}
    assert sorted(crit.critical_values) == [0, 1, 2]
    assert not crit.all_critical


def test_validate_all_critical_minimal():
    crit = validate(on_path([0, 2, 1]))
    assert crit.all_critical and len(crit.critical) == 3


def test_validate_weakly_increasing_violation():
    with pytest.raises(WeaklyIncreasingViolation):
        validate(on_path([1, 0, 2]))


def test_validate_multiplicity_violation():
    # value 1 on three pairwise non-incident simplices
    f = on_path([1, 2, 1, 3, 1])
    with pytest.raises(MultiplicityViolation):
        validate(f)


def test_validate_matching_violation():
    # two vertices share a value without a common edge
    f = on_path([1, 2, 0, 3, 1])
    with pytest.raises(MatchingViolation):
        validate(f)


def test_index_ordered_examples():
    assert is_index_ordered(on_path([0, 4, 1, 6, 2, 5, 3]))
    assert not is_index_ordered(on_path([0, 2, 1, 6, 3, 5, 4]))
    assert is_index_ordered(on_path([0, 2, 1]))


def test_sublevel_connected_examples():
    assert not is_sublevel_connected(on_path([0, 4, 1, 6, 2, 5, 3]))
    assert is_sublevel_connected(on_path([0, 2, 1, 6, 3, 5, 4]))
    assert is_sublevel_connected(on_path([0]))


def test_min_simplex_examples():
    f = on_path([0, 4, 1, 5, 2, 6, 3])
    whole = sublevel_complex(f, 6)
    assert f(min_simplex(f, whole)) == 0
    single = connected_component(strict_sublevel_complex(f, 5), (2,))
    assert min_simplex(f, single) == (2,)


def test_min_simplex_with_matched_pair():
    # component {v(3), e(3), v(0)}: minimum on the critical vertex 0
    f = on_path([3, 3, 0, 2, 1])
    comp = connected_component(sublevel_complex(f, 3), (0,))
    assert min_simplex(f, comp) == (1,)
    assert f((1,)) == 0


def test_max_on_matched_pair_is_not_critical():
    # the remark's example: maximum value 3 on a matched vertex/edge pair
    f = on_path([3, 3, 0, 2, 1])
    crit = validate(f)
    assert max(f(s) for s in f.complex.simplices()) == 3
    assert all(f(s) != 3 for s in crit.critical)


def test_values_are_exact_fractions():
    f = on_path([Fraction(1, 3), Fraction(5, 2), 1])
    assert f((0,)) == Fraction(1, 3)
    assert validate(f).all_critical


def test_on_path_needs_odd_count():
    with pytest.raises(DmfError):
        on_path([0, 1])


def test_path_format_roundtrip():
    f = on_path([0, 4, 1, 5, 2, 6, 3])
    assert format_dmf_text(f) == "0 4 1 5 2 6 3\n"
    assert parse_dmf_text(format_dmf_text(f)) == f


def test_tree_format_roundtrip():
    text = "v 0 0\nv 1 1\nv 2 2\ne 0 1 3\ne 1 2 4\n"
    f = parse_dmf_text(text)
    assert format_dmf_text(f) == text
    assert parse_dmf_text("0 2 1").complex == OrientedPath((0, 1))


def test_fractional_values_in_files():
    f = parse_dmf_text("1/3 5/2 1\n")
    assert f((0,)) == Fraction(1, 3)
    assert format_dmf_text(f) == "1/3 5/2 1\n"


def test_missing_value_rejected():
    path = OrientedPath((0, 1))
    with pytest.raises(DmfError):
        DiscreteMorseFunction(path, {(0,): Fraction(0), (1,): Fraction(1)})


def test_scaling_preserves_validity():
    f = on_path([0, 4, 1, 6, 2, 5, 3])
    g = f.scaled(Fraction(1, 2))
    assert validate(g).critical_values == tuple(
        v / 2 for v in validate(f).critical_values
    )
