from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from parapic import (
    AffineType,
    FiniteType,
    InvalidTypeError,
    ParseError,
    affine_cartan_matrix,
    all_affine_types,
    dual_involution,
    dual_kac_labels,
    parse_affine_type,
    twisted_type,
)

ALL_TYPES = all_affine_types()
TYPE_BY_NAME = {str(t): t for t in ALL_TYPES}

any_type = st.sampled_from(ALL_TYPES)


def test_inventory_is_the_expected_55():
    assert len(ALL_TYPES) == 55
    assert len(TYPE_BY_NAME) == 55  # names are unique
    expected = (
        [f"A{l}" for l in range(1, 9)]
        + [f"B{l}" for l in range(2, 9)]
        + [f"C{l}" for l in range(2, 9)]
        + [f"D{l}" for l in range(4, 9)]
        + ["E6", "E7", "E8", "F4", "G2"]
        + [f"A{l}~2" for l in range(2, 18)]
        + [f"D{l}~2" for l in range(4, 9)]
        + ["E6~2", "D4~3"]
    )
    assert sorted(TYPE_BY_NAME) == sorted(expected)


@given(any_type)
def test_dual_labels_are_the_primitive_positive_left_null_covector(t):
    a = affine_cartan_matrix(t)
    labels = dual_kac_labels(t)
    n = len(labels)
    # direct null-covector identity
    for j in range(n):
        assert sum(labels[i] * a[i][j] for i in range(n)) == 0
    # independent elimination oracle pins the vector itself
    assert labels == oracles.primitive_positive_left_null(a)
    assert labels[0] == 1
    assert all(1 <= x <= 6 for x in labels)
    assert gcd(*labels) == 1 if n > 1 else labels == (1,)


@given(any_type)
def test_cartan_matrix_has_corank_one(t):
    a = affine_cartan_matrix(t)
    assert oracles.rational_rank(a) == len(a) - 1


@given(any_type)
def test_cartan_matrix_sign_pattern(t):
    a = affine_cartan_matrix(t)
    n = len(a)
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)


def test_dual_coxeter_sums_match_closed_forms():
    # sum of dual labels for the untwisted series
    forms = {
        "A": lambda l: l + 1,
        "B": lambda l: 2 * l - 1,
        "C": lambda l: l + 1,
        "D": lambda l: 2 * l - 2,
    }
    exceptional = {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}
    for t in ALL_TYPES:
        if t.twist != 1:
            continue
        s = str(t)
        expect = exceptional.get(s)
        if expect is None:
            expect = forms[t.base.series](t.base.rank)
        assert sum(dual_kac_labels(t)) == expect, s


def _transpose(m):
    return tuple(tuple(row[i] for row in m) for i in range(len(m)))


def test_twisted_tables_are_transposes_of_untwisted_partners():
    pairs = [(f"A{2 * l - 1}~2", f"B{l}") for l in range(2, 9)]
    pairs += [(f"D{l}~2", f"C{l - 1}") for l in range(4, 9)]
    pairs += [("E6~2", "F4"), ("D4~3", "G2")]
    for twisted, partner in pairs:
        a = affine_cartan_matrix(TYPE_BY_NAME[twisted])
        b = affine_cartan_matrix(TYPE_BY_NAME[partner])
        assert a == _transpose(b), (twisted, partner)


def test_a2_even_twist_anchor():
    # the rank-1 twisted table, smallest member of its family
    t = TYPE_BY_NAME["A2~2"]
    assert affine_cartan_matrix(t) == ((2, -4), (-1, 2))
    assert dual_kac_labels(t) == (1, 2)


def test_involution_matches_longest_element_oracle():
    for t in ALL_TYPES:
        if t.twist != 1:
            continue
        a = affine_cartan_matrix(t)
        n = len(a)
        finite = [[a[i][j] for j in range(1, n)] for i in range(1, n)]
        expect = oracles.weyl_longest_involution(finite)
        table = dual_involution(t.base)
        got = {i - 1: table(i) - 1 for i in range(1, n)}
        assert got == expect, str(t)


def test_a_series_involution_is_index_reversal():
    for l in (1, 2, 3, 5, 8):
        fin = [
            [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(l)]
            for i in range(l)
        ]
        assert oracles.weyl_longest_involution(fin) == (
            oracles.a_series_reversal_involution(l)
        )
        table = dual_involution(FiniteType("A", l))
        assert all(table(i) == l + 1 - i for i in range(1, l + 1))


@given(any_type)
def test_involution_fixes_special_vertex_and_labels(t):
    inv = dual_involution(t.base)
    assert inv(0) == 0
    labels = dual_kac_labels(twisted_type(t.base, 1))
    for i in range(len(labels)):
        assert inv(inv(i)) == i
        assert labels[inv(i)] == labels[i]


def test_parse_round_trip():
    for t in ALL_TYPES:
        assert parse_affine_type(str(t)) is twisted_type(t.base, t.twist)


@pytest.mark.parametrize(
    "bad", ["Z9", "A0", "E5", "F6", "G3", "B3~2", "A1~2", "F4~2", "D5~3", "A3~4", ""]
)
def test_parse_rejects_invalid_names(bad):
    with pytest.raises(ParseError):
        parse_affine_type(bad)


def test_twisted_type_validates_twist_compatibility():
    with pytest.raises(InvalidTypeError):
        twisted_type(FiniteType("B", 3), 2)
    with pytest.raises(InvalidTypeError):
        twisted_type(FiniteType("D", 5), 3)
    with pytest.raises(InvalidTypeError):
        twisted_type(FiniteType("A", 2), 4)
    with pytest.raises(InvalidTypeError):
        FiniteType("D", 3)
    with pytest.raises(InvalidTypeError):
        FiniteType("H", 4)


def test_types_are_interned_and_hashable():
    t1 = parse_affine_type("D4~3")
    t2 = twisted_type(FiniteType("D", 4), 3)
    assert t1 is t2
    assert isinstance(t1, AffineType)
    assert t1.vertices == (0, 1, 2)
    assert str(t1) == "D4~3"
