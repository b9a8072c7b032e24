from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import datagen
import oracles
from parapic import (
    C2_GROUP,
    IDENTITY,
    S3_GROUP,
    TRIVIAL_GROUP,
    DomainError,
    GroupDatum,
    ParseError,
    PointDatum,
    WeightBundle,
    bundle_from_json,
    bundle_to_json,
    c_delta,
    cdelta_bundle,
    central_charge,
    datum_from_json,
    datum_to_json,
    is_dominant,
    is_pic_delta,
    load_bundle,
    load_datum,
    parse_affine_type,
    pic_basis,
    pic_delta_rank,
    vacuum_bundle,
    validate_bundle,
)

T = parse_affine_type


def point(label, typ, facet, mono=IDENTITY):
    return PointDatum(
        label, T(typ), frozenset(facet), mono, is_bad=(mono != IDENTITY)
    )


def iwahori(label, typ, mono=IDENTITY):
    t = T(typ)
    return PointDatum(
        label, t, frozenset(t.vertices), mono, is_bad=(mono != IDENTITY)
    )


def a2_two_special_datum():
    """Two order-2 points on the middle vertex of the smallest twisted
    type; the smallest datum with a charge gap above 1."""
    pts = (
        PointDatum("x1", T("A2~2"), frozenset({1}), (2, 1, 3), is_bad=True),
        PointDatum("x2", T("A2~2"), frozenset({1}), (2, 1, 3), is_bad=True),
    )
    return GroupDatum(0, C2_GROUP, pts)


def test_point_validation():
    with pytest.raises(DomainError, match="facet must be nonempty"):
        PointDatum("p", T("A2"), frozenset())
    with pytest.raises(DomainError, match="not in A2"):
        PointDatum("p", T("A2"), frozenset({5}))
    with pytest.raises(DomainError, match="does not match twist"):
        PointDatum("p", T("A2"), frozenset({0}), (2, 1, 3), is_bad=True)
    with pytest.raises(DomainError, match="trivial monodromy"):
        PointDatum("p", T("A3~2"), frozenset({0}), (2, 1, 3), is_bad=False)
    with pytest.raises(DomainError, match="must contain o"):
        PointDatum("p", T("A2"), frozenset({1}), IDENTITY, is_bad=False)
    # bad points may omit the special vertex
    PointDatum("p", T("A2"), frozenset({1}), IDENTITY, is_bad=True)


def test_datum_validation():
    p1 = iwahori("p1", "A2")
    with pytest.raises(DomainError, match="nonnegative"):
        GroupDatum(-1, TRIVIAL_GROUP, (p1,))
    with pytest.raises(DomainError, match="unique"):
        GroupDatum(0, TRIVIAL_GROUP, (p1, p1))
    with pytest.raises(DomainError, match="not in Trivial"):
        GroupDatum(0, TRIVIAL_GROUP, (iwahori("q", "D4~2", (2, 1, 3)),))
    with pytest.raises(DomainError, match="ordered product"):
        GroupDatum(0, C2_GROUP, (iwahori("q", "D4~2", (2, 1, 3)),))
    # same point list is fine once the base has a handle
    GroupDatum(1, C2_GROUP, (iwahori("q", "D4~2", (2, 1, 3)),))


def test_central_charge_anchors():
    p = point("x", "A2~2", {1}, (2, 1, 3))
    assert p.affine_type.dual_labels == (1, 2)
    assert central_charge(p, {1: 1}) == 2
    assert central_charge(p, {}) == 0
    q = iwahori("q", "A1")
    assert central_charge(q, {0: 1}) == 1
    assert central_charge(q, {0: 2, 1: 3}) == 5
    with pytest.raises(DomainError, match="outside facet"):
        central_charge(p, {0: 1})


def test_pic_basis_sorted():
    p = point("x", "C3", {2, 0, 3})
    assert pic_basis(p) == [0, 2, 3]


def test_bundle_constructors_and_validation():
    d = GroupDatum(0, TRIVIAL_GROUP, (iwahori("p1", "A2"), iwahori("p2", "B3")))
    b = WeightBundle.from_dict({"p1": {0: 1, 1: 0}, "p2": {0: 1}})
    assert b.coeffs("p1") == {0: 1}  # zero coefficients are dropped
    assert b.coeffs("nope") == {}
    validate_bundle(d, b)
    assert is_pic_delta(d, b) == (True, 1)
    assert is_dominant(d, b)
    bad = WeightBundle.from_dict({"zzz": {0: 1}})
    with pytest.raises(DomainError, match="unknown point"):
        validate_bundle(d, bad)
    dd = GroupDatum(0, TRIVIAL_GROUP, (point("p1", "A2", {0, 1}),))
    outside = WeightBundle.from_dict({"p1": {2: 1}})
    with pytest.raises(DomainError, match="outside facet"):
        validate_bundle(dd, outside)
    neg = WeightBundle.from_dict({"p1": {0: -1}, "p2": {0: -1}})
    assert is_pic_delta(d, neg) == (True, -1)
    assert not is_dominant(d, neg)
    skew = WeightBundle.from_dict({"p1": {0: 1}, "p2": {0: 2}})
    assert is_pic_delta(d, skew) == (False, None)


def test_vacuum_bundle():
    d = GroupDatum(0, TRIVIAL_GROUP, (iwahori("p1", "A2"), iwahori("p2", "G2")))
    b = vacuum_bundle(d, 3)
    assert is_pic_delta(d, b) == (True, 3)
    off = PointDatum("p1", T("A2"), frozenset({1}), IDENTITY, is_bad=True)
    d2 = GroupDatum(0, TRIVIAL_GROUP, (off,))
    with pytest.raises(DomainError, match="special vertex"):
        vacuum_bundle(d2)


def test_c_delta_iwahori_is_one():
    d = GroupDatum(
        0,
        S3_GROUP,
        (
            iwahori("p1", "D4~2", (2, 1, 3)),
            iwahori("p2", "D4~2", (1, 3, 2)),
            iwahori("p3", "D4~3", (3, 1, 2)),
        ),
    )
    assert c_delta(d) == 1


def test_c_delta_two_special_points_is_two():
    d = a2_two_special_datum()
    assert c_delta(d) == 2
    b = cdelta_bundle(d)
    assert is_pic_delta(d, b) == (True, 2)
    assert b.coeffs("x1") == {1: 1} and b.coeffs("x2") == {1: 1}


def test_c_delta_ignores_good_points():
    # good points never contribute, whatever their facet labels
    d = GroupDatum(
        0,
        TRIVIAL_GROUP,
        (point("p1", "G2", {0, 1}), point("p2", "G2", {0})),
    )
    assert not any(p.is_bad for p in d.points)
    assert c_delta(d) == 1


def test_c_delta_lcm_of_facet_gcds():
    # G2 labels (1,2,1): facet {1} contributes 2
    # E7 labels (1,2,3,4,3,2,1,2): facet {3} contributes 4, {2,3} gcd 1
    p1 = PointDatum("p1", T("G2"), frozenset({1}), IDENTITY, is_bad=True)
    p2 = PointDatum("p2", T("E7"), frozenset({3}), IDENTITY, is_bad=True)
    d = GroupDatum(0, TRIVIAL_GROUP, (p1, p2))
    assert c_delta(d) == 4  # lcm(2, 4)
    p3 = PointDatum("p3", T("E7"), frozenset({2, 3}), IDENTITY, is_bad=True)
    assert c_delta(GroupDatum(0, TRIVIAL_GROUP, (p1, p3))) == 2  # lcm(2, 1)


@given(st.integers(0, 2 ** 31))
def test_cdelta_bundle_properties(seed):
    r = random.Random(seed)
    d = datagen.random_small_datum(r)
    b = cdelta_bundle(d)
    ok, charge = is_pic_delta(d, b)
    assert ok and charge % c_delta(d) == 0 and charge > 0
    assert is_dominant(d, b)


def test_pic_delta_rank_formula_anchors():
    d1 = GroupDatum(0, TRIVIAL_GROUP, (point("p1", "A3", {0, 1, 2}),))
    assert pic_delta_rank(d1) == 3
    d2 = GroupDatum(
        0, TRIVIAL_GROUP, (point("p1", "A3", {0, 1}), point("p2", "B3", {0, 3}))
    )
    assert pic_delta_rank(d2) == 3
    with pytest.raises(DomainError):
        pic_delta_rank(GroupDatum(0, TRIVIAL_GROUP, ()))


@given(st.integers(0, 2 ** 31))
def test_pic_delta_rank_matches_kernel_oracle(seed):
    d = datagen.random_small_datum(random.Random(seed))
    assert pic_delta_rank(d) == oracles.charge_difference_kernel_rank(d)


def test_datum_json_round_trip():
    r = random.Random(4)
    for gen in datagen.IWAHORI_GENERATORS.values():
        d = gen(r)
        blob = datum_to_json(d)
        assert blob["schema"] == 1
        assert datum_from_json(blob) == d
        # byte-stable under sort_keys
        s = json.dumps(blob, sort_keys=True)
        assert json.dumps(datum_to_json(datum_from_json(json.loads(s))),
                          sort_keys=True) == s


def test_bundle_json_round_trip():
    b = WeightBundle.from_dict({"p1": {0: 2, 3: 1}, "p2": {1: 4}})
    blob = bundle_to_json(b)
    assert blob["schema"] == 1
    assert bundle_from_json(blob) == b


def test_json_rejects_malformed_payloads():
    with pytest.raises(ParseError):
        datum_from_json({"schema": 1})
    with pytest.raises(ParseError):
        datum_from_json({"schema": 99, "genus": 0, "group": "S3", "points": []})
    with pytest.raises(ParseError):
        bundle_from_json({"schema": 1})
    with pytest.raises(ParseError):
        bundle_from_json([1, 2, 3])


def test_load_helpers(tmp_path):
    d = a2_two_special_datum()
    b = cdelta_bundle(d)
    dp = tmp_path / "datum.json"
    bp = tmp_path / "bundle.json"
    dp.write_text(json.dumps(datum_to_json(d)))
    bp.write_text(json.dumps(bundle_to_json(b)))
    assert load_datum(str(dp)) == d
    assert load_bundle(str(bp)) == b
