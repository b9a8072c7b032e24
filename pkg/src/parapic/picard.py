"""Picard lattices of products of partial affine flag varieties.

A marked point carries an affine type, a facet Y (nonempty vertex
subset), a local monodromy and a bad-point flag.  A weight bundle assigns
integer coefficients n_i, i in Y_x, to each point; its central charge at
a point is sum n_i * l_i over the dual labels l.  The diagonal sublattice
consists of bundles whose charges agree at every point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, lcm
from typing import Mapping

from . import covers, dynkin
from .errors import (
    DomainError,
    InternalInconsistencyError,
    ParseError,
)


@dataclass(frozen=True)
class PointDatum:
    label: str
    affine_type: dynkin.AffineType
    facet: frozenset[int]
    monodromy: covers.Perm = covers.IDENTITY
    is_bad: bool = False

    def __post_init__(self):
        object.__setattr__(self, "facet", frozenset(self.facet))
        if not self.facet:
            raise DomainError(f"point {self.label}: facet must be nonempty")
        verts = set(self.affine_type.vertices)
        if not self.facet <= verts:
            bad = sorted(self.facet - verts)
            raise DomainError(
                f"point {self.label}: facet vertices {bad} not in {self.affine_type}"
            )
        if covers.perm_order(self.monodromy) != self.affine_type.twist:
            raise DomainError(
                f"point {self.label}: monodromy order "
                f"{covers.perm_order(self.monodromy)} does not match twist "
                f"{self.affine_type.twist} of {self.affine_type}"
            )
        if not self.is_bad:
            if self.monodromy != covers.IDENTITY:
                raise DomainError(
                    f"point {self.label}: a good point must have trivial monodromy"
                )
            if 0 not in self.facet:
                raise DomainError(
                    f"point {self.label}: a good point's facet must contain o"
                )

    @property
    def is_iwahori(self) -> bool:
        return self.facet == set(self.affine_type.vertices)


@dataclass(frozen=True)
class GroupDatum:
    base_genus: int
    gamma: covers.FiniteGroup
    points: tuple[PointDatum, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.base_genus < 0:
            raise DomainError("base genus must be nonnegative")
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise DomainError("point labels must be unique")
        for p in self.points:
            if p.monodromy not in self.gamma:
                raise DomainError(
                    f"point {p.label}: monodromy {covers.element_name(p.monodromy)} "
                    f"is not in {self.gamma}"
                )
        if self.base_genus == 0:
            acc = covers.IDENTITY
            for p in self.points:
                acc = covers.compose(acc, p.monodromy)
            if acc != covers.IDENTITY:
                raise DomainError(
                    "genus-0 datum: ordered product of monodromies must be e, "
                    f"got {covers.element_name(acc)}"
                )

    @property
    def bad_points(self) -> tuple[PointDatum, ...]:
        return tuple(p for p in self.points if p.is_bad)

    def point(self, label: str) -> PointDatum:
        for p in self.points:
            if p.label == label:
                return p
        raise DomainError(f"no point labelled {label!r}")


@dataclass(frozen=True)
class WeightBundle:
    """Per-point coefficient maps; absent vertices mean coefficient 0."""

    entries: tuple[tuple[str, tuple[tuple[int, int], ...]], ...]

    @staticmethod
    def from_dict(weights: Mapping[str, Mapping[int, int]]) -> "WeightBundle":
        entries = tuple(
            sorted(
                (
                    str(lab),
                    tuple(
                        sorted((int(v), int(n)) for v, n in m.items() if int(n) != 0)
                    ),
                )
                for lab, m in weights.items()
            )
        )
        return WeightBundle(entries)

    def coeffs(self, label: str) -> dict[int, int]:
        for lab, pairs in self.entries:
            if lab == label:
                return dict(pairs)
        return {}

    def as_dict(self) -> dict[str, dict[int, int]]:
        return {lab: dict(pairs) for lab, pairs in self.entries}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.entries)


def validate_bundle(d: GroupDatum, b: WeightBundle) -> None:
    known = {p.label: p for p in d.points}
    for lab in b.labels:
        if lab not in known:
            raise DomainError(f"bundle names unknown point {lab!r}")
        p = known[lab]
        for v in b.coeffs(lab):
            if v not in p.facet:
                raise DomainError(
                    f"point {lab}: coefficient at vertex {v} outside facet "
                    f"{sorted(p.facet)}"
                )


def pic_basis(p: PointDatum) -> list[int]:
    """Basis vertex indices of the point's Picard lattice, increasing."""
    return sorted(p.facet)


def central_charge(p: PointDatum, coeffs: Mapping[int, int]) -> int:
    labels = p.affine_type.dual_labels
    total = 0
    for v, n in coeffs.items():
        if v not in p.facet:
            raise DomainError(
                f"point {p.label}: coefficient at vertex {v} outside facet "
                f"{sorted(p.facet)}"
            )
        total += n * labels[v]
    return total


def is_dominant(d: GroupDatum, b: WeightBundle) -> bool:
    validate_bundle(d, b)
    return all(n >= 0 for lab in b.labels for n in b.coeffs(lab).values())


def is_pic_delta(d: GroupDatum, b: WeightBundle):
    """(True, common charge) when all central charges agree, else
    (False, None)."""
    validate_bundle(d, b)
    charges = [central_charge(p, b.coeffs(p.label)) for p in d.points]
    if len(set(charges)) <= 1:
        return True, (charges[0] if charges else 0)
    return False, None


def c_delta(d: GroupDatum) -> int:
    """lcm over bad points of the gcd of dual labels over the facet."""
    out = 1
    for p in d.bad_points:
        labels = p.affine_type.dual_labels
        out = lcm(out, gcd(*(labels[i] for i in p.facet)))
    return out


def pic_delta_rank(d: GroupDatum) -> int:
    if not d.points:
        raise DomainError("datum has no points")
    return sum(len(p.facet) for p in d.points) - (len(d.points) - 1)


def vacuum_bundle(d: GroupDatum, charge: int = 1) -> WeightBundle:
    """The bundle with coefficient ``charge`` at the special vertex of
    every point (defined only when every facet contains o)."""
    for p in d.points:
        if 0 not in p.facet:
            raise DomainError(
                f"point {p.label}: facet does not contain the special vertex"
            )
    return WeightBundle.from_dict({p.label: {0: charge} for p in d.points})


def _representable(target: int, labels) -> bool:
    ok = [False] * (target + 1)
    ok[0] = True
    for n in range(1, target + 1):
        ok[n] = any(n >= a and ok[n - a] for a in labels)
    return ok[target]


def _single_vertex(p: PointDatum, charge: int):
    labels = p.affine_type.dual_labels
    for i in sorted(p.facet):
        if charge % labels[i] == 0:
            return {i: charge // labels[i]}
    return None


def _combination(p: PointDatum, charge: int) -> dict[int, int]:
    verts = sorted(p.facet)
    labels = p.affine_type.dual_labels

    def go(idx: int, rem: int):
        if rem == 0:
            return {}
        if idx == len(verts):
            return None
        v = verts[idx]
        for n in range(rem // labels[v], -1, -1):
            rest = go(idx + 1, rem - n * labels[v])
            if rest is not None:
                if n:
                    rest = {v: n, **rest}
                return rest
        return None

    out = go(0, charge)
    if out is None:
        raise InternalInconsistencyError(
            f"point {p.label}: charge {charge} not representable"
        )
    return out


def cdelta_bundle(d: GroupDatum) -> WeightBundle:
    """A dominant diagonal bundle whose charge is the least multiple of
    c_delta representable as a nonnegative facet-label combination at
    every point (it equals c_delta itself whenever each facet has a
    label dividing it).  Single-vertex supports are preferred, smallest
    qualifying vertex first."""
    base = c_delta(d)
    label_sets = [
        sorted({p.affine_type.dual_labels[i] for i in p.facet}) for p in d.points
    ]
    for k in range(1, 201):
        charge = base * k
        if all(_representable(charge, ls) for ls in label_sets):
            weights = {}
            for p in d.points:
                coeffs = _single_vertex(p, charge)
                if coeffs is None:
                    coeffs = _combination(p, charge)
                weights[p.label] = coeffs
            return WeightBundle.from_dict(weights)
    raise InternalInconsistencyError("no representable multiple of c_delta found")


# ---------------------------------------------------------------------------
# JSON schema (versioned: "schema": 1)

SCHEMA_VERSION = 1


def datum_to_json(d: GroupDatum) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "genus": d.base_genus,
        "group": d.gamma.kind,
        "points": [
            {
                "label": p.label,
                "type": str(p.affine_type),
                "facet": sorted(p.facet),
                "monodromy": covers.element_name(p.monodromy),
                "bad": p.is_bad,
            }
            for p in d.points
        ],
    }


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def datum_from_json(obj) -> GroupDatum:
    if not isinstance(obj, dict):
        raise ParseError("datum: expected a JSON object")
    if _require(obj, "schema", "datum") != SCHEMA_VERSION:
        raise ParseError(f"datum: unsupported schema {obj['schema']!r}")
    genus = _require(obj, "genus", "datum")
    if not isinstance(genus, int) or genus < 0:
        raise ParseError("datum: genus must be a nonnegative integer")
    gamma = covers.group_from_name(str(_require(obj, "group", "datum")))
    points = []
    raw_points = _require(obj, "points", "datum")
    if not isinstance(raw_points, list):
        raise ParseError("datum: points must be a list")
    for i, raw in enumerate(raw_points):
        where = f"points[{i}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{where}: expected an object")
        label = str(_require(raw, "label", where))
        at = dynkin.parse_affine_type(str(_require(raw, "type", where)))
        facet = _require(raw, "facet", where)
        if not isinstance(facet, list) or not all(isinstance(v, int) for v in facet):
            raise ParseError(f"{where}: facet must be a list of integers")
        monodromy = covers.parse_element(str(raw.get("monodromy", "e")))
        bad = raw.get("bad", monodromy != covers.IDENTITY)
        if not isinstance(bad, bool):
            raise ParseError(f"{where}: bad must be a boolean")
        try:
            points.append(
                PointDatum(
                    label=label,
                    affine_type=at,
                    facet=frozenset(facet),
                    monodromy=monodromy,
                    is_bad=bad,
                )
            )
        except DomainError as e:
            raise ParseError(f"{where}: {e}") from e
    try:
        return GroupDatum(base_genus=genus, gamma=gamma, points=tuple(points))
    except DomainError as e:
        raise ParseError(f"datum: {e}") from e


def bundle_to_json(b: WeightBundle) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "weights": {
            lab: {str(v): n for v, n in pairs} for lab, pairs in b.entries
        },
    }


def bundle_from_json(obj) -> WeightBundle:
    if not isinstance(obj, dict):
        raise ParseError("bundle: expected a JSON object")
    if _require(obj, "schema", "bundle") != SCHEMA_VERSION:
        raise ParseError(f"bundle: unsupported schema {obj['schema']!r}")
    raw = _require(obj, "weights", "bundle")
    if not isinstance(raw, dict):
        raise ParseError("bundle: weights must be an object")
    weights: dict[str, dict[int, int]] = {}
    for lab, m in raw.items():
        if not isinstance(m, dict):
            raise ParseError(f"bundle: weights[{lab!r}] must be an object")
        try:
            weights[str(lab)] = {int(v): int(n) for v, n in m.items()}
        except (TypeError, ValueError) as e:
            raise ParseError(f"bundle: weights[{lab!r}]: {e}") from e
    return WeightBundle.from_dict(weights)


def load_datum(path: str) -> GroupDatum:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON ({e})") from e
    return datum_from_json(obj)


def load_bundle(path: str) -> WeightBundle:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON ({e})") from e
    return bundle_from_json(obj)
