r"""Finite and twisted affine Dynkin diagram data.

Every affine type carries its vertex set {0, 1, ..., k} (0 is the special
vertex ``o``), its generalized Cartan matrix A (convention
A[i][j] = 2(a_i, a_j)/(a_i, a_i), so a double arrow pointing from i to j
means A[j][i] = -2), and its dual labels: the primitive positive integer
vector ``l`` with ``l . A = 0`` normalized so l[0] = 1.

Vertex numbering (untwisted types; the affine vertex is always 0):

    A1    0 <=> 1                      (quadruple bond, A = [[2,-2],[-2,2]])
    Al    0 - 1 - 2 - ... - l - 0      (cycle, l >= 2)
    Bl    0   1                        (l >= 3; also B2 with 0,1 both
           \ /                          joined to 2 by arrows into 2)
            2 - 3 - ... - (l-1) => l
    Cl    0 => 1 - 2 - ... - (l-1) <= l
    Dl    0   1         (l-1)
           \ /            |
            2 - 3 - ... (l-2) - l
    E6    1 - 2 - 3 - 4 - 5   with 6 on 3 and 0 on 6
    E7    0 - 1 - 2 - 3 - 4 - 5 - 6   with 7 on 3
    E8    0 - 1 - 2 - 3 - 4 - 5 - 6 - 7   with 8 on 5
    F4    0 - 1 - 2 => 3 - 4
    G2    0 - 1 ≡> 2   (triple bond; vertex 1 long, 2 short)

Twisted types (obtained by transposing an untwisted Cartan matrix, which
swaps marks and dual labels):

    A2~2        0 <≡≡ 1                (A = [[2,-4],[-1,2]])
    A(2l)~2     0 <= 1 - ... - (l-1) <= l          (l >= 2)
    A(2l-1)~2   0   1                              (l >= 2)
                 \ /
                  2 - ... - (l-1) <= l
    Dl~2        0 <= 1 - ... - (l-2) => (l-1)      (base D_l, l >= 4)
    E6~2        0 - 1 - 2 <= 3 - 4
    D4~3        0 - 1 <≡ 2

Serialized names: "A3" or "A3~1" for untwisted, "A3~2" etc. for twisted;
the compact form (no "~1") is used on output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidTypeError, ParseError

_SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "F": 4, "G": 2}

#: Inventory bounds for :func:`all_affine_types` (the constructor itself
#: accepts any rank above the series minimum).
_UNTWISTED_MAX_RANK = 8
_A2_MAX_RANK = 17
_D2_MAX_RANK = 8


@dataclass(frozen=True)
class FiniteType:
    """A simple finite type such as A5 or E7."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG":
            raise InvalidTypeError(f"unknown series {self.series!r}")
        if self.series == "E":
            if self.rank not in (6, 7, 8):
                raise InvalidTypeError(f"E{self.rank} is not a finite type")
        elif self.series == "F":
            if self.rank != 4:
                raise InvalidTypeError(f"F{self.rank} is not a finite type")
        elif self.series == "G":
            if self.rank != 2:
                raise InvalidTypeError(f"G{self.rank} is not a finite type")
        elif self.rank < _SERIES_MIN_RANK[self.series]:
            raise InvalidTypeError(
                f"{self.series}{self.rank} is below the minimal rank "
                f"{_SERIES_MIN_RANK[self.series]} of series {self.series}"
            )

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class VertexInvolution:
    """A self-inverse vertex map, fixing the special vertex 0."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = dict(self.pairs)
        for i, j in self.pairs:
            if m.get(j) != i:
                raise InvalidTypeError("involution is not self-inverse")
        if m.get(0, 0) != 0:
            raise InvalidTypeError("involution must fix the special vertex")

    def __call__(self, i: int) -> int:
        return dict(self.pairs).get(i, i)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in self.pairs)


@dataclass(frozen=True)
class AffineType:
    """A (possibly twisted) affine Dynkin type with its verified tables."""

    base: FiniteType
    twist: int
    cartan: tuple[tuple[int, ...], ...]
    dual_labels: tuple[int, ...]

    #: index of the special vertex o
    special_vertex = 0

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(len(self.dual_labels)))

    def __str__(self) -> str:
        if self.twist == 1:
            return str(self.base)
        return f"{self.base}~{self.twist}"


def _matrix(n: int, off: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in range(n):
        row = [2 if i == j else 0 for j in range(n)]
        rows.append(row)
    for (i, j), v in off.items():
        rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def _chain(edges):
    """Symmetric single bonds for each (i, j) pair."""
    off = {}
    for i, j in edges:
        off[(i, j)] = -1
        off[(j, i)] = -1
    return off


def _untwisted_tables(base: FiniteType):
    s, l = base.series, base.rank
    if s == "A":
        if l == 1:
            return _matrix(2, {(0, 1): -2, (1, 0): -2}), (1, 1)
        off = _chain([(i, i + 1) for i in range(l)] + [(l, 0)])
        return _matrix(l + 1, off), tuple([1] * (l + 1))
    if s == "B":
        if l == 2:
            off = {(0, 2): -1, (2, 0): -2, (1, 2): -1, (2, 1): -2}
            return _matrix(3, off), (1, 1, 1)
        off = _chain([(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, l - 1)])
        off[(l - 1, l)] = -1
        off[(l, l - 1)] = -2
        labels = (1, 1) + (2,) * (l - 2) + (1,)
        return _matrix(l + 1, off), labels
    if s == "C":
        off = _chain([(i, i + 1) for i in range(1, l - 1)])
        off[(0, 1)] = -1
        off[(1, 0)] = -2
        off[(l - 1, l)] = -2
        off[(l, l - 1)] = -1
        return _matrix(l + 1, off), tuple([1] * (l + 1))
    if s == "D":
        off = _chain(
            [(0, 2), (1, 2)]
            + [(i, i + 1) for i in range(2, l - 2)]
            + [(l - 2, l - 1), (l - 2, l)]
        )
        labels = (1, 1) + (2,) * (l - 3) + (1, 1)
        return _matrix(l + 1, off), labels
    if s == "E":
        if l == 6:
            off = _chain([(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)])
            return _matrix(7, off), (1, 1, 2, 3, 2, 1, 2)
        if l == 7:
            off = _chain([(i, i + 1) for i in range(6)] + [(3, 7)])
            return _matrix(8, off), (1, 2, 3, 4, 3, 2, 1, 2)
        off = _chain([(i, i + 1) for i in range(7)] + [(5, 8)])
        return _matrix(9, off), (1, 2, 3, 4, 5, 6, 4, 2, 3)
    if s == "F":
        off = _chain([(0, 1), (1, 2), (3, 4)])
        off[(2, 3)] = -1
        off[(3, 2)] = -2
        return _matrix(5, off), (1, 2, 3, 2, 1)
    # G2
    off = {(0, 1): -1, (1, 0): -1, (1, 2): -1, (2, 1): -3}
    return _matrix(3, off), (1, 2, 1)


def _twisted_tables(base: FiniteType, order: int):
    s, l = base.series, base.rank
    if order == 2 and s == "A":
        if l == 2:
            return _matrix(2, {(0, 1): -4, (1, 0): -1}), (1, 2)
        if l % 2 == 0:  # A(2m)~2, m >= 2, vertices 0..m
            m = l // 2
            off = _chain([(i, i + 1) for i in range(1, m - 1)])
            off[(0, 1)] = -2
            off[(1, 0)] = -1
            off[(m - 1, m)] = -2
            off[(m, m - 1)] = -1
            return _matrix(m + 1, off), (1,) + (2,) * m
        # A(2m-1)~2, m >= 2, vertices 0..m
        m = (l + 1) // 2
        if m == 2:
            off = {(0, 2): -2, (2, 0): -1, (1, 2): -2, (2, 1): -1}
            return _matrix(3, off), (1, 1, 2)
        off = _chain([(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, m - 1)])
        off[(m - 1, m)] = -2
        off[(m, m - 1)] = -1
        return _matrix(m + 1, off), (1, 1) + (2,) * (m - 1)
    if order == 2 and s == "D":  # Dl~2, vertices 0..l-1
        off = _chain([(i, i + 1) for i in range(1, l - 2)])
        off[(0, 1)] = -2
        off[(1, 0)] = -1
        off[(l - 2, l - 1)] = -1
        off[(l - 1, l - 2)] = -2
        return _matrix(l, off), (1,) + (2,) * (l - 2) + (1,)
    if order == 2 and s == "E":  # E6~2, vertices 0..4
        off = _chain([(0, 1), (1, 2), (3, 4)])
        off[(2, 3)] = -2
        off[(3, 2)] = -1
        return _matrix(5, off), (1, 2, 3, 4, 2)
    # D4~3, vertices 0..2
    off = {(0, 1): -1, (1, 0): -1, (1, 2): -3, (2, 1): -1}
    return _matrix(3, off), (1, 2, 3)


def _verify(t: AffineType) -> None:
    """Check the stored tables against the defining properties.

    Tables are generated from per-family formulas; this construction-time
    check (null covector, normalization, primitivity, bounded entries,
    corank one, sign pattern) catches any transcription slip.
    """
    a, labels = t.cartan, t.dual_labels
    n = len(labels)
    assert len(a) == n and all(len(r) == n for r in a)
    for j in range(n):
        if sum(labels[i] * a[i][j] for i in range(n)) != 0:
            raise InvalidTypeError(f"{t}: dual labels are not a null covector")
    if labels[0] != 1 or any(x < 1 or x > 6 for x in labels):
        raise InvalidTypeError(f"{t}: dual labels out of range")
    if gcd(*labels) != 1:
        raise InvalidTypeError(f"{t}: dual labels not primitive")
    for i in range(n):
        if a[i][i] != 2:
            raise InvalidTypeError(f"{t}: diagonal must be 2")
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise InvalidTypeError(f"{t}: bad off-diagonal pattern")
    if _rank([[Fraction(x) for x in row] for row in a]) != n - 1:
        raise InvalidTypeError(f"{t}: corank is not one")


def _rank(rows) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


@lru_cache(maxsize=None)
def twisted_type(base: FiniteType, order: int) -> AffineType:
    """The affine type obtained from ``base`` twisted by an order-r
    diagram automorphism (r = 1 is the untwisted affinization)."""
    if order not in (1, 2, 3):
        raise InvalidTypeError(f"twist order must be 1, 2 or 3, got {order}")
    if order == 1:
        cartan, labels = _untwisted_tables(base)
    elif order == 2:
        ok = (
            (base.series == "A" and base.rank >= 2)
            or base.series == "D"
            or (base.series == "E" and base.rank == 6)
        )
        if not ok:
            raise InvalidTypeError(f"({base}, 2) admits no order-2 twist")
        cartan, labels = _twisted_tables(base, 2)
    else:
        if (base.series, base.rank) != ("D", 4):
            raise InvalidTypeError(f"({base}, 3) admits no order-3 twist")
        cartan, labels = _twisted_tables(base, 3)
    t = AffineType(base=base, twist=order, cartan=cartan, dual_labels=labels)
    _verify(t)
    return t


def affine_cartan_matrix(t: AffineType) -> tuple[tuple[int, ...], ...]:
    return t.cartan


def dual_kac_labels(t: AffineType) -> tuple[int, ...]:
    return t.dual_labels


_TYPE_RE = re.compile(r"^([A-G])(\d+)(?:~([123]))?$")


def parse_affine_type(s: str) -> AffineType:
    m = _TYPE_RE.match(s.strip())
    if not m:
        raise ParseError(f"cannot parse affine type {s!r} (expected e.g. 'A3~2')")
    series, rank, twist = m.group(1), int(m.group(2)), int(m.group(3) or 1)
    try:
        return twisted_type(FiniteType(series, rank), twist)
    except InvalidTypeError as e:
        raise ParseError(str(e)) from e


def dual_involution(base: FiniteType) -> VertexInvolution:
    """The vertex involution i -> i* induced by minus the longest Weyl
    element on the finite diagram, extended to the affine diagram by
    fixing the special vertex (0* = 0)."""
    s, l = base.series, base.rank
    pairs = {0: 0}
    for i in range(1, l + 1):
        pairs[i] = i
    if s == "A":
        for i in range(1, l + 1):
            pairs[i] = l + 1 - i
    elif s == "D" and l % 2 == 1:
        pairs[l - 1], pairs[l] = l, l - 1
    elif s == "E" and l == 6:
        pairs.update({1: 5, 5: 1, 2: 4, 4: 2})
    return VertexInvolution(tuple(sorted(pairs.items())))


def all_affine_types() -> list[AffineType]:
    """The enumerated type inventory (criteria suites run over this)."""
    out = []
    for l in range(1, _UNTWISTED_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("A", l), 1))
    for l in range(2, _UNTWISTED_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("B", l), 1))
    for l in range(2, _UNTWISTED_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("C", l), 1))
    for l in range(4, _UNTWISTED_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("D", l), 1))
    for l in (6, 7, 8):
        out.append(twisted_type(FiniteType("E", l), 1))
    out.append(twisted_type(FiniteType("F", 4), 1))
    out.append(twisted_type(FiniteType("G", 2), 1))
    for l in range(2, _A2_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("A", l), 2))
    for l in range(4, _D2_MAX_RANK + 1):
        out.append(twisted_type(FiniteType("D", l), 2))
    out.append(twisted_type(FiniteType("E", 6), 2))
    out.append(twisted_type(FiniteType("D", 4), 3))
    return out
