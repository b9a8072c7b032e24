"""Exact rank evaluation for block factors.

Three ingredients: an exact scalar type closed under the arithmetic the
level-1 S3 character sum needs (rationals times an optional factor of
sqrt(2)); the rank table for the recognized base cases; and the genus-g
closed form 2^g * r^(g+n-1) for order-2 twists of type A_{2r-1}.

Unknown ranks are a distinct outcome (:class:`UnknownRankError`), never
conflated with 0 — the descent criterion is one-sided, so a missing
table entry must not be read as vanishing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .covers import (
    IDENTITY,
    RamificationVector,
    S3_GROUP,
    compose,
    perm_order,
    subgroup_generated,
)
from .dynkin import dual_involution
from .errors import (
    BoundUnavailableError,
    DomainError,
    InternalInconsistencyError,
    UnknownRankError,
)
from .factorization import (
    CLOSED_FORM_A,
    ELLIPTIC_TRIPLE,
    S3_CASE1,
    S3_CASE2,
    S3_CASE3,
    S3_CASE4,
    TWISTED_PAIR,
    UNTWISTED_VACUUM,
    BaseCase,
    vacuum_weight,
)


@dataclass(frozen=True)
class ExactScalar:
    """A number of the form q * sqrt(2)^h with q rational.

    Canonical form keeps h in {0, 1} (even powers of sqrt(2) are
    absorbed into q) and represents zero as (0, 0).
    """

    rational: Fraction
    root2_exponent: int

    @staticmethod
    def make(rational, root2_exponent: int = 0) -> "ExactScalar":
        q = Fraction(rational)
        h = int(root2_exponent)
        if q == 0:
            return ExactScalar(Fraction(0), 0)
        if h >= 2 or h <= -1:
            # shift h into {0, 1}
            shift = h - (h % 2)
            q *= Fraction(2) ** (shift // 2)
            h -= shift
        return ExactScalar(q, h)

    @property
    def sign(self) -> int:
        if self.rational > 0:
            return 1
        if self.rational < 0:
            return -1
        return 0

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar.make(
            self.rational * other.rational,
            self.root2_exponent + other.root2_exponent,
        )

    def __truediv__(self, other: "ExactScalar") -> "ExactScalar":
        if other.rational == 0:
            raise ZeroDivisionError("division by zero ExactScalar")
        # 1/sqrt(2) = sqrt(2)/2
        return ExactScalar.make(
            self.rational / other.rational / (2 if other.root2_exponent else 1),
            self.root2_exponent + other.root2_exponent,
        )

    def __pow__(self, n: int) -> "ExactScalar":
        n = int(n)
        if n < 0:
            return ONE / (self ** (-n))
        return ExactScalar.make(self.rational**n, self.root2_exponent * n)

    def is_integer(self) -> bool:
        return self.root2_exponent == 0 and self.rational.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise DomainError(f"{self} is not an integer")
        return int(self.rational)

    def __str__(self) -> str:
        if self.root2_exponent == 0:
            return str(self.rational)
        return f"{self.rational}*sqrt(2)"


ONE = ExactScalar.make(1)

#: vacuum-column S-matrix entries for the level-1 S3 character sum
S_00 = ExactScalar.make(Fraction(1, 2))
S_TRANSPOSITION_00 = ExactScalar.make(Fraction(1, 2), 1)  # = 2^(-1/2)
S_THREE_CYCLE_00 = ExactScalar.make(1)


def s_entry(p) -> ExactScalar:
    o = perm_order(p)
    if o == 1:
        return S_00
    if o == 2:
        return S_TRANSPOSITION_00
    return S_THREE_CYCLE_00


@dataclass(frozen=True)
class RankResult:
    """An exact rank plus the factor ranks (or formula) it came from."""

    value: int
    derivation: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "derivation", tuple(self.derivation))
        recomputed = prod(v for _lab, v in self.derivation)
        if recomputed != self.value:
            raise InternalInconsistencyError(
                f"rank derivation product {recomputed} != value {self.value}"
            )


def rank_closed_form_A(g: int, n: int, r: int) -> int:
    """2^g * r^(g+n-1): the genus-g rank for 2n order-2 branch points of
    type A_{2r-1} twisted, all weights vacuum at level one."""
    g, n, r = int(g), int(n), int(r)
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    if n < 1:
        raise DomainError(f"branch-pair count must be >= 1, got {n}")
    if r < 2:
        raise DomainError(f"type parameter r must be >= 2, got {r}")
    return 2**g * r ** (g + n - 1)


def _is_vacuum(weight, charge=None) -> bool:
    if len(weight) != 1 or weight[0][0] != 0:
        return False
    return charge is None or weight[0][1] == charge


def _single_vertex(weight):
    """(vertex, coefficient) when the weight is supported on one vertex."""
    if len(weight) == 1:
        return weight[0]
    return None


def base_case_rank(b: BaseCase) -> RankResult:
    """Exact rank of one factor, per the recognized table.

    Raises UnknownRankError outside the table; note rank 0 (a known
    vanishing) is different from unknown.
    """
    k = b.kind
    if k == UNTWISTED_VACUUM:
        w = b.weights[0] if b.weights else vacuum_weight(1)
        if _is_vacuum(w):
            return RankResult(1, ((k, 1),))
        sv = _single_vertex(w)
        if sv is not None:
            # a single non-vacuum point on the line has no invariants
            return RankResult(0, ((k + " (non-vacuum single vertex)", 0),))
        raise UnknownRankError(
            f"no rank table entry for a one-point weight {w}"
        )
    if k == TWISTED_PAIR:
        w1, w2 = b.weights
        if b.types is not None and b.types[0] != b.types[1]:
            raise UnknownRankError(
                "twisted pair rank needs matching point types"
            )
        if _is_vacuum(w1) and w1 == w2:
            return RankResult(1, ((k + " (vacuum)", 1),))
        if b.types is None:
            raise UnknownRankError(
                "twisted pair rank needs the point types for non-vacuum weights"
            )
        t = b.types[0]
        s1, s2 = _single_vertex(w1), _single_vertex(w2)
        if s1 is None or s2 is None:
            raise UnknownRankError(
                f"no rank table entry for pair weights {w1}, {w2}"
            )
        if t.twist == 1:
            inv = dual_involution(t.base)
            if s2 == (inv(s1[0]), s1[1]):
                return RankResult(1, ((k + " (dual match)", 1),))
            # untwisted gluing of non-dual weights vanishes
            return RankResult(0, ((k + " (dual mismatch)", 0),))
        if t.twist == 2:
            if s1 == s2:
                return RankResult(1, ((k + " (matched)", 1),))
            raise UnknownRankError(
                f"no rank table entry for order-2 pair weights {w1}, {w2}"
            )
        raise UnknownRankError(
            "order-3 twisted pairs are only tabulated at vacuum weights"
        )
    if k == ELLIPTIC_TRIPLE:
        if all(_is_vacuum(w, 1) for w in b.weights):
            return RankResult(2, ((k, 2),))
        raise UnknownRankError(
            "elliptic triples are only tabulated at level-1 vacuum weights"
        )
    if k in (S3_CASE1, S3_CASE2, S3_CASE3, S3_CASE4):
        if not all(_is_vacuum(w, 1) for w in b.weights):
            raise UnknownRankError(
                f"{k} is only tabulated at level-1 vacuum weights"
            )
        if k == S3_CASE1:
            # cyclic treatment: one order-2 pair factor
            return RankResult(1, ((k + " (cyclic pair)", 1),))
        if k == S3_CASE2:
            if len(b.elements) == 2:
                return RankResult(1, ((k + " (cyclic pair)", 1),))
            return RankResult(2, ((k + " (cyclic triple)", 2),))
        if k == S3_CASE3:
            return RankResult(1, ((k, 1),))
        return RankResult(2, ((S3_CASE4, 2),))
    if k == CLOSED_FORM_A:
        g, n, r = b.params
        if b.weights and not all(_is_vacuum(w, 1) for w in b.weights):
            raise UnknownRankError(
                "the closed form applies to level-1 vacuum weights only"
            )
        v = rank_closed_form_A(g, n, r)
        return RankResult(v, ((f"closed form g={g} n={n} r={r}", v),))
    raise UnknownRankError(f"unrecognized factor kind {k!r}")


def s3_level1_rank(r) -> RankResult:
    """The level-1 S3 character-sum rank for a connected genus-0 cover
    with vacuum weights: prod_i S^{gamma_i}_00 / S_00^(s-2).

    The two anchor instances are ((12),(23),(132)) -> 1 and
    ((12),(23),(123),(123)) -> 2.  Applying the same sum to *other*
    generating vacuum vectors extends those instances; the extension
    rests on the vacuum column being the only contributing row at level
    one, and results are integer-checked.
    """
    if isinstance(r, RamificationVector):
        if r.group.kind != "S3":
            raise DomainError(f"S3 rank formula needs group S3, got {r.group.kind}")
        elements = r.elements
    else:
        elements = tuple(tuple(p) for p in r)
    acc = IDENTITY
    for p in elements:
        acc = compose(acc, p)
    if acc != IDENTITY:
        raise DomainError("monodromies do not multiply to the identity")
    if subgroup_generated(elements) != frozenset(S3_GROUP.elements):
        raise DomainError(
            "monodromies do not generate S3 (disconnected cover); "
            "use the factor decomposition instead"
        )
    s = len(elements)
    num = ONE
    for p in elements:
        num = num * s_entry(p)
    value = num / (S_00 ** (s - 2))
    if not value.is_integer() or value.as_integer() < 0:
        raise InternalInconsistencyError(
            f"character sum gave non-integer rank {value}; "
            "input violates a precondition"
        )
    v = value.as_integer()
    t = sum(1 for p in elements if perm_order(p) == 2)
    m = sum(1 for p in elements if perm_order(p) == 3)
    return RankResult(v, ((f"S3 level-1 sum t={t} m={m}", v),))


def rank_lower_bound(w) -> int:
    """Product of the factor ranks of a decomposition witness.

    The undegenerated block contains a copy of the factor product, so
    its rank is >= the returned value.  Empty witnesses give 1.
    """
    factors = getattr(w, "factors", w)
    bound = 1
    for f in factors:
        try:
            bound *= base_case_rank(f).value
        except UnknownRankError as e:
            raise BoundUnavailableError(
                f"factor {f.kind} at {f.labels} has unknown rank: {e}"
            ) from e
    return bound
