"""Finite-group machinery for Galois covers of curves.

Groups are the trivial group, C2 = <(12)>, C3 = <(123)> and S3, realized
as permutations of {1,2,3} stored as image tuples (p[0], p[1], p[2]) =
(p(1), p(2), p(3)).

Composition convention: right-to-left.  compose(s, t) applies t first,
then s.  All serialized cycle notation ("e", "(12)", "(123)", ...) refers
to this convention; ordered-product checks depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import (
    DomainError,
    InconsistentRamificationError,
    NoCoverError,
    ParseError,
)

Perm = tuple[int, int, int]

IDENTITY: Perm = (1, 2, 3)

#: canonical element order used for deterministic search and serialization
ELEMENTS: tuple[Perm, ...] = (
    (1, 2, 3),  # e
    (2, 1, 3),  # (12)
    (3, 2, 1),  # (13)
    (1, 3, 2),  # (23)
    (2, 3, 1),  # (123)
    (3, 1, 2),  # (132)
)

_NAMES = {
    (1, 2, 3): "e",
    (2, 1, 3): "(12)",
    (3, 2, 1): "(13)",
    (1, 3, 2): "(23)",
    (2, 3, 1): "(123)",
    (3, 1, 2): "(132)",
}
_BY_NAME = {v: k for k, v in _NAMES.items()}


def compose(s: Perm, t: Perm) -> Perm:
    """s after t."""
    return (s[t[0] - 1], s[t[1] - 1], s[t[2] - 1])


def inverse(p: Perm) -> Perm:
    out = [0, 0, 0]
    for x in (1, 2, 3):
        out[p[x - 1] - 1] = x
    return tuple(out)  # type: ignore[return-value]


def conjugate(g: Perm, x: Perm) -> Perm:
    """g x g^-1."""
    return compose(compose(g, x), inverse(g))


def perm_order(p: Perm) -> int:
    q, n = p, 1
    while q != IDENTITY:
        q, n = compose(p, q), n + 1
    return n


def sign(p: Perm) -> int:
    return 1 if perm_order(p) in (1, 3) else -1


def element_name(p: Perm) -> str:
    return _NAMES[p]


def parse_element(s: str) -> Perm:
    key = s.strip().replace(" ", "")
    if key in ("e", "()", "1", "id"):
        return IDENTITY
    if key in _BY_NAME:
        return _BY_NAME[key]
    raise ParseError(f"cannot parse permutation {s!r} (use e, (12), (123), ...)")


def parse_tuple(s: str) -> tuple[Perm, ...]:
    """Parse a comma-separated list of cycles, e.g. "(12),(23),(132)"."""
    text = s.strip()
    if not text:
        return ()
    parts = []
    depth, cur = 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur += ch
    parts.append(cur)
    return tuple(parse_element(p) for p in parts)


@dataclass(frozen=True)
class FiniteGroup:
    kind: str
    elements: tuple[Perm, ...]

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return self.kind


TRIVIAL_GROUP = FiniteGroup("Trivial", (IDENTITY,))
C2_GROUP = FiniteGroup("C2", (IDENTITY, (2, 1, 3)))
C3_GROUP = FiniteGroup("C3", (IDENTITY, (2, 3, 1), (3, 1, 2)))
S3_GROUP = FiniteGroup("S3", ELEMENTS)

_GROUPS = {g.kind: g for g in (TRIVIAL_GROUP, C2_GROUP, C3_GROUP, S3_GROUP)}


def group_from_name(name: str) -> FiniteGroup:
    try:
        return _GROUPS[name]
    except KeyError:
        raise ParseError(f"unknown group {name!r} (expected Trivial/C2/C3/S3)") from None


def gsd(gamma: FiniteGroup) -> int:
    """Generic splitting degree: the group order."""
    return len(gamma)


def subgroup_generated(elements) -> frozenset[Perm]:
    gens = [p for p in elements if p != IDENTITY]
    closure = {IDENTITY, *gens}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(x, g)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    return frozenset(closure)


def conjugacy_class(gamma: FiniteGroup, p: Perm) -> tuple[Perm, ...]:
    if p not in gamma:
        raise DomainError(f"{element_name(p)} is not in {gamma}")
    cls = {conjugate(g, p) for g in gamma.elements}
    return tuple(e for e in ELEMENTS if e in cls)


@dataclass(frozen=True)
class RamificationVector:
    """Ordered local monodromies of marked points on a genus-0 base."""

    group: FiniteGroup
    elements: tuple[Perm, ...]

    def __post_init__(self):
        for p in self.elements:
            if p not in self.group:
                raise DomainError(
                    f"monodromy {element_name(p)} is not in {self.group}"
                )

    def __str__(self) -> str:
        return ",".join(element_name(p) for p in self.elements)


@dataclass(frozen=True)
class CoverShape:
    genus: int
    component_count: int


def product_identity_check(r: RamificationVector) -> bool:
    acc = IDENTITY
    for p in r.elements:
        acc = compose(acc, p)
    return acc == IDENTITY


def genus_riemann_hurwitz(g_base: int, gamma: FiniteGroup, monodromies) -> CoverShape:
    """Genus of the Galois cover from local monodromy orders.

    2g_C - 2 = |G|(2 g_base - 2) + sum_p (|G|/e_p)(e_p - 1).

    component_count is the index of the generated subgroup for a genus-0
    base; for base genus >= 1 it is reported as 1 (handle monodromies are
    free and can always be chosen to connect the cover).
    """
    n = len(gamma)
    monodromies = tuple(monodromies)
    for p in monodromies:
        if p not in gamma:
            raise DomainError(f"monodromy {element_name(p)} is not in {gamma}")
    rhs = n * (2 * g_base - 2)
    for p in monodromies:
        e = perm_order(p)
        rhs += (n // e) * (e - 1)
    if rhs % 2 != 0 or rhs + 2 < 0:
        raise InconsistentRamificationError(
            f"inconsistent ramification data: 2g-2 = {rhs}"
        )
    genus = (rhs + 2) // 2
    if g_base == 0:
        components = n // len(subgroup_generated(monodromies))
    else:
        components = 1
    return CoverShape(genus=genus, component_count=components)


def is_connected_genus0(r: RamificationVector) -> bool:
    if not product_identity_check(r):
        raise DomainError("ordered product of monodromies is not the identity")
    return len(subgroup_generated(r.elements)) == len(r.group)


_CLASS_ALIASES = {
    "transposition": (2, 1, 3),
    "transpositions": (2, 1, 3),
    "3-cycle": (2, 3, 1),
    "3-cycles": (2, 3, 1),
    "identity": IDENTITY,
}


def _class_of(gamma: FiniteGroup, spec) -> tuple[Perm, ...]:
    if isinstance(spec, tuple):
        rep = spec
    else:
        key = str(spec).strip()
        rep = _CLASS_ALIASES.get(key)
        if rep is None:
            rep = parse_element(key)
    return conjugacy_class(gamma, rep)


def enumerate_tuples(gamma: FiniteGroup, classes, connected_only: bool = False):
    """All ordered tuples with entry i in class i and ordered product e.

    Classes may be given as representative elements, cycle strings, or
    the names "transposition"/"3-cycle"/"identity" (conjugacy closure is
    taken inside ``gamma``).  Returns (count, tuples) with the tuples in
    the canonical lexicographic element order.
    """
    classes = list(classes)
    if not classes:
        raise DomainError("class list must be nonempty")
    pools = [_class_of(gamma, c) for c in classes]
    out = []
    for cand in iproduct(*pools):
        acc = IDENTITY
        for p in cand:
            acc = compose(acc, p)
        if acc != IDENTITY:
            continue
        if connected_only and len(subgroup_generated(cand)) != len(gamma):
            continue
        out.append(cand)
    key = {p: i for i, p in enumerate(ELEMENTS)}
    out.sort(key=lambda tup: tuple(key[p] for p in tup))
    return len(out), out


def equivalent_cover_data(
    r1: RamificationVector, r2: RamificationVector, ambient: FiniteGroup
):
    """A conjugator d in ``ambient`` with r1 = d r2 d^-1 entrywise (and
    the two groups conjugate as subsets), or None."""
    if len(r1.elements) != len(r2.elements):
        raise DomainError("ramification vectors have different lengths")
    for d in ambient.elements:
        if any(conjugate(d, y) != x for x, y in zip(r1.elements, r2.elements)):
            continue
        if {conjugate(d, g) for g in r2.group.elements} == set(r1.group.elements):
            return d
    return None


def class_preserving_identity_tuple(elements):
    """Replace each entry by a conjugate so the ordered product is e.

    Entry conjugacy classes are preserved (identities stay identities).
    Returns None when impossible: an odd number of transpositions (sign
    obstruction) or exactly one 3-cycle and no transpositions.  Used for
    base genus >= 1, where marked monodromies are only well-defined up to
    conjugacy.
    """
    elements = tuple(elements)
    kinds = [perm_order(p) for p in elements]
    t = sum(1 for k in kinds if k == 2)
    m = sum(1 for k in kinds if k == 3)
    if t % 2 == 1:
        return None
    if (t, m) == (0, 1):
        return None
    # Fill every slot but the last nontrivial one with a canonical class
    # representative, then complete: the prefix product is odd exactly
    # when a transposition is owed (t even), and if a 3-cycle is owed but
    # the prefix collapsed to e, flipping one earlier representative
    # replaces the prefix by a conjugate of a nontrivial even element.
    nontrivial = [i for i, k in enumerate(kinds) if k > 1]
    out = [IDENTITY] * len(elements)
    if nontrivial:
        last = nontrivial[-1]
        for i in nontrivial[:-1]:
            out[i] = (2, 1, 3) if kinds[i] == 2 else C3_PLUS

        def prefix():
            acc = IDENTITY
            for p in out[:last]:
                acc = compose(acc, p)
            return acc

        if kinds[last] == 3 and prefix() == IDENTITY:
            j = nontrivial[0]
            out[j] = (3, 2, 1) if kinds[j] == 2 else inverse(C3_PLUS)
        out[last] = inverse(prefix())
        if perm_order(out[last]) != kinds[last]:  # pragma: no cover
            raise AssertionError("class-preserving adjustment failed")
    acc = IDENTITY
    for p in out:
        acc = compose(acc, p)
    if acc != IDENTITY:  # pragma: no cover - construction is total
        raise AssertionError("class-preserving adjustment failed")
    return tuple(out)


@dataclass(frozen=True)
class Gsd3Partition:
    plus: tuple
    minus: tuple
    scenario: str


#: the designated "+" generator of C3
C3_PLUS: Perm = (2, 3, 1)


def monodromy_partition_gsd3(points) -> Gsd3Partition:
    """Split order-3 marked points by which C3 generator they carry.

    Accepts point records (anything with a ``monodromy`` attribute) or
    raw permutations; trivial-monodromy entries are skipped.  The
    scenario letter follows |plus| mod 3: 0 -> a, 1 -> b, 2 -> c.
    """
    plus, minus = [], []
    for x in points:
        p = getattr(x, "monodromy", x)
        if p == IDENTITY:
            continue
        if p == C3_PLUS:
            plus.append(x)
        elif p == inverse(C3_PLUS):
            minus.append(x)
        else:
            raise DomainError(
                f"monodromy {element_name(p)} does not lie in C3"
            )
    if len(plus) % 3 != len(minus) % 3:
        raise NoCoverError(
            "no such cover exists: |R3+| and |R3-| disagree modulo 3"
        )
    scenario = {0: "a", 1: "b", 2: "c"}[len(plus) % 3]
    return Gsd3Partition(tuple(plus), tuple(minus), scenario)
