"""Print the recognized base-case rank table and the closed-form grid.

The first block lists each factor kind at level-1 vacuum weights with
its exact rank; the second evaluates the genus-g closed form
2^g * r^(g+n-1) on a small grid; the last shows the two character-sum
anchors for connected S3 covers.
"""
from __future__ import annotations

from parapic import (
    CASE3_LITERAL,
    CASE4_LITERAL,
    IDENTITY,
    BaseCase,
    base_case_rank,
    parse_affine_type,
    rank_closed_form_A,
    s3_level1_rank,
    vacuum_weight,
)

T12, T23 = (2, 1, 3), (1, 3, 2)
C123, C132 = (2, 3, 1), (3, 1, 2)
VAC = vacuum_weight(1)


def case(kind, elements, **kw):
    n = len(elements)
    kw.setdefault("weights", (VAC,) * n)
    kw.setdefault("labels", tuple(f"p{i}" for i in range(n)))
    return BaseCase(kind=kind, elements=elements, **kw)


ROWS = [
    ("untwisted vacuum point", case("UntwistedVacuum", (IDENTITY,))),
    (
        "order-2 pair, vacuum",
        case("TwistedPair", (T12, T12), types=(parse_affine_type("A3~2"),) * 2),
    ),
    (
        "order-3 elliptic triple",
        case(
            "EllipticTriple",
            (C123, C123, C123),
            types=(parse_affine_type("D4~3"),) * 3,
        ),
    ),
    ("equal transpositions", case("S3Case1", (T12, T12))),
    ("inverse 3-cycles", case("S3Case2", (C123, C132))),
    ("equal 3-cycle triple", case("S3Case2", (C123,) * 3)),
    ("mixed triple", case("S3Case3", CASE3_LITERAL)),
    ("mixed quadruple", case("S3Case4", CASE4_LITERAL)),
]


def main() -> None:
    print("base-case ranks (level-1 vacuum weights)")
    for name, b in ROWS:
        print(f"  {name:<26} {b.kind:<16} rank {base_case_rank(b).value}")
    print()
    print("closed form 2^g * r^(g+n-1)")
    print("  g\\(n,r)" + "".join(f"  ({n},{r})".rjust(8) for n in (1, 2) for r in (2, 3)))
    for g in range(3):
        cells = [
            str(rank_closed_form_A(g, n, r)).rjust(8)
            for n in (1, 2)
            for r in (2, 3)
        ]
        print(f"  {g:<7}" + "".join(cells))
    print()
    print("S3 character-sum anchors")
    for elems in [(T12, T23, C132), (T12, T23, C123, C123)]:
        res = s3_level1_rank(elems)
        print(f"  {res.derivation[0][0]:<24} rank {res.value}")


if __name__ == "__main__":
    main()
