"""Sweep the charge bracket over Galois degree and base genus.

For each splitting degree in {1, 2, 3, 6} and each genus 0..2 this
builds a small datum whose facets are all Iwahori (full vertex set) and
runs the two-sided bracket.  Every row should end with exact = 1.
"""
from __future__ import annotations

from parapic import (
    C2_GROUP,
    C3_GROUP,
    IDENTITY,
    S3_GROUP,
    TRIVIAL_GROUP,
    GroupDatum,
    PointDatum,
    compute_cG,
    parse_affine_type,
)

T12 = (2, 1, 3)
C123, C132 = (2, 3, 1), (3, 1, 2)


def iwahori_point(label, type_name, mono=IDENTITY):
    t = parse_affine_type(type_name)
    return PointDatum(
        label, t, frozenset(t.vertices), mono, is_bad=(mono != IDENTITY)
    )


def datum_for(gamma, genus):
    if gamma.kind == "Trivial":
        pts = (iwahori_point("p1", "A4"), iwahori_point("p2", "A4"))
    elif gamma.kind == "C2":
        pts = (
            iwahori_point("b1", "A3~2", T12),
            iwahori_point("b2", "A3~2", T12),
            iwahori_point("s1", "A3"),
        )
    elif gamma.kind == "C3":
        pts = (
            iwahori_point("q1", "D4~3", C123),
            iwahori_point("q2", "D4~3", C132),
            iwahori_point("g1", "D4"),
        )
    else:
        pts = (
            iwahori_point("b1", "D4~2", T12),
            iwahori_point("b2", "D4~2", T12),
            iwahori_point("g1", "D4"),
        )
    return GroupDatum(genus, gamma, pts)


def main() -> None:
    print(f"{'group':>8} {'genus':>5} {'lower':>5} {'certified':>9} {'exact':>5}  route")
    for gamma in (TRIVIAL_GROUP, C2_GROUP, C3_GROUP, S3_GROUP):
        for genus in range(3):
            rep = compute_cG(datum_for(gamma, genus))
            route = rep.certificate.route if rep.certificate else "-"
            print(
                f"{gamma.kind:>8} {genus:>5} {rep.lower:>5} "
                f"{str(rep.certified_charge):>9} {str(rep.exact):>5}  {route}"
            )


if __name__ == "__main__":
    main()
