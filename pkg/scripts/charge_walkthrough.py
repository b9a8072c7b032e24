"""Walk through the two-special-point example where the bracket closes at 2.

Two order-2 branch points of type A2~2 with facet {1}: the dual label
at vertex 1 is 2, so the divisor bound c_Delta is 2; the constructor
bundle at that vertex certifies charge 2, pinning c_G = 2.  The same
pipeline on an Iwahori variant gives 1.
"""
from __future__ import annotations

import json

from parapic import (
    C2_GROUP,
    GroupDatum,
    PointDatum,
    bundle_to_json,
    c_delta,
    cdelta_bundle,
    certify_descent,
    compute_cG,
    parse_affine_type,
)

T12 = (2, 1, 3)


def main() -> None:
    t = parse_affine_type("A2~2")
    print(f"type {t}: vertices {list(t.vertices)}, dual labels {list(t.dual_labels)}")

    def point(label, facet):
        return PointDatum(label, t, frozenset(facet), T12, is_bad=True)

    d = GroupDatum(0, C2_GROUP, (point("x1", {1}), point("x2", {1})))
    print(f"facets: x1 -> {sorted(d.points[0].facet)}, x2 -> {sorted(d.points[1].facet)}")
    print(f"c_delta = {c_delta(d)}  (gcd of dual labels over each facet, lcm over points)")

    b = cdelta_bundle(d)
    print(f"constructor bundle: {json.dumps(bundle_to_json(b)['weights'], sort_keys=True)}")
    cert = certify_descent(d, b)
    print(f"certificate: {cert.verdict} at charge {cert.charge} via {cert.route}")

    rep = compute_cG(d)
    print(f"bracket: lower {rep.lower}, certified {rep.certified_charge}, exact {rep.exact}")

    iw = GroupDatum(0, C2_GROUP, (point("x1", {0, 1}), point("x2", {0, 1})))
    rep_iw = compute_cG(iw)
    print(f"Iwahori variant (full facets): exact {rep_iw.exact}")


if __name__ == "__main__":
    main()
