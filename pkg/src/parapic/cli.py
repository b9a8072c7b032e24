"""Command-line front end.

Exit codes: 0 success, 1 domain error (diagnostic names the offending
field), 2 parse/usage error.  `--json` switches every verb to a
machine-readable single-line JSON payload carrying "schema": 1; output
is byte-stable for fixed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import covers, dynkin, picard
from .descent import certify_descent, compute_cG
from .errors import ParapicError, ParseError
from .factorization import s3_reduce
from .verlinde import rank_closed_form_A, s3_level1_rank

SCHEMA = 1


def _emit(args, payload: dict, human: list[str]) -> str:
    if args.json:
        return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True)
    return "\n".join(human)


def _split_specs(s: str) -> list[str]:
    """Split on commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail:
        out.append(tail)
    return out


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------


def _cmd_dynkin_info(args) -> str:
    t = dynkin.parse_affine_type(args.type)
    rows = [list(row) for row in t.cartan]
    payload = {
        "type": str(t),
        "base": f"{t.base.series}{t.base.rank}",
        "twist": t.twist,
        "vertices": list(t.vertices),
        "dual_labels": list(t.dual_labels),
        "cartan": rows,
    }
    width = max(len(str(v)) for row in rows for v in row)
    human = [
        f"type: {t}",
        f"base: {t.base.series}{t.base.rank}",
        f"twist: {t.twist}",
        "vertices: " + " ".join(str(v) for v in t.vertices),
        "dual labels: " + " ".join(str(a) for a in t.dual_labels),
        "cartan matrix:",
    ]
    for row in rows:
        human.append("  " + " ".join(str(v).rjust(width) for v in row))
    return _emit(args, payload, human)


def _cmd_picard_cdelta(args) -> str:
    d = picard.load_datum(args.datum)
    c = picard.c_delta(d)
    return _emit(args, {"c_delta": c}, [f"c_delta = {c}"])


def _cmd_picard_rank(args) -> str:
    d = picard.load_datum(args.datum)
    r = picard.pic_delta_rank(d)
    return _emit(args, {"rank": r}, [f"pic_delta_rank = {r}"])


def _cmd_picard_check(args) -> str:
    d = picard.load_datum(args.datum)
    b = picard.load_bundle(args.bundle)
    picard.validate_bundle(d, b)
    dominant = picard.is_dominant(d, b)
    ok, charge = picard.is_pic_delta(d, b)
    payload = {"dominant": dominant, "in_charge_lattice": ok, "charge": charge}
    human = [
        f"dominant: {str(dominant).lower()}",
        f"in charge lattice: {str(ok).lower()}",
        f"charge: {charge if charge is not None else 'n/a'}",
    ]
    return _emit(args, payload, human)


def _parse_group(name: str) -> covers.FiniteGroup:
    try:
        return covers.group_from_name(name)
    except ParapicError:
        raise
    except KeyError:  # pragma: no cover
        raise ParseError(f"unknown group {name!r}")


def _cmd_covers_genus(args) -> str:
    gamma = _parse_group(args.group)
    mono = covers.parse_tuple(args.tuple)
    shape = covers.genus_riemann_hurwitz(args.base_genus, gamma, mono)
    payload = {"genus": shape.genus, "components": shape.component_count}
    return _emit(
        args,
        payload,
        [f"genus = {shape.genus}", f"components = {shape.component_count}"],
    )


def _cmd_covers_connected(args) -> str:
    gamma = _parse_group(args.group)
    r = covers.RamificationVector(gamma, covers.parse_tuple(args.tuple))
    conn = covers.is_connected_genus0(r)
    return _emit(
        args, {"connected": conn}, [f"connected: {str(conn).lower()}"]
    )


def _cmd_covers_enumerate(args) -> str:
    gamma = _parse_group(args.group)
    classes = _split_specs(args.classes)
    count, tuples = covers.enumerate_tuples(
        gamma, classes, connected_only=args.connected
    )
    shown = tuples if args.limit is None else tuples[: args.limit]
    names = [[covers.element_name(p) for p in t] for t in shown]
    human = [f"count = {count}"]
    human += [",".join(row) for row in names]
    return _emit(args, {"count": count, "tuples": names}, human)


def _cmd_reduce_s3(args) -> str:
    mono = covers.parse_tuple(args.tuple)
    w = s3_reduce(mono)
    payload = {
        "factors": [f.as_dict() for f in w.factors],
        "steps": w.steps,
        "conservation": list(w.conservation),
    }
    human = [f"factors: {len(w.factors)}"]
    for f in w.factors:
        line = f"  {f.kind}: " + ",".join(
            covers.element_name(p) for p in f.elements
        )
        if f.conjugator is not None:
            line += f"  [conjugator {covers.element_name(f.conjugator)}]"
        human.append(line)
    return _emit(args, payload, human)


def _cmd_verlinde_rank(args) -> str:
    mono = covers.parse_tuple(args.tuple)
    res = s3_level1_rank(mono)
    payload = {"rank": res.value, "derivation": [list(x) for x in res.derivation]}
    return _emit(args, payload, [f"rank = {res.value}"])


def _cmd_verlinde_closed_form(args) -> str:
    v = rank_closed_form_A(args.g, args.n, args.r)
    return _emit(args, {"rank": v}, [f"rank = {v}"])


def _cmd_descend(args) -> str:
    d = picard.load_datum(args.datum)
    b = picard.load_bundle(args.bundle)
    cert = certify_descent(d, b)
    payload = cert.as_dict()
    human = [
        f"verdict: {cert.verdict}",
        f"charge: {cert.charge}",
        f"rank bound: {cert.rank_bound if cert.rank_bound is not None else 'unavailable'}",
        f"route: {cert.route}",
    ]
    return _emit(args, payload, human)


def _cmd_cg(args) -> str:
    d = picard.load_datum(args.datum)
    report = compute_cG(d, budget=args.budget)
    payload = report.as_dict()
    human = [f"lower bound (c_delta): {report.lower}"]
    if report.certified_charge is not None:
        human.append(f"certified charge: {report.certified_charge}")
    else:
        human.append("certified charge: none found")
    if report.exact is not None:
        human.append(f"exact: {report.exact}")
    else:
        human.append("exact: undetermined")
    return _emit(args, payload, human)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parapic",
        description="Exact invariants of parahoric bundle moduli: "
        "charge lattices, cover bookkeeping, and descent certificates.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_dynkin = sub.add_parser("dynkin", help="affine type tables")
    dyn_sub = p_dynkin.add_subparsers(dest="action", required=True)
    p = dyn_sub.add_parser("info", parents=[common],
                           help="Cartan matrix and dual labels")
    p.add_argument("type", help="affine type string, e.g. A3 or A2~2")
    p.set_defaults(func=_cmd_dynkin_info)

    p_picard = sub.add_parser("picard", help="charge-lattice computations")
    pic_sub = p_picard.add_subparsers(dest="action", required=True)
    p = pic_sub.add_parser("cdelta", parents=[common],
                           help="the divisor lower bound")
    p.add_argument("--datum", required=True)
    p.set_defaults(func=_cmd_picard_cdelta)
    p = pic_sub.add_parser("rank", parents=[common],
                           help="rank of the charge lattice")
    p.add_argument("--datum", required=True)
    p.set_defaults(func=_cmd_picard_rank)
    p = pic_sub.add_parser("check", parents=[common],
                           help="validate a bundle against a datum")
    p.add_argument("--datum", required=True)
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=_cmd_picard_check)

    p_covers = sub.add_parser("covers", help="Galois-cover bookkeeping")
    cov_sub = p_covers.add_subparsers(dest="action", required=True)
    p = cov_sub.add_parser("genus", parents=[common],
                           help="Riemann-Hurwitz genus")
    p.add_argument("--group", default="S3")
    p.add_argument("--base-genus", type=int, default=0)
    p.add_argument("tuple", help='monodromies, e.g. "(12),(23),(132)"')
    p.set_defaults(func=_cmd_covers_genus)
    p = cov_sub.add_parser("connected", parents=[common],
                           help="genus-0 connectivity")
    p.add_argument("--group", default="S3")
    p.add_argument("tuple")
    p.set_defaults(func=_cmd_covers_connected)
    p = cov_sub.add_parser("enumerate", parents=[common],
                           help="tuples with given classes")
    p.add_argument("--group", default="S3")
    p.add_argument("--classes", required=True,
                   help='e.g. "transposition,transposition,3-cycle"')
    p.add_argument("--connected", action="store_true")
    p.add_argument("--limit", type=int, default=None,
                   help="cap the number of listed tuples")
    p.set_defaults(func=_cmd_covers_enumerate)

    p_reduce = sub.add_parser("reduce", help="rewrite monodromy vectors")
    red_sub = p_reduce.add_subparsers(dest="action", required=True)
    p = red_sub.add_parser("s3", parents=[common],
                           help="decompose into base cases")
    p.add_argument("tuple")
    p.set_defaults(func=_cmd_reduce_s3)

    p_verlinde = sub.add_parser("verlinde", help="exact rank evaluation")
    ver_sub = p_verlinde.add_subparsers(dest="action", required=True)
    p = ver_sub.add_parser("rank", parents=[common],
                           help="level-1 S3 character-sum rank")
    p.add_argument("tuple")
    p.set_defaults(func=_cmd_verlinde_rank)
    p = ver_sub.add_parser("closed-form", parents=[common],
                           help="2^g r^(g+n-1)")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=_cmd_verlinde_closed_form)

    p = sub.add_parser("descend", parents=[common],
                       help="descent certificate for a bundle")
    p.add_argument("--datum", required=True)
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=_cmd_descend)

    p = sub.add_parser("cg", parents=[common],
                       help="bracket the descending-charge generator")
    p.add_argument("--datum", required=True)
    p.add_argument("--budget", type=int, default=64,
                   help="certificate search bound")
    p.set_defaults(func=_cmd_cg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        out = args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParapicError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
