"""Command line front end.

Exit codes: 0 success, 1 domain failure (invalid datum, unsupported
representation, failed check), 2 input failure (unreadable or malformed
file, bad arguments).
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .datum import MixedNodes, classify_D, validate, vector_endpoints
from .formats import MACHINE_MARK, DatumParseError, descriptor_to_dict, dumps, load_datum
from .liftbuilder import (GENERAL, InvalidDatum, LiftDescriptor, abelianized_hodge, assemble,
                          unliftable_lift)
from .rootsys import RootDatum, fmt_q, fundamental_coweight, irrep_weights, pairing_values
from .selfcheck import run_checks
from .twoweight import table_rows, two_weight_fundamentals


def _ms(ms) -> str:
    return ", ".join(f"{fmt_q(v)}^{m}" if m > 1 else fmt_q(v) for v, m in ms)


def _load(path):
    try:
        return load_datum(path)
    except OSError as e:
        raise DatumParseError(str(e)) from None


def cmd_classify(args, out) -> int:
    factors = _load(args.path)
    rows, all_valid = [], True
    for idx, f in enumerate(factors):
        viol = validate(f)
        all_valid &= not viol
        row = {"factor": idx, "name": f.name, "type": str(f.root_datum),
               "valid": not viol, "violations": [str(v) for v in viol]}
        try:
            v = classify_D(f) if f.root_datum.family != "D" or f.root_datum.rank >= 4 else None
        except MixedNodes as e:
            v = None
            row["subtype_error"] = str(e)
        if v is not None:
            row.update(subtype=v.subtype, witness=[list(p) for p in v.witness], note=v.note)
            if v.subtype == "D_H":
                try:
                    row["vector_endpoints"] = dict(sorted(vector_endpoints(f).items()))
                except ValueError:
                    row["vector_endpoints"] = None
        rows.append(row)
    if args.machine:
        print(dumps({"factors": rows}), file=out)
    else:
        for r in rows:
            print(f"[{r['factor']}] {r['name'] or r['type']} ({r['type']})", file=out)
            print(f"  validation: {'ok' if r['valid'] else 'FAILED'}", file=out)
            for v in r["violations"]:
                print(f"    - {v}", file=out)
            if "subtype" in r:
                print(f"  subtype: {r['subtype']}  {r['note']}".rstrip(), file=out)
                if r["witness"] and r["subtype"] == "D_R" and r["type"] == "D4":
                    pts = " ".join(f"{i}:{n}" for i, n in r["witness"])
                    print(f"  stable endpoint set: {pts}", file=out)
                if r.get("vector_endpoints"):
                    pts = " ".join(f"{i}:{n}" for i, n in r["vector_endpoints"].items())
                    print(f"  vector endpoints: {pts}", file=out)
            if "subtype_error" in r:
                print(f"  subtype: error: {r['subtype_error']}", file=out)
    return 0 if all_valid else 1


def format_lift(ld: LiftDescriptor, mode: str) -> str:
    lines = [f"mode: {mode}"]
    ab = {}
    if any(t != GENERAL for t in ld.case_tags):
        ab = {a: (x, b, y) for a, x, b, y in abelianized_hodge(ld)}
    for idx, ((f, cover), tag) in enumerate(zip(ld.factors, ld.case_tags)):
        lines.append(f"[{idx}] {f.name or f.root_datum} ({f.root_datum}, |I|={len(f.I)})")
        lines.append(f"  cover: {cover.label} (kernel order {cover.kernel_order})")
        lines.append(f"  case: {tag}")
        flags = [fl for j, fl in ld.flags if j == idx]
        if flags:
            lines.append(f"  flags: {', '.join(flags)}")
        for t in ld.tori:
            if t.factor == idx:
                lines.append(f"  torus {t.label}: {t.kind}, rank {len(t.coordinates)}, "
                             f"{'compact' if t.real_compact else 'non-compact'} over R")
        lines.append("  blocks (index, w_s, line: cochar | central | torus -> totals):")
        for b in ld.blocks_of(idx):
            where = b.lifted_index or b.index
            lines.append(f"    {where:<6} w_{b.highest_weights[0]:<2} {b.torus_line:<10} "
                         f"{_ms(b.cochar_weights)} | {fmt_q(b.central_exponent)} | "
                         f"{fmt_q(b.torus_exponent)} -> {_ms(b.total_weights)}")
        for c in ld.certificates:
            if c.factor == idx:
                verdict = "holds" if c.holds else "FAILS"
                lines.append(f"  certificate {c.kind}: {verdict} over {c.blocks_checked} blocks; "
                             f"totals {{{', '.join(fmt_q(v) for v in c.totals)}}}")
        if tag != GENERAL:
            lines.append("  abelianized exponents (line, conjugate line):")
            seen = {b.torus_line for b in ld.blocks_of(idx)}
            for a, (x, b, y) in ab.items():
                if a in seen:
                    lines.append(f"    {a}: {fmt_q(x)}  {b}: {fmt_q(y)}  sum {fmt_q(x + y)}")
    lines.append(f"derived group simply connected: {'yes' if ld.derived_simply_connected else 'no'}")
    return "\n".join(lines)


def cmd_lift(args, out) -> int:
    factors = _load(args.path)
    for idx, f in enumerate(factors):
        viol = validate(f)
        if viol:
            raise InvalidDatum(f"factor {idx}: " + "; ".join(map(str, viol)))
    build = assemble if args.mode == "simply_connected" else unliftable_lift
    ld = build(factors)
    machine = dumps({"mode": args.mode, "lift": descriptor_to_dict(ld)})
    if args.machine:
        print(machine, file=out)
    else:
        print(format_lift(ld, args.mode), file=out)
        print(MACHINE_MARK, file=out)
        print(machine, file=out)
    return 0 if ld.integral else 1


def cmd_weights(args, out) -> int:
    rd = RootDatum(args.family, args.rank)
    rd.check_node(args.node)
    vals = pairing_values(irrep_weights(rd, args.s), fundamental_coweight(rd, args.node))
    print(f"{rd} highest weight w_{args.s}, coweight of node {args.node}", file=out)
    print("value  multiplicity", file=out)
    for v in sorted(vals, reverse=True):
        print(f"{fmt_q(v):<6} {vals[v]}", file=out)
    n = len(vals)
    print(f"verdict: {'two-weight' if n == 2 else f'{n} distinct'}", file=out)
    return 0


def cmd_table(args, out) -> int:
    rows = [(f, k, n, sorted(two_weight_fundamentals(RootDatum(f, k), n)))
            for f, k, n in table_rows(args.max_rank)]
    if args.machine:
        print(dumps([{"family": f, "rank": k, "node": n, "fundamentals": s} for f, k, n, s in rows]),
              file=out)
    else:
        print("family rank node : two-weight fundamentals", file=out)
        for f, k, n, s in rows:
            print(f"{f} {k} {n} : {' '.join(map(str, s))}", file=out)
    return 0


def cmd_check(args, out) -> int:
    results = run_checks(args.fixtures_dir)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({detail})" if detail and not ok else ""),
              file=out)
    failed = sum(1 for _, ok, _ in results if not ok)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtlift", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="validate a datum file and classify its factors")
    c.add_argument("path")
    c.add_argument("--machine", action="store_true")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("lift", help="build a weak Mumford-Tate lift")
    c.add_argument("path")
    c.add_argument("--mode", choices=("unliftable", "simply_connected"), default="simply_connected")
    c.add_argument("--machine", action="store_true")
    c.set_defaults(func=cmd_lift)

    c = sub.add_parser("weights", help="pairing values of a fundamental representation")
    c.add_argument("family", choices=("A", "B", "C", "D"))
    c.add_argument("rank", type=int)
    c.add_argument("s", type=int)
    c.add_argument("node", type=int)
    c.set_defaults(func=cmd_weights)

    c = sub.add_parser("table", help="emit the two-weight table")
    c.add_argument("max_rank", type=int, choices=range(2, 10), metavar="max_rank")
    c.add_argument("--machine", action="store_true")
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("check", help="run the invariant suite on the bundled fixtures")
    c.add_argument("--fixtures-dir", default=None)
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DatumParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, IndexError, AssertionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
