"""Command-line front end.

Commands: build, verify, homotopy, compare.  Input is a JSON object
{"field": "Q" | {"Fp": p}, "S1": [names], "S2": [{"name","image"}],
"S3": [{"name","image"}]} with images in the polynomial grammar.

Exit codes: 0 pass, 1 verification failure, 2 invalid input, 3 step budget
exhausted.  Identical input and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .groebner import BudgetExceeded
from .simplicial import (ConstructionData, InvalidData, build_skeleton,
                         peiffer_P1, peiffer_P2)
from .crossed import functor_M, verify_square, verify_xmod, h_eval
from .tensor import compare_corner
from .homotopy import compare_XY, homotopy_report

ORDER_TAGS = {"degrevlex": "wdegrevlex", "lex": "lex"}


def _ring_obj(ring):
    return {"vars": list(ring.vars), "weights": list(ring.weights)}


def _basis_strs(ideal, order, budget):
    return [str(g) for g in ideal.groebner(order=order, budget=budget)]


def cmd_build(data, args):
    order = ORDER_TAGS[args.order]
    budget = args.budget
    skel = build_skeleton(data)
    moore = skel.moore(budget=budget)
    p1 = peiffer_P1(data)
    p2 = peiffer_P2(skel, "c_families", budget=budget)
    square = functor_M(skel, 2, budget=budget)
    pairs = []
    for m in square.left.gens:
        for n in square.right.gens:
            pairs.append({"m": str(m), "n": str(n),
                          "h": str(h_eval(square, m, n))})
    report = {
        "command": "build",
        "input": data.to_dict(),
        "rings": {"E%d" % i: _ring_obj(r) for i, r in enumerate(skel.rings)},
        "moore": {
            "ker_d0_level1": _basis_strs(moore.ne1, order, budget),
            "ker_d1_level1": _basis_strs(moore.kbar, order, budget),
            "ker_level2": _basis_strs(moore.ne2, order, budget),
        },
        "peiffer_level1": {
            "generators": [str(g) for g in p1.gens],
            "reduced": _basis_strs(p1, order, budget),
        },
        "peiffer_level2": {"reduced": _basis_strs(p2, order, budget)},
        "square": {
            "left": [str(g) for g in square.left.gens],
            "right": [str(g) for g in square.right.gens],
            "top": [str(g) for g in square.top.gens],
            "boundary_of_top": [str(square.bnd(g)) for g in square.top.gens],
            "pairing_on_generators": pairs,
        },
    }
    return report, 0


def cmd_verify(data, args):
    budget = args.budget
    reports = []
    all_ok = True
    for level in (0, 1, 2):
        skel = build_skeleton(data, level=level)
        quot = functor_M(skel, 0)
        reports.append({
            "object": "pi0 at skeleton level %d" % level,
            "ok": True,
            "items": [{"check": "presentation",
                       "instance": "reduced basis [%s]"
                       % ", ".join(str(b) for b in quot.basis),
                       "status": "pass", "witness": "0",
                       "informational": False}],
        })
        rep = verify_xmod(functor_M(skel, 1, budget=budget))
        rep.label = "crossed module at skeleton level %d" % level
        reports.append(rep.to_obj())
        all_ok = all_ok and rep.ok
        square = functor_M(skel, 2, budget=budget,
                           break_h=args.break_h and level == 2)
        srep = verify_square(square)
        srep.label = "crossed square at skeleton level %d" % level
        reports.append(srep.to_obj())
        all_ok = all_ok and srep.ok
    return {"command": "verify", "ok": all_ok, "reports": reports}, \
        (0 if all_ok else 1)


def cmd_homotopy(data, args):
    budget = args.budget
    D = args.max_degree
    skel = build_skeleton(data)
    rep = homotopy_report(skel, D=D, D_h2=D + 2, budget=budget)
    obj = rep.to_obj()
    obj["command"] = "homotopy"
    return obj, 0


def cmd_compare(data, args):
    budget = args.budget
    D = args.max_degree
    skel = build_skeleton(data)
    corner = compare_corner(skel, D=D, budget=budget)
    obj = {"command": "compare", "corner": corner.to_obj()}
    ok = corner.ok
    if data.s3_names:
        obj["split"] = {
            "skipped": "the split comparison needs data without level-2 "
                       "generators"}
    else:
        split = compare_XY(skel, D=D, budget=budget)
        obj["split"] = split.to_obj()
        ok = ok and split.ok
    obj["ok"] = ok
    return obj, (0 if ok else 1)


def _render_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in obj:
            val = obj[key]
            if isinstance(val, (dict, list)):
                lines.append("%s%s:" % (pad, key))
                lines.extend(_render_text(val, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, val))
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                lines.append("%s-" % pad)
                lines.extend(_render_text(val, indent + 1))
            else:
                lines.append("%s- %s" % (pad, val))
    else:
        lines.append("%s%s" % (pad, obj))
    return lines


def make_parser():
    parser = argparse.ArgumentParser(
        prog="xsq",
        description="Free crossed squares of commutative algebras from "
                    "2-dimensional construction data.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("build", "construct the skeleton, kernels and the square"),
            ("verify", "run the axiom suites"),
            ("homotopy", "homotopy modules and the second homology"),
            ("compare", "reconstruction and split comparisons")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="construction data (JSON file)")
        p.add_argument("--max-degree", type=int, default=6,
                       help="degree bound for filtered dimensions")
        p.add_argument("--budget", type=int, default=None,
                       help="reduction step budget")
        p.add_argument("--order", choices=sorted(ORDER_TAGS),
                       default="degrevlex", help="monomial order for bases")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--break-h", action="store_true",
                       help=argparse.SUPPRESS)
    return parser


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "homotopy": cmd_homotopy,
    "compare": cmd_compare,
}


def main(argv=None):
    args = make_parser().parse_args(argv)
    if args.max_degree < 0:
        print("error: --max-degree must be >= 0", file=sys.stderr)
        return 2
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = ConstructionData.from_json(fh.read())
    except OSError as e:
        print("error: cannot read input: %s" % e, file=sys.stderr)
        return 2
    except InvalidData as e:
        for problem in e.problems:
            print("error: %s" % problem, file=sys.stderr)
        return 2
    try:
        obj, code = COMMANDS[args.command](data, args)
    except BudgetExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    if args.format == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(_render_text(obj)) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
