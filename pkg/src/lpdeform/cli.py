"""Command-line interface.

    lp gens --ideal L|J POSET [--json] [--compare FILE]
    lp t1 POSET [--json]
    lp check POSET [--suite basic|full] [--max-degree N] [--json]
    lp hilbert POSET [--max-degree N] [--json]
    lp info POSET [--json]

Exit codes: 0 success / everything PASS, 1 a verification or comparison
failed, 2 usage or input problems, 3 a resource budget tripped.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cotangent import t1_generators
from .errors import LpError, ResourceLimitError
from .grading import monomial_order_for
from .letterplace import letterplace_generators, x_variables
from .polynomials import (
    MonomialOrder,
    Polynomial,
    parse_polynomial,
    polynomial_to_json,
    render_monomial,
    render_polynomial,
    variable_table,
)
from .posets import as_rooted_tree, load_poset
from .verifier import Verifier

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _is_tree(poset):
    try:
        as_rooted_tree(poset)
        return True
    except LpError:
        return False


def _order_for(poset):
    """The canonical rendering/working order: the full weighted tree order
    when possible, otherwise plain weight-1 on the x-variables."""
    try:
        return monomial_order_for(as_rooted_tree(poset))
    except LpError:
        xs = x_variables(poset)
        return MonomialOrder(xs, {v: 1 for v in xs})


def compare_fixture(computed, fixture_path, variables):
    """Compare a computed polynomial collection against a fixture file
    (one polynomial per line, '#' comments) as canonical sets.

    Returns (passed, missing, extra): fixture lines the computation lacks,
    and computed polynomials the fixture lacks.
    """
    table = variable_table(variables)
    wanted = set()
    with open(fixture_path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                wanted.add(parse_polynomial(line, table))
    got = set(computed)
    missing = sorted(wanted - got, key=repr)
    extra = sorted(got - wanted, key=repr)
    return (not missing and not extra, missing, extra)


def _cmd_gens(args):
    poset = load_poset(args.poset)
    order = _order_for(poset)
    if args.ideal == "L":
        gens = [(pair, Polynomial.term(m)) for pair, m in letterplace_generators(poset)]
    else:
        verifier = Verifier(as_rooted_tree(poset))
        gens = verifier.generators
    if args.json:
        payload = {
            "ideal": args.ideal,
            "poset": poset.to_json_dict(),
            "generators": [
                {"pair": [p, q], "terms": polynomial_to_json(g, order)}
                for (p, q), g in gens
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for _, g in gens:
            print(render_polynomial(g, order))
    if args.compare:
        passed, missing, extra = compare_fixture(
            [g for _, g in gens], args.compare, order.variables
        )
        if passed:
            print(f"PASS fixture {args.compare}: {len(gens)} generators match")
            return EXIT_OK
        print(f"FAIL fixture {args.compare}")
        for f in missing:
            print(f"  missing: {render_polynomial(f, order)}")
        for f in extra:
            print(f"  extra:   {render_polynomial(f, order)}")
        return EXIT_FAIL
    return EXIT_OK


def _cmd_t1(args):
    poset = load_poset(args.poset)
    order = _order_for(poset)
    gens = t1_generators(poset)
    if args.json:
        payload = {
            "poset": poset.to_json_dict(),
            "generators": [
                {
                    "source": t.source,
                    "lower": list(t.lower_set),
                    "upper": list(t.upper_set),
                    "image": render_monomial(t.image, order),
                }
                for t in gens
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for t in gens:
            print(f"{t.source}1*{t.source}2 -> {render_monomial(t.image, order)}")
    return EXIT_OK


def _cmd_check(args):
    tree = as_rooted_tree(load_poset(args.poset))
    verifier = Verifier(tree)
    if args.suite == "basic":
        reports = verifier.run_basic()
    else:
        reports = verifier.run_full(max_degree=args.max_degree)
    passed = sum(1 for r in reports if r.passed)
    if args.json:
        payload = {
            "poset": tree.to_json_dict(),
            "suite": args.suite,
            "reports": [r.to_json_dict() for r in reports],
            "passed": passed == len(reports),
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(r.line())
        print(f"{passed}/{len(reports)} checks passed")
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


def _cmd_hilbert(args):
    tree = as_rooted_tree(load_poset(args.poset))
    verifier = Verifier(tree)
    report = verifier.compare_hilbert(args.max_degree)
    if args.json:
        payload = {
            "poset": tree.to_json_dict(),
            "max_degree": args.max_degree,
            "J": report.params["J"],
            "L": report.params["L"],
            "passed": report.passed,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"J: {report.params['J']}")
        print(f"L: {report.params['L']}")
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_info(args):
    poset = load_poset(args.poset)
    tree = None
    if _is_tree(poset):
        tree = as_rooted_tree(poset)
    t1 = t1_generators(poset)
    info = {
        "elements": len(poset),
        "codimension": len(poset),
        "multiplicity": poset.count_order_ideals(),
        "tree": tree is not None,
        "u_parameters": None,
        "t1_generators": len(t1),
    }
    agree = True
    if tree is not None:
        from .letterplace import u_variables

        info["u_parameters"] = len(u_variables(tree))
        agree = info["u_parameters"] == info["t1_generators"]
    if args.json:
        info["agree"] = agree
        print(json.dumps(info, indent=2))
    else:
        print(f"elements:       {info['elements']}")
        print(f"codimension:    {info['codimension']}")
        print(f"multiplicity:   {info['multiplicity']}")
        if tree is not None:
            print(f"u-parameters:   {info['u_parameters']}")
        print(f"t1-generators:  {info['t1_generators']}")
        if tree is not None and not agree:
            print("ERROR: u-parameter and cotangent counts disagree")
    return EXIT_OK if agree else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lp",
        description="Deformed letterplace ideals of rooted-tree posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="print ideal generators")
    p.add_argument("poset", help="poset file")
    p.add_argument("--ideal", choices=["L", "J"], required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--compare", metavar="FILE", help="fixture file to compare against")
    p.set_defaults(func=_cmd_gens)

    p = sub.add_parser("t1", help="print cotangent generators")
    p.add_argument("poset")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_t1)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("poset")
    p.add_argument("--suite", choices=["basic", "full"], default="basic")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("hilbert", help="compare truncated Hilbert functions")
    p.add_argument("poset")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("info", help="summary invariants of a poset")
    p.add_argument("poset")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_info)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"lp: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except LpError as exc:
        print(f"lp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"lp: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
