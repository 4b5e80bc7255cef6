"""Command-line front end: ``chowmod <group> <command> [options]``.

Exit codes: 0 success, 1 a check failed, 2 bad input or an exceeded size cap.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import parse_field

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _vector(args, text: str):
    from .witt import WittVector

    F = parse_field(args.field)
    values = [F.parse_element(v) for v in text.split(",") if v.strip()]
    if len(values) > args.m:
        raise ValueError(f"{len(values)} coefficients given for m = {args.m}")
    return WittVector.from_coeffs(F, args.m, values)


def _coeff_list(x) -> str:
    return "[" + ", ".join(x.field.format(c) for c in x.coeffs) + "]"


def _emit(data, out=None):
    text = json.dumps(data, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- witt -------------------------------------------------------------------------

def cmd_witt(args) -> int:
    from .chow import render_table, witt_table
    from .witt import additive_order, ghost, selftest, star_generators

    if args.command == "selftest":
        report = selftest(parse_field(args.field), args.m, trials=args.trials, seed=args.seed)
        _emit(report)
        return EXIT_OK if all(c["status"] == "pass" for c in report["checks"]) else EXIT_FAIL
    if args.command == "table":
        table = witt_table(args.field, args.m)
        if args.json:
            _emit(table)
        else:
            print(render_table(table))
        failed = [k for k, v in table["checks"].items() if v is False]
        return EXIT_FAIL if failed else EXIT_OK
    x = _vector(args, args.x)
    if args.command == "add":
        print(_coeff_list(x + _vector(args, args.y)))
    elif args.command == "star":
        print(_coeff_list(star_generators(x, _vector(args, args.y))))
    elif args.command == "ghost":
        g = ghost(x)
        print("[" + ", ".join(g.field.format(c) for c in g.entries) + "]")
    elif args.command == "order":
        print(additive_order(x))
    return EXIT_OK


# -- divisor ----------------------------------------------------------------------

def cmd_divisor(args) -> int:
    from .algebra import parse_poly
    from .divisors import div_witt, mult_convolution, parse_cycle, witt_of_cycle

    F = parse_field(args.field)
    if args.command == "div":
        print(div_witt(parse_poly(F, args.f, var="u")).format())
    elif args.command == "conv":
        print(mult_convolution(parse_cycle(F, args.a), parse_cycle(F, args.b)).format())
    elif args.command == "witt-of":
        f = witt_of_cycle(parse_cycle(F, args.a), rational=True)
        print(f.format("u"))
    return EXIT_OK


# -- cubical ----------------------------------------------------------------------

def cmd_cubical(args) -> int:
    import random

    from .cubical import ChainComplexOverZ, homology, random_instance, verify_instance

    if args.command == "homology":
        with open(args.input) as fh:
            C = ChainComplexOverZ.from_json(json.load(fh))
        degrees = [args.q] if args.q is not None else range(len(C.ranks))
        for q in degrees:
            H = homology(C, q)
            print(f"H_{q} = {H.format()}")
        return EXIT_OK
    rng = random.Random(args.seed)
    bad = 0
    for i in range(args.count):
        failures = verify_instance(random_instance(rng), rng)
        if failures:
            bad += 1
            print(f"instance {i}: " + "; ".join(failures))
    print(f"{args.count - bad}/{args.count} instances pass")
    return EXIT_FAIL if bad else EXIT_OK


# -- cycles -----------------------------------------------------------------------

def cmd_cycles(args) -> int:
    from .cycles import ModulusPair, ParamCurve, check_faces, check_modulus

    with open(args.input) as fh:
        data = json.load(fh)
    F = parse_field(data["field"])
    pair = ModulusPair.from_json(F, data["pair"])
    results = []
    for entry in data.get("curves", []):
        V = ParamCurve.from_json(pair, entry, F)
        cert = check_modulus(V, args.variant)
        results.append({"curve": V.format(), "proper_faces": check_faces(V), **cert.to_json()})
    _emit({"field": repr(F), "pair": pair.format(), "certificates": results})
    return EXIT_OK if all(r["verdict"] == "PASS" for r in results) else EXIT_FAIL


# -- chow / suite -----------------------------------------------------------------

def cmd_chow(args) -> int:
    from .chow import ChowComputationConfig, compute_ch0

    config = ChowComputationConfig(args.field, args.m, args.deg_bound, args.height, out=args.out, cap=args.cap)
    report = compute_ch0(config)
    summary = {
        "order": report.order,
        "expected_order": report.expected_order,
        "invariant_factors": report.invariant_factors,
        "relations": report.relations,
        "relations_map_to_identity": report.relations_map_to_identity,
        "surjective": report.surjective,
        "seconds": round(report.seconds, 3),
    }
    print(json.dumps(summary, indent=2))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_suite(args) -> int:
    from .suite import SCOPES, run_suite

    report = run_suite(args.scope or SCOPES)
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    from .cycles import NAIVE, STAR
    from .suite import SCOPES

    parser = argparse.ArgumentParser(prog="chowmod", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    witt = groups.add_parser("witt", help="truncated big Witt vectors")
    wsub = witt.add_subparsers(dest="command", required=True)
    for name in ("add", "star", "ghost", "order", "selftest", "table"):
        p = wsub.add_parser(name)
        p.add_argument("--field", required=True)
        p.add_argument("--m", type=int, required=True)
        if name in ("add", "star", "ghost", "order"):
            p.add_argument("--x", required=True, help="coefficients c_1,...,c_m")
        if name in ("add", "star"):
            p.add_argument("--y", required=True)
        if name == "selftest":
            p.add_argument("--trials", type=int, default=40)
            p.add_argument("--seed", type=int, default=0)
        if name == "table":
            p.add_argument("--json", action="store_true")
    witt.set_defaults(func=cmd_witt)

    div = groups.add_parser("divisor", help="zero-cycles on the line")
    dsub = div.add_subparsers(dest="command", required=True)
    p = dsub.add_parser("div")
    p.add_argument("--field", required=True)
    p.add_argument("--f", required=True, help="polynomial in u with constant term 1")
    p = dsub.add_parser("conv")
    p.add_argument("--field", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = dsub.add_parser("witt-of")
    p.add_argument("--field", required=True)
    p.add_argument("--a", required=True)
    div.set_defaults(func=cmd_divisor)

    cub = groups.add_parser("cubical", help="integer homology of chain complexes")
    csub = cub.add_subparsers(dest="command", required=True)
    p = csub.add_parser("homology")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--q", type=int)
    p = csub.add_parser("random-check")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    cub.set_defaults(func=cmd_cubical)

    cyc = groups.add_parser("cycles", help="modulus certificates for parametrized curves")
    ysub = cyc.add_subparsers(dest="command", required=True)
    p = ysub.add_parser("check")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--variant", choices=(STAR, NAIVE), default=STAR)
    cyc.set_defaults(func=cmd_cycles)

    chow = groups.add_parser("chow", help="CH_0 of the line with modulus m{0}")
    hsub = chow.add_subparsers(dest="command", required=True)
    p = hsub.add_parser("compute")
    p.add_argument("--field", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deg-bound", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=20000)
    chow.set_defaults(func=cmd_chow)

    suite = groups.add_parser("suite", help="run the invariant suites")
    suite.add_argument("--scope", action="append", choices=SCOPES)
    suite.add_argument("--out")
    suite.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    from .chow import CapExceeded

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
