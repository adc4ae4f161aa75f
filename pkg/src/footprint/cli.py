"""Command-line front end.

Exit codes: 0 success, 1 a property suite or internal consistency check
failed, 2 invalid usage or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .analysis import classify
from .constructions import (
    hermitian_polynomial,
    search_attaining,
    trace_difference_polynomial,
    trivial_polynomial,
    trivial_root_count,
)
from .errors import FootprintError, TheoremViolation
from .field import FieldSpec
from .grid import Grid, split_grid_spec
from .ordering import MonomialOrder
from .polynomial import Polynomial
from .suites import ALIASES, SUITES, run_suite
from .syntax import max_variable, parse_monomial

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def load_schema() -> dict:
    """The JSON schema every ``--json`` output (and search line) conforms to."""
    from importlib.resources import files

    return json.loads(files("footprint").joinpath("schemas/footprint.schema.json").read_text())


def _emit(obj, as_json: bool, lines=None):
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines if lines is not None else _table(obj):
            print(line)


def _table(d: dict, indent: str = "") -> list[str]:
    out = []
    width = max((len(k) for k in d), default=0)
    for k, v in d.items():
        if isinstance(v, dict):
            out.append(f"{indent}{k}:")
            out.extend(_table(v, indent + "  "))
        else:
            out.append(f"{indent}{k.ljust(width)}  {v}")
    return out


def _order_vars(text: str) -> int:
    return len(re.findall(r"[Xx]\d+", text))


def _infer_nvars(poly_text: str, grid_text: str, order_text: str | None) -> int:
    items = split_grid_spec(grid_text)
    candidates = [max_variable(poly_text), _order_vars(order_text or "")]
    if len(items) > 1:
        candidates.append(len(items))
    return max(max(candidates), 1)


def cmd_analyze(args) -> int:
    field = FieldSpec.parse(args.field)
    m = _infer_nvars(args.poly, args.grid, args.order)
    grid = Grid.parse(args.grid, field, m)
    order = MonomialOrder.parse(args.order, m) if args.order else MonomialOrder.default(m)
    f = Polynomial.parse(args.poly, field, m)
    report = classify(f, grid, order)
    _emit(report.to_dict(), args.json)
    return EXIT_OK


def _verification(poly: Polynomial, grid: Grid, expected: int) -> dict:
    counted = grid.count_roots(poly)
    return {"expected_roots": expected, "counted_roots": counted, "verified": counted == expected}


def cmd_construct(args, extra: list[str]) -> int:
    if args.family == "trivial":
        if not args.field:
            raise FootprintError("construct trivial needs --field")
        subset_args = _subset_options(extra)
        field = FieldSpec.parse(args.field)
        m = max(len(split_grid_spec(args.grid)) if args.grid else 1, max(subset_args, default=1))
        grid = Grid.parse(args.grid or "full", field, m)
        chosen = [[field.element(a) for a in subset_args.get(i, [])] for i in range(1, m + 1)]
        f = trivial_polynomial(grid, chosen, args.k)
        order = MonomialOrder.default(m)
        construction = {
            "family": "trivial",
            "polynomial": str(f),
            "field": str(field),
            "grid": grid.describe(),
            "subsets": [[str(a) for a in c] for c in chosen],
        }
        expected = trivial_root_count(grid, chosen)
    else:
        if extra:
            raise FootprintError(f"unexpected arguments {' '.join(extra)}")
        if args.q is None:
            raise FootprintError(f"construct {args.family} needs --q")
        build = hermitian_polynomial if args.family == "hermitian" else trace_difference_polynomial
        c = build(args.q)
        f, grid, order, expected = c.polynomial, c.grid, c.order, c.expected_roots
        construction = c.to_dict()
    verification = _verification(f, grid, expected)
    report = classify(f, grid, order)
    out = {"construction": construction, "verification": verification, "report": report.to_dict()}
    if args.json:
        _emit(out, True)
    else:
        print(f)
        _emit(None, False, _table({"verification": verification, "classification": report.classification.value}))
    return EXIT_OK if verification["verified"] else EXIT_FAILED


def _subset_options(extra: list[str]) -> dict[int, list[str]]:
    """Collect ``--sN a,b,...`` pairs left over by argparse."""
    out: dict[int, list[str]] = {}
    it = iter(extra)
    for tok in it:
        m = re.fullmatch(r"--s(\d+)(?:=(.*))?", tok)
        if not m:
            raise FootprintError(f"unrecognized argument {tok!r}")
        value = m.group(2)
        if value is None:
            value = next(it, None)
            if value is None:
                raise FootprintError(f"{tok} needs a value")
        idx = int(m.group(1))
        if idx < 1:
            raise FootprintError(f"variable index in {tok!r} must be at least 1")
        out[idx] = [v.strip() for v in value.split(",") if v.strip()]
    return out


def cmd_verify(args) -> int:
    fields = [FieldSpec.parse(f) for f in args.field] if args.field else None
    res = run_suite(args.suite, fields, args.trials, args.seed)
    d = res.to_dict()
    if args.json:
        _emit(d, True)
    else:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.checks} checks, {len(res.failures)} failures (seed {args.seed})")
        for entry in res.failures[:10]:
            print("  " + json.dumps(entry, sort_keys=True))
    if args.artifacts and res.failures:
        with open(args.artifacts, "w") as fh:
            json.dump(res.failures, fh, indent=2, sort_keys=True)
    return EXIT_OK if res.passed else EXIT_FAILED


def cmd_search(args) -> int:
    field = FieldSpec.parse(args.field)
    m = _infer_nvars(args.target, args.grid, args.order)
    grid = Grid.parse(args.grid, field, m)
    order = MonomialOrder.parse(args.order, m) if args.order else MonomialOrder.default(m)
    target = parse_monomial(args.target, m, field)
    exhaustive = True if args.exhaustive else (False if args.sample else None)
    result = search_attaining(grid, target, order, args.budget, args.seed, exhaustive)
    for f, rep in result.hits:
        print(json.dumps({"polynomial": str(f), "report": rep.to_dict()}, sort_keys=True))
    print(json.dumps({"summary": result.summary()}, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="footprint", description="Footprint bound analysis of polynomials over finite grids."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one polynomial")
    p.add_argument("poly", help='polynomial text, e.g. "X1^3+X2^2+X2"')
    p.add_argument("--field", required=True, help="p, p^k or p^k/m0,...,mk")
    p.add_argument("--grid", default="full", help="comma-separated factors: full, trace_nonzero:d, {a,b,...}")
    p.add_argument("--order", help="lex:X2,X1 | grlex:... | grevlex:... | weighted:3,1;lex:X1,X2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="build and verify an extremal family")
    p.add_argument("family", choices=["trivial", "hermitian", "trace-diff"])
    p.add_argument("--q", type=int, help="prime power q (the field is F_{q^2})")
    p.add_argument("--field")
    p.add_argument("--grid")
    p.add_argument("--k", default="1", help="nonzero constant of a trivial polynomial")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, help=", ".join([*SUITES, *ALIASES]))
    p.add_argument("--field", action="append", help="restrict the corpus to this field (repeatable)")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--artifacts", help="write failing cases as JSON to this path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="look for polynomials attaining the bound")
    p.add_argument("--field", required=True)
    p.add_argument("--grid", default="full")
    p.add_argument("--target", required=True, help="leading monomial, e.g. X2^2")
    p.add_argument("--order")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sample", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    try:
        if args.command == "construct":
            return cmd_construct(args, extra)
        if extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_search(args)
    except TheoremViolation as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except FootprintError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
