"""Command-line front end.

Subcommands: mu, nu, jump, deformation, oracle, verify, table.  Output is
human-readable text by default and JSON with --json.  Integers whose
magnitude exceeds 2**53 - 1 are emitted as decimal strings in JSON so
that consumers with double-precision parsers cannot silently round them.

Exit codes: 0 success, 2 invalid input, 3 internal exact-arithmetic
failure, 4 verification failure (a failing `verify` suite or a
--check-oracle mismatch).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .brieskorn_pham import BrieskornPham, is_interior
from .deformation import (
    MonomialDeformation,
    boundary_jump,
    interior_jump,
    jump_by_newton_numbers,
    monomial_jump,
)
from .errors import IntegralityError, InvalidInput
from .geometry import DEFAULT_MAX_DIM, SupportSet
from .jump import (
    DEFAULT_ENUMERATION_LIMIT,
    JumpReport,
    nondegenerate_jump,
    nondegenerate_jump_bruteforce,
)
from .newton import newton_number
from .verification import run_all

JSON_SAFE_MAX = 2**53 - 1

ENV_MAX_DIM = "MILNOR_JUMP_MAX_DIM"


def _default_max_dim() -> int:
    raw = os.environ.get(ENV_MAX_DIM)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_DIM


def _json_ready(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_MAX else value
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    return value


def _emit_json(payload) -> None:
    print(json.dumps(_json_ready(payload)))


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(int(p) for p in parts if p != "")
    except ValueError:
        raise InvalidInput(f"{what} must be a comma-separated list of integers, got {text!r}")


def _parse_base(text: str, max_dim: int) -> BrieskornPham:
    exponents = _parse_int_list(text, "exponents")
    base = BrieskornPham(exponents)
    if base.n > max_dim:
        raise InvalidInput(
            f"{base.n} variables exceed the dimension guard ({max_dim}); "
            f"raise --max-dim or {ENV_MAX_DIM}"
        )
    return base


def _load_support(path: str) -> SupportSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InvalidInput(f"cannot read support file: {exc}")
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"support file is not valid JSON: {exc}")
    if not isinstance(data, list) or not data or not all(isinstance(row, list) for row in data):
        raise InvalidInput("support file must be a non-empty JSON array of integer arrays")
    return SupportSet.from_points(tuple(row) for row in data)


def _solution_payload(solution):
    if solution is None:
        return None
    return {"i_low": list(solution.i_low), "i_tilde": solution.i_tilde}


def _report_payload(report: JumpReport, include_trace: bool) -> dict:
    payload = {
        "lambda_nd": report.lambda_nd,
        "realizer": list(report.realizer),
        "lambda_hyp": report.lambda_hyp,
        "source": report.source,
    }
    if include_trace:
        payload["hyperplane_jumps"] = [
            {"axis": k + 1, "truncation_jump": lam, "contribution": contribution}
            for k, (lam, contribution) in enumerate(report.hyperplane_jumps)
        ]
        payload["interior_trace"] = [
            {
                "l": entry.l,
                "solution": _solution_payload(entry.solution),
                "admissible": entry.admissible,
            }
            for entry in report.interior_trace
        ]
    return payload


def _format_point(point) -> str:
    return ",".join(str(c) for c in point)


def _print_report(report: JumpReport, include_trace: bool) -> None:
    print(f"lambda_nd  = {report.lambda_nd}")
    print(f"realizer   = {_format_point(report.realizer)}")
    print(f"lambda_hyp = {report.lambda_hyp if report.lambda_hyp is not None else 'none'}")
    print(f"source     = {report.source}")
    if not include_trace:
        return
    if report.hyperplane_jumps:
        print("hyperplane jumps:")
        for k, (lam, contribution) in enumerate(report.hyperplane_jumps):
            print(f"  axis {k + 1}: truncation jump {lam}, contribution {contribution}")
    if report.interior_trace:
        print("interior search:")
        for entry in report.interior_trace:
            if entry.solution is None:
                print(f"  l={entry.l}: no box solution")
            else:
                status = "admissible" if entry.admissible else "inadmissible"
                print(
                    f"  l={entry.l}: i_low={_format_point(entry.solution.i_low)} "
                    f"i_tilde={entry.solution.i_tilde} {status}"
                )


def cmd_mu(args) -> int:
    exponents = _parse_int_list(args.exponents, "exponents")
    base = BrieskornPham(exponents)
    value = base.milnor_number()
    if args.json:
        _emit_json({"exponents": list(exponents), "milnor_number": value})
    else:
        print(value)
    return 0


def cmd_nu(args) -> int:
    support = _load_support(args.support)
    value = newton_number(support, max_dim=args.max_dim)
    if args.json:
        _emit_json(
            {
                "dimension": support.dim,
                "points": len(support),
                "newton_number": value,
            }
        )
    else:
        print(value)
    return 0


def cmd_jump(args) -> int:
    base = _parse_base(args.exponents, args.max_dim)
    report = nondegenerate_jump(base)
    oracle = None
    if args.check_oracle:
        oracle = nondegenerate_jump_bruteforce(base, max_product=args.max_product)
        if oracle[0] != report.lambda_nd:
            print(
                f"oracle mismatch: algorithm gives {report.lambda_nd}, "
                f"brute force gives {oracle[0]} at {oracle[1]}",
                file=sys.stderr,
            )
            return 4
    if args.json:
        payload = _report_payload(report, args.trace)
        if oracle is not None:
            payload["oracle"] = {"lambda_nd": oracle[0], "realizer": list(oracle[1])}
        _emit_json(payload)
    else:
        _print_report(report, args.trace)
        if oracle is not None:
            print(f"oracle     = {oracle[0]} at {_format_point(oracle[1])} (agrees)")
    return 0


def cmd_deformation(args) -> int:
    base = _parse_base(args.exponents, args.max_dim)
    monomial = _parse_int_list(args.monomial, "monomial")
    defm = MonomialDeformation(base, monomial)
    value = monomial_jump(defm)
    difference = jump_by_newton_numbers(defm)
    interior = interior_jump(defm) if is_interior(monomial) else None
    truncation = boundary_jump(defm) if not is_interior(monomial) else None
    agree = all(v == value for v in (difference, interior, truncation) if v is not None)
    if args.json:
        _emit_json(
            {
                "exponents": list(base.exponents),
                "monomial": list(defm.index),
                "jump": value,
                "method": "interior" if interior is not None else "truncation",
                "newton_number_difference": difference,
                "interior_formula": interior,
                "truncation_recursion": truncation,
                "agree": agree,
            }
        )
    else:
        print(f"jump = {value}")
        print(f"method = {'interior' if interior is not None else 'truncation'}")
        print(f"newton_number_difference = {difference}")
        print(f"interior_formula = {interior if interior is not None else 'none'}")
        print(f"truncation_recursion = {truncation if truncation is not None else 'none'}")
        print(f"agree = {'yes' if agree else 'no'}")
    if not agree:
        print("internal error: jump methods disagree", file=sys.stderr)
        return 3
    return 0


def cmd_oracle(args) -> int:
    base = _parse_base(args.exponents, args.max_dim)
    value, realizer = nondegenerate_jump_bruteforce(base, max_product=args.max_product)
    if args.json:
        _emit_json({"lambda_nd": value, "realizer": list(realizer)})
    else:
        print(f"lambda_nd = {value}")
        print(f"realizer  = {_format_point(realizer)}")
    return 0


def cmd_verify(args) -> int:
    results = run_all(n_max=args.n, p_max=args.pmax, seed=args.seed)
    failed = sum(r.failed for r in results)
    passed = sum(r.passed for r in results)
    if args.json:
        _emit_json(
            {
                "suites": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "failed": r.failed,
                        "failures": r.failures,
                    }
                    for r in results
                ],
                "ok": failed == 0,
            }
        )
    else:
        for r in results:
            print(f"{r.name}: passed={r.passed} failed={r.failed}")
            for message in r.failures:
                print(f"  {message}")
        if failed == 0:
            print(f"all suites passed ({passed} checks)")
        else:
            print(f"{failed} checks failed out of {passed + failed}")
    return 0 if failed == 0 else 4


def cmd_table(args) -> int:
    if args.n < 1:
        raise InvalidInput("--n must be at least 1")
    if args.n > args.max_dim:
        raise InvalidInput(f"--n exceeds the dimension guard ({args.max_dim})")
    if args.pmax < 2:
        raise InvalidInput("--pmax must be at least 2")
    exponent_range = range(2, args.pmax + 1)
    if args.json:
        entries = []
        for exps in _product_tuples(args.n, exponent_range):
            entries.append(
                {
                    "exponents": list(exps),
                    "lambda_nd": nondegenerate_jump(BrieskornPham(exps)).lambda_nd,
                }
            )
        _emit_json({"n": args.n, "pmax": args.pmax, "entries": entries})
        return 0
    if args.n == 2:
        header = ["p1\\p2"] + [str(q) for q in exponent_range]
        print("\t".join(header))
        for p in exponent_range:
            row = [str(p)]
            for q in exponent_range:
                row.append(str(nondegenerate_jump(BrieskornPham((p, q))).lambda_nd))
            print("\t".join(row))
    else:
        print("\t".join([f"p{i + 1}" for i in range(args.n)] + ["lambda_nd"]))
        for exps in _product_tuples(args.n, exponent_range):
            value = nondegenerate_jump(BrieskornPham(exps)).lambda_nd
            print("\t".join([str(p) for p in exps] + [str(value)]))
    return 0


def _product_tuples(n, exponent_range):
    return itertools.product(exponent_range, repeat=n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnor-jump",
        description=(
            "Exact Newton numbers and non-degenerate Milnor number jumps of "
            "Brieskorn-Pham singularities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, max_product=False):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument(
            "--max-dim",
            type=int,
            default=_default_max_dim(),
            help="dimension guard for combinatorial geometry (default %(default)s)",
        )
        if max_product:
            p.add_argument(
                "--max-product",
                type=int,
                default=DEFAULT_ENUMERATION_LIMIT,
                help="guard on the exponent product for lattice enumeration",
            )

    p_mu = sub.add_parser("mu", help="Milnor number of a Brieskorn-Pham singularity")
    p_mu.add_argument("exponents", help="comma-separated exponents, e.g. 11,6,5")
    add_common(p_mu)
    p_mu.set_defaults(func=cmd_mu)

    p_nu = sub.add_parser("nu", help="Newton number of a convenient support file")
    p_nu.add_argument("--support", required=True, help="JSON file: array of integer arrays")
    add_common(p_nu)
    p_nu.set_defaults(func=cmd_nu)

    p_jump = sub.add_parser("jump", help="non-degenerate jump via the inductive algorithm")
    p_jump.add_argument("exponents", help="comma-separated exponents, e.g. 11,6,5")
    p_jump.add_argument("--trace", action="store_true", help="include the per-l search records")
    p_jump.add_argument(
        "--check-oracle",
        action="store_true",
        help="cross-check against the brute-force lattice minimum (exit 4 on mismatch)",
    )
    add_common(p_jump, max_product=True)
    p_jump.set_defaults(func=cmd_jump)

    p_def = sub.add_parser("deformation", help="jump of one monomial deformation, all methods")
    p_def.add_argument("exponents", help="comma-separated exponents")
    p_def.add_argument("--monomial", required=True, help="comma-separated exponent vector")
    add_common(p_def)
    p_def.set_defaults(func=cmd_deformation)

    p_oracle = sub.add_parser("oracle", help="brute-force minimum over lattice points below the diagram")
    p_oracle.add_argument("exponents", help="comma-separated exponents")
    add_common(p_oracle, max_product=True)
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="run the self-check suites")
    p_verify.add_argument("--n", type=int, default=3, help="max number of variables (default 3)")
    p_verify.add_argument("--pmax", type=int, default=6, help="max exponent (default 6)")
    p_verify.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="table of jump values over an exponent grid")
    p_table.add_argument("--n", type=int, default=2, help="number of variables (default 2)")
    p_table.add_argument("--pmax", type=int, default=9, help="max exponent (default 9)")
    add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegralityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
