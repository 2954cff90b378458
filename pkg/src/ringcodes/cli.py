"""Command-line front end.

Subcommands: ``verify`` (condition report plus direct predicate checks),
``reproduce`` (named worked-example scenarios), ``construct`` (certified
combining matrices), ``dual`` (brute-force dual of a code), ``distance``
(exact minimum distance, and the product lower bound when a matrix is
given).

Exit codes: 0 all requested properties/expectations hold, 1 a property
or expectation fails, 2 input, parse, hypothesis, or budget error.  The
environment variable ``RINGCODES_BUDGET`` overrides the default
enumeration budget; ``--budget`` overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .code import LinearCode
from .constructions import (
    adiag1_matrix_a,
    adiag1_matrix_b,
    adiag3_matrix,
    block_adiag_matrix,
    diag1_matrix,
)
from .errors import HypothesisViolationError, NotationError, RingCodesError
from .mpc import (
    MPCSpec,
    SELF_DUAL,
    SELF_ORTHOGONAL,
    build_mpc,
    check_conditions,
    min_distance_lower_bound,
    mpc_dual_theorem,
)
from .notation import (
    code_to_json_dict,
    describe_code,
    format_matrix,
    parse_element,
    parse_generators,
    parse_code,
    parse_matrix,
    parse_ring,
)
from .ring import DEFAULT_ENUMERATION_BUDGET, resolve_budget
from .scenarios import run_scenario, scenario_ids

_EXPECTABLE = {
    "self-orthogonal": SELF_ORTHOGONAL,
    "self-dual": SELF_DUAL,
}

_CONSTRUCT_FAMILIES = {
    "diag1": diag1_matrix,
    "adiag1a": adiag1_matrix_a,
    "adiag1b": adiag1_matrix_b,
    "adiag3": adiag3_matrix,
    "block": block_adiag_matrix,
}


def _default_budget() -> Optional[int]:
    raw = os.environ.get("RINGCODES_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise NotationError(f"RINGCODES_BUDGET must be an integer, got {raw!r}") from None


def _resolve_cli_budget(args) -> int:
    return resolve_budget(args.budget if args.budget is not None else _default_budget())


def _parse_cli_code(text: str, ring, length: Optional[int]) -> LinearCode:
    text = text.strip()
    if text.startswith("span"):
        code = parse_code(text)
        if code.ring != ring:
            raise NotationError("the code's ring differs from --ring")
        return code
    return parse_generators(text, ring, length)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _report_lines(report) -> list[str]:
    lines = [f"gram: {report.gram.tag}"]
    if report.gram.lambdas is not None:
        lines[-1] += " (" + ",".join(str(v) for v in report.gram.lambdas) + ")"
    for cond in report.conditions:
        status = {True: "holds", False: "fails", None: "indeterminate"}[cond.holds]
        lines.append(f"  {cond.condition_id}: {status} -- {cond.detail}")
    if report.conclusions:
        for conc in report.conclusions:
            lines.append(f"conclusion: {conc.property} (by {conc.justified_by})")
    else:
        lines.append("conclusion: none")
    return lines


def _cmd_verify(args) -> int:
    budget = _resolve_cli_budget(args)
    ring = parse_ring(args.ring)
    codes = [_parse_cli_code(text, ring, args.length) for text in args.code]
    matrix = parse_matrix(args.matrix, ring)
    spec = MPCSpec(tuple(codes), matrix)
    report = check_conditions(spec, budget)
    mpc = build_mpc(spec, budget)

    theorem_dual = None
    if args.use_dual_theorem:
        theorem_dual = mpc_dual_theorem(spec, budget)

    expectations = []
    for prop in args.expect or []:
        if prop not in _EXPECTABLE:
            raise NotationError(
                f"unknown property {prop!r}; expected one of {sorted(_EXPECTABLE)}"
            )
        if prop == "self-orthogonal":
            holds = mpc.is_self_orthogonal()
        elif theorem_dual is not None:
            holds = (
                mpc.is_self_orthogonal()
                and mpc.cardinality == theorem_dual.cardinality
            )
        else:
            holds = mpc.is_self_dual(budget)
        expectations.append((prop, holds))

    lines = [
        f"ring: {ring.description()}",
        f"matrix: {format_matrix(matrix)}",
        f"product: length {mpc.length}, {mpc.cardinality} codewords",
    ]
    lines += _report_lines(report)
    if theorem_dual is not None:
        lines.append(
            f"dual (via the inverse-transpose construction): "
            f"{theorem_dual.cardinality} codewords"
        )
    for prop, holds in expectations:
        lines.append(f"expect {prop}: {'PASS' if holds else 'FAIL'}")

    payload = {
        "ring": ring.description(),
        "matrix": format_matrix(matrix),
        "report": report.to_json_dict(),
        "product": {"length": mpc.length, "cardinality": mpc.cardinality},
        "expectations": [{"property": p, "holds": h} for p, h in expectations],
    }
    if theorem_dual is not None:
        payload["dual_theorem_cardinality"] = theorem_dual.cardinality
    _emit(args, payload, lines)
    return 0 if all(h for _, h in expectations) else 1


def _cmd_reproduce(args) -> int:
    budget = _resolve_cli_budget(args)
    result = run_scenario(args.scenario, budget)
    lines = [f"scenario {result.scenario_id}: {result.description}"]
    for e in result.expectations:
        lines.append(f"  {'PASS' if e.passed else 'FAIL'} {e.name} [{e.witness}]")
    lines.append("all expectations hold" if result.passed else "some expectations FAILED")
    _emit(args, result.to_json_dict(), lines)
    return 0 if result.passed else 1


def _cmd_construct(args) -> int:
    budget = _resolve_cli_budget(args)
    ring = parse_ring(args.ring)
    u = parse_element(args.u, ring) if args.u is not None else None
    family = _CONSTRUCT_FAMILIES[args.family]
    if args.family == "block":
        cert = family(ring, u, s=args.s, budget=budget)
    else:
        cert = family(ring, u, budget=budget)
    payload = cert.to_json_dict()
    lines = [
        f"matrix: {format_matrix(cert.matrix)}",
        "certificate: " + json.dumps(payload, indent=2),
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_dual(args) -> int:
    budget = _resolve_cli_budget(args)
    ring = parse_ring(args.ring)
    code = _parse_cli_code(args.code, ring, args.length)
    dual = code.dual_bruteforce(budget)
    lines = [
        f"code: {describe_code(code)}",
        f"dual: {describe_code(dual)}",
        f"dual cardinality: {dual.cardinality}",
    ]
    payload = {
        "code": code_to_json_dict(code),
        "dual_cardinality": dual.cardinality,
        "dual": code_to_json_dict(dual)
        if dual.cardinality <= 64
        else {"ring": ring.description(), "length": dual.length},
    }
    _emit(args, payload, lines)
    return 0


def _cmd_distance(args) -> int:
    budget = _resolve_cli_budget(args)
    ring = parse_ring(args.ring)
    codes = [_parse_cli_code(text, ring, args.length) for text in args.code]
    if args.matrix is None:
        if len(codes) != 1:
            raise NotationError("distance without --matrix takes exactly one --code")
        d = codes[0].min_distance()
        _emit(args, {"min_distance": d}, [f"minimum distance: {d}"])
        return 0
    matrix = parse_matrix(args.matrix, ring)
    spec = MPCSpec(tuple(codes), matrix)
    mpc = build_mpc(spec, budget)
    exact = mpc.min_distance()
    bound = min_distance_lower_bound(spec, budget)
    _emit(
        args,
        {"min_distance": exact, "lower_bound": bound, "length": mpc.length},
        [
            f"product length: {mpc.length}",
            f"exact minimum distance: {exact}",
            f"lower bound (min d_i * delta_i): {bound}",
        ],
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"enumeration budget (default {DEFAULT_ENUMERATION_BUDGET}, "
        "or RINGCODES_BUDGET)",
    )

    parser = argparse.ArgumentParser(
        prog="ringcodes",
        description="Construct and verify self-orthogonal and self-dual "
        "matrix-product codes over finite commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify", parents=[common],
        help="run the condition report and direct property checks on a product",
    )
    p.add_argument("--ring", required=True, help="ring description, e.g. Z/20")
    p.add_argument(
        "--code", action="append", required=True,
        help="input code: '{ (10) }' or 'span Z/20 len 1 { (10) }' (repeatable)",
    )
    p.add_argument("--length", type=int, default=None, help="code length (for '{ }')")
    p.add_argument("--matrix", required=True, help="matrix literal, e.g. [[1,2],[0,0]]")
    p.add_argument(
        "--expect", action="append", default=[],
        help="property to check: self-orthogonal or self-dual (repeatable)",
    )
    p.add_argument(
        "--use-dual-theorem", action="store_true",
        help="compute the product dual via the inverse-transpose construction "
        "(requires a non-singular square matrix)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "reproduce", parents=[common], help="run a named worked-example scenario"
    )
    p.add_argument(
        "scenario",
        help="one of: " + ", ".join(scenario_ids()),
    )
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser(
        "construct", parents=[common], help="build a certified combining matrix"
    )
    p.add_argument("family", choices=sorted(_CONSTRUCT_FAMILIES))
    p.add_argument("--ring", required=True)
    p.add_argument("--u", default=None, help="element with the required property")
    p.add_argument("--s", type=int, default=2, help="block size (family 'block')")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("dual", parents=[common], help="brute-force dual of a code")
    p.add_argument("--ring", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--length", type=int, default=None)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser(
        "distance", parents=[common],
        help="exact minimum distance; with --matrix also the product bound",
    )
    p.add_argument("--ring", required=True)
    p.add_argument("--code", action="append", required=True)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--matrix", default=None)
    p.set_defaults(func=_cmd_distance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolationError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 2
    except RingCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
