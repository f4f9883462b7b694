"""Command-line front end.

JSON reports go to standard output, diagnostics to standard error.  Exit
codes: 0 success / orthogonal / all properties hold, 1 negative answer,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

from . import fixtures, serialize
from .pairing import is_T_orthogonal, is_T_theta_orthogonal
from .preserve import (
    adjoint_conjugate,
    hilbert_fit,
    is_T_isometry,
    preserver_scalar,
    preserves_T_orthogonality_sampled,
)
from .space import DEFAULT_TOL, is_bj_orthogonal, is_isosceles_orthogonal
from .suites import SUITES, run_suite
from .symmetry import is_theta_left_symmetric_at, symmetry_verdict

log = logging.getLogger("banach_ortho")

SEED_ENV = "BANACH_ORTHO_SEED"
EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _load(path, what, parse):
    if path is None:
        raise InputError(f"--{what} is required")
    try:
        return parse(serialize.load_json(path))
    except OSError as exc:
        raise InputError(f"cannot read {what} file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {what} file: {exc}") from None
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"invalid {what}: {exc}") from None


def _emit(obj):
    print(serialize.dumps(obj))


def cmd_check(args) -> int:
    x = _load(args.x, "x", serialize.vector_from_json)
    y = _load(args.y, "y", serialize.vector_from_json)
    rel = args.relation
    try:
        if rel in ("t", "t-theta"):
            T = _load(args.operator, "operator", serialize.operator_from_json)
            if rel == "t":
                res = is_T_orthogonal(T, x, y, args.tol)
            else:
                if args.theta is None:
                    raise InputError("--theta is required for t-theta")
                res = is_T_theta_orthogonal(T, args.theta, x, y, args.tol)
        else:
            sp = _load(args.space, "space", serialize.space_from_json)
            fn = is_bj_orthogonal if rel == "bj" else is_isosceles_orthogonal
            res = fn(sp, x, y, args.tol)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(serialize.orth_result_to_json(res))
    return EXIT_OK if res.verdict else EXIT_NO


def cmd_symmetry(args) -> int:
    T = _load(args.operator, "operator", serialize.operator_from_json)
    x = _load(args.x, "x", serialize.vector_from_json)
    try:
        out = serialize.symmetry_verdict_to_json(symmetry_verdict(T, x, args.tol))
        if args.theta is not None:
            out["theta"] = args.theta
            out["theta_left"] = is_theta_left_symmetric_at(T, args.theta, x, args.tol)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(out)
    return EXIT_OK


def cmd_isometry(args) -> int:
    T = _load(args.operator, "operator", serialize.operator_from_json)
    A = _load(args.endo, "endo", serialize.operator_from_json).M
    try:
        K = adjoint_conjugate(T, A)
        beta = preserver_scalar(T, A, args.tol)
        out = {
            "is_t_isometry": is_T_isometry(T, A, args.tol),
            "preserver_scalar": None if beta is None else serialize.scalar_to_json(beta),
            "pulled_back": serialize.operator_to_json(K),
        }
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(out)
    return EXIT_OK if out["is_t_isometry"] else EXIT_NO


def cmd_preserve(args) -> int:
    T = _load(args.operator, "operator", serialize.operator_from_json)
    A = _load(args.endo, "endo", serialize.operator_from_json).M
    try:
        res = preserves_T_orthogonality_sampled(T, A, args.trials, args.seed, args.tol)
        beta = preserver_scalar(T, A, args.tol)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({
        "holds": res.holds,
        "counterexample": None if res.counterexample is None else list(res.counterexample),
        "conclusive": res.conclusive,
        "preserver_scalar": beta,
        "samples": args.trials,
        "seed": args.seed,
    })
    return EXIT_OK if res.holds else EXIT_NO


def cmd_hilbert_fit(args) -> int:
    sp = _load(args.space, "space", serialize.space_from_json)
    try:
        rep = hilbert_fit(sp, args.trials, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(serialize.fit_report_to_json(rep))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise InputError(f"unknown suite {args.suite!r}")
    rep = run_suite(args.suite, args.seed, args.trials)
    log.info("suite %s: %.2fs", args.suite, rep.wall_time)
    _emit(rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_NO


def cmd_fixtures(args) -> int:
    try:
        results = [fixtures.run_fixture(args.name)] if args.name else fixtures.run_all_fixtures()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok = sum(r.reproduced for r in results)
    _emit({
        "reproduced": ok,
        "total": len(results),
        "fixtures": [r.to_dict() for r in results],
    })
    return EXIT_OK if ok == len(results) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", metavar="FILE")
    common.add_argument("--operator", metavar="FILE")
    common.add_argument("--endo", metavar="FILE", help="operator A on X, same format as --operator")
    common.add_argument("--x", metavar="FILE")
    common.add_argument("--y", metavar="FILE")
    common.add_argument("--theta", type=float, metavar="RAD")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, metavar="REAL")
    common.add_argument("--seed", type=int, default=None, metavar="INT")
    common.add_argument("--trials", type=int, default=None, metavar="INT")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="banach-ortho", description="T-orthogonality in finite-dimensional l_p spaces"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one orthogonality relation")
    p.add_argument("--relation", required=True, choices=["t", "t-theta", "bj", "isosceles"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("symmetry", parents=[common], help="left/right symmetry at a point")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("isometry", parents=[common], help="T-isometry and preserver scalar")
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("preserve", parents=[common], help="sample orthogonality preservation")
    p.set_defaults(func=cmd_preserve)

    p = sub.add_parser("hilbert-fit", parents=[common], help="fit a pairing to BJ orthogonality")
    p.set_defaults(func=cmd_hilbert_fit)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="replay the worked examples")
    p.add_argument("--name", choices=sorted(fixtures.FIXTURES))
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.trials is None and args.command in ("preserve", "hilbert-fit"):
            args.trials = 500 if args.command == "preserve" else 200
        if args.trials is not None and args.trials < 1:
            raise InputError("--trials must be positive")
        if args.tol < 0 or math.isnan(args.tol):
            raise InputError("--tol must be nonnegative")
        return args.func(args)
    except InputError as exc:
        print(f"banach-ortho: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
