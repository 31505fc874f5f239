"""Command line entry point: ``dqcalc eval | verify | pascal``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 the function is
undefined at the given point (DomainError / SingularInput).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import DualQuaternion, Vector3
from .calculus import (
    LogBranch,
    apply,
    cayley_dq,
    dq_abs,
    exp_dq,
    inv_dq,
    log_dq_detailed,
    pow_dq,
)
from .errors import DomainError, InvalidParameter, SingularInput
from .functions import ValidPolynomial
from .pauli import MAX_PASCAL_ROW, pauli_pascal_row
from .verify import SUITES, format_report, run_suite


class UsageError(Exception):
    pass


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc}") from exc
    return text


def parse_dq(text: str) -> DualQuaternion:
    try:
        return DualQuaternion.from_dict(json.loads(_read_arg(text)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad dual quaternion JSON: {exc}") from exc


def parse_axis(text: str) -> Vector3:
    try:
        x, y, z = (float(s) for s in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--axis expects x,y,z, got {text!r}") from exc
    return Vector3(x, y, z)


def evaluate(fn_spec: str, eta: DualQuaternion, branch: LogBranch = LogBranch()) -> dict:
    """Dispatch an ``--fn`` spec and return the JSON-ready result."""
    name, _, arg = fn_spec.partition(":")
    if name == "exp":
        return exp_dq(eta).to_dict()
    if name == "log":
        res = log_dq_detailed(eta, branch)
        return {
            "result": res.value.to_dict(),
            "branch": {
                "t": res.t,
                "n": res.n,
                "axis": None if res.axis is None else list(res.axis.to_tuple()),
                "p": list(res.p.to_tuple()),
            },
        }
    if name == "pow":
        try:
            alpha = float(arg)
        except ValueError as exc:
            raise UsageError(f"bad exponent in {fn_spec!r}") from exc
        return pow_dq(eta, alpha).to_dict()
    if name == "cayley":
        return cayley_dq(eta).to_dict()
    if name == "inv":
        return inv_dq(eta).to_dict()
    if name == "abs":
        return dq_abs(eta).to_dict()
    if name == "poly":
        if not arg.startswith("@"):
            raise UsageError("poly expects poly:@file.json")
        try:
            p = ValidPolynomial.from_json(json.loads(_read_arg(arg)))
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad polynomial JSON: {exc}") from exc
        return apply(p.to_valid_function(), eta).to_dict()
    raise UsageError(f"unknown function {fn_spec!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dqcalc", description="Functional calculus for dual quaternions.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a function at a dual quaternion")
    ev.add_argument("--fn", required=True,
                    help='exp | log | pow:ALPHA | cayley | inv | abs | poly:@file.json')
    ev.add_argument("--dq", required=True, help="dual quaternion JSON, inline or @file")
    ev.add_argument("--branch-t", type=float, default=None, help="log: polar angle when a1 != 0")
    ev.add_argument("--branch-n", type=int, default=None, help="log: winding number when a1 = 0")
    ev.add_argument("--axis", default=None, help="log: fallback axis x,y,z when a1 = 0 and b1 = 0")

    ve = sub.add_parser("verify", help="run randomized verification suites")
    ve.add_argument("--suite", choices=("all",) + SUITES, default="all")
    ve.add_argument("--trials", type=int, default=1000)
    ve.add_argument("--seed", type=int, default=42)
    ve.add_argument("--tol", type=float, default=None,
                    help="override every check's pinned tolerance")

    pa = sub.add_parser("pascal", help="print Pauli-Pascal triangle rows 0..N")
    pa.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            branch = LogBranch(t=args.branch_t, n=args.branch_n)
            if args.axis is not None:
                branch = LogBranch(t=args.branch_t, n=args.branch_n, axis_fallback=parse_axis(args.axis))
            out = evaluate(args.fn, parse_dq(args.dq), branch)
            print(json.dumps(out))
            return 0
        if args.command == "verify":
            if args.trials < 1:
                raise UsageError("--trials must be at least 1")
            if not (args.seed >= 0 and args.seed < 2**64):
                raise UsageError("--seed must be a 64-bit unsigned integer")
            if args.tol is not None and not args.tol > 0:
                raise UsageError("--tol must be positive")
            results = run_suite(args.suite, args.seed, args.trials, args.tol)
            print(format_report(results))
            return 0 if all(r.passed for r in results) else 1
        if args.command == "pascal":
            if not 0 <= args.n <= MAX_PASCAL_ROW:
                raise UsageError(f"--n must be in 0..{MAX_PASCAL_ROW}")
            for n in range(args.n + 1):
                print(" ".join(str(c) for c in pauli_pascal_row(n)))
            return 0
    except (UsageError, InvalidParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, SingularInput) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
