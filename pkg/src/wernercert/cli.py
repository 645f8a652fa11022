"""Command-line front end.

Subcommands: threshold, generate, verify, criteria, moments.  Exit codes:
0 success / verification passed, 1 usage error, 2 threshold exceeded,
3 verification failed, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certificate import (
    DEFAULT_TERM_CAP,
    VerifyTolerances,
    load_certificate,
    serialize_certificate,
    verify_certificate,
)
from .criteria import ppt_min_eig, separability_threshold, worst_cs_margin
from .decompose import decompose_werner
from .errors import (
    CapacityError,
    CertificateFormatError,
    CertificateValidationError,
    ContractViolationError,
    InvalidIndexError,
    InvalidParameterError,
    ThresholdExceededError,
)
from .phases import cross_moment_sum, moment_sums
from .states import werner_state

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_THRESHOLD = 2
EXIT_VERIFY_FAILED = 3
EXIT_CAPACITY = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; route through our exit table.
    def error(self, message):
        raise _UsageError(message)


def _dim_arg(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be an integer >= 2")
    return value


def _s_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a decimal or p/q fraction: {text!r}") from exc
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError("must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wernercert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, help_text, func):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("threshold", "print the exact separability threshold 1/(1 + d**(n-1))", cmd_threshold)
    p.add_argument("--d", type=_dim_arg, required=True, help="local dimension (>= 2)")
    p.add_argument("--n", type=_dim_arg, required=True, help="number of qudits (>= 2)")

    p = add("generate", "write a separable decomposition certificate for W(s)", cmd_generate)
    p.add_argument("--d", type=_dim_arg, required=True)
    p.add_argument("--n", type=_dim_arg, required=True)
    p.add_argument("--s", type=_s_arg, required=True, help="mixing weight, decimal or exact p/q")
    p.add_argument("--out", help="output path (default: document to stdout)")
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP, help="maximum certificate size")

    p = add("verify", "check a certificate file against W(s)", cmd_verify)
    p.add_argument("--cert", required=True, help="certificate document path")
    p.add_argument("--d", type=_dim_arg, required=True)
    p.add_argument("--n", type=_dim_arg, required=True)
    p.add_argument("--s", type=_s_arg, required=True)
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("--weights-tol", type=float, default=VerifyTolerances.weights_sum)
    p.add_argument("--norm-tol", type=float, default=VerifyTolerances.local_norm)
    p.add_argument("--residual-tol", type=float, default=VerifyTolerances.residual)

    p = add("criteria", "evaluate necessary conditions on W(s)", cmd_criteria)
    p.add_argument("--d", type=_dim_arg, required=True)
    p.add_argument("--n", type=_dim_arg, required=True)
    p.add_argument("--s", type=_s_arg, required=True)
    p.add_argument("--full-scan", action="store_true", help="scan every index quadruple (slow)")

    p = add("moments", "print the exact phase-ensemble moment identities", cmd_moments)
    p.add_argument("--d", type=_dim_arg, required=True)

    return parser


def cmd_threshold(args) -> int:
    t = separability_threshold(args.d, args.n)
    if args.json:
        print(json.dumps({
            "d": args.d,
            "n": args.n,
            "numerator": t.numerator,
            "denominator": t.denominator,
            "value": float(t),
        }))
    else:
        print(f"{t} = {float(t)}")
    return EXIT_OK


def cmd_generate(args) -> int:
    cert = decompose_werner(args.d, args.n, args.s, term_cap=args.term_cap)
    doc = serialize_certificate(cert, term_cap=args.term_cap)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(doc)
        if args.json:
            print(json.dumps({"out": args.out, "term_count": cert.term_count}))
        else:
            print(f"wrote certificate with {cert.term_count} terms to {args.out}")
    else:
        sys.stdout.buffer.write(doc)
        sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = load_certificate(args.cert, term_cap=args.term_cap)
    except (CertificateFormatError, CertificateValidationError) as exc:
        print(f"certificate rejected: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    if (cert.d, cert.n) != (args.d, args.n):
        print(
            f"certificate shape (d={cert.d}, n={cert.n}) does not match requested (d={args.d}, n={args.n})",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    target = werner_state(args.d, args.n, float(args.s))
    tol = VerifyTolerances(
        weights_sum=args.weights_tol,
        local_norm=args.norm_tol,
        residual=args.residual_tol,
    )
    report = verify_certificate(cert, target, tol)
    if args.json:
        print(json.dumps(report.as_dict()))
    else:
        for key, value in report.as_dict().items():
            print(f"{key}: {value}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_criteria(args) -> int:
    rho = werner_state(args.d, args.n, float(args.s))
    margin, quad = worst_cs_margin(rho, args.d, args.n, full_scan=args.full_scan)
    ppt = {p: ppt_min_eig(rho, {p}, args.d, args.n) for p in range(args.n)}
    if args.json:
        print(json.dumps({
            "d": args.d,
            "n": args.n,
            "s": float(args.s),
            "worst_cauchy_schwarz_margin": margin,
            "witness": {"j": list(quad.j), "k": list(quad.k), "u": list(quad.u), "v": list(quad.v)},
            "ppt_min_eig": {str(p): v for p, v in ppt.items()},
        }))
    else:
        print(f"worst cauchy-schwarz margin: {margin:.17g}")
        print(f"  witness: j={quad.j} k={quad.k} u={quad.u} v={quad.v}")
        for p, v in ppt.items():
            print(f"ppt min eigenvalue, cut {{{p}}}: {v:.17g}")
    return EXIT_OK


def cmd_moments(args) -> int:
    ms = moment_sums(args.d)
    count = 4**args.d
    cross = {
        (r, s): cross_moment_sum(args.d, r, s)
        for r in range(args.d)
        for s in range(args.d)
        if r != s
    }
    cross_zero = all(v == (0, 0) for v in cross.values())
    if args.json:
        print(json.dumps({
            "d": args.d,
            "count": count,
            "first_moments": [list(g) for g in ms.first],
            "second_moments": [list(g) for g in ms.second],
            "abs_square_sums": list(ms.abs_square),
            "cross_moments_zero": cross_zero,
            "identities_hold": bool(ms.all_identities_hold and cross_zero),
        }))
    else:
        print(f"phase vectors: {count} = 4**{args.d}")
        print(f"per-slot sum z: {list(ms.first)} (all zero: {'yes' if all(g == (0, 0) for g in ms.first) else 'NO'})")
        print(f"per-slot sum z**2: {list(ms.second)} (all zero: {'yes' if all(g == (0, 0) for g in ms.second) else 'NO'})")
        print(f"per-slot sum |z|**2: {list(ms.abs_square)} (all equal 4**d: {'yes' if all(a == count for a in ms.abs_square) else 'NO'})")
        print(f"cross sums z_r* z_s (r != s) all zero: {'yes' if cross_zero else 'NO'}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not getattr(args, "func", None):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except ThresholdExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THRESHOLD
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InvalidParameterError, InvalidIndexError, ContractViolationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
