"""Command-line front end: ``enright-blattner <command> ...``.

Exit codes
    0  success
    1  selfcheck reported a failure
    2  usage error (unknown flag, missing argument)
    3  malformed or invalid input
    4  truncation: the requested data lies outside the computed window
    5  ordering hypothesis violated while assigning homological degrees
    6  compact Weyl group larger than the cap
    7  rank too small for the hollow-table formula

Errors print one JSON line ``{"error": kind, "exit": code, "message": ...}`` on stderr.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from typing import Sequence

from . import enright, genlr, lr, series
from .blattner import METHODS, BlattnerQuery, blattner, check_hs_hypothesis
from .exceptions import CapExceededError, OrderingHypothesisError, TruncationError, UnsupportedRankError
from .partitions import format_parts, parse_partition, parse_weight
from .rootsys import DEFAULT_WEYL_CAP, BlockStructure

EXIT_OK = 0
EXIT_SELFCHECK = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_TRUNCATION = 4
EXIT_ORDERING = 5
EXIT_CAP = 6
EXIT_RANK = 7

# most specific first: TruncationError and UnsupportedRankError are ValueErrors
_ERRORS = (
    (TruncationError, "truncation", EXIT_TRUNCATION),
    (UnsupportedRankError, "unsupported-rank", EXIT_RANK),
    (OrderingHypothesisError, "ordering-hypothesis", EXIT_ORDERING),
    (CapExceededError, "cap-exceeded", EXIT_CAP),
    (ValueError, "invalid-input", EXIT_INPUT),
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _fail("usage", EXIT_USAGE, message)


def _fail(kind: str, code: int, message: str):
    print(json.dumps({"error": kind, "exit": code, "message": message}), file=sys.stderr)
    raise SystemExit(code)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


# -- commands -------------------------------------------------------------------

def cmd_lr(args) -> int:
    alpha, beta = parse_partition(args.alpha), parse_partition(args.beta)
    if args.gamma is not None:
        print(lr.lr_coeff(alpha, beta, parse_partition(args.gamma)))
        return EXIT_OK
    k = args.k if args.k is not None else len(alpha) + len(beta)
    out = lr.tensor_decompose(alpha, beta, max(k, 1))
    print(_dump({format_parts(g): c for g, c in out.items()}))
    return EXIT_OK


def cmd_genlr(args) -> int:
    alpha, beta = parse_weight(args.alpha), parse_weight(args.beta)
    if args.gamma is not None:
        print(genlr.gen_lr_coeff(alpha, beta, parse_weight(args.gamma), args.n))
        return EXIT_OK
    out = genlr.gen_tensor_decompose(alpha, beta, args.n)
    print(_dump({format_parts(g): c for g, c in sorted(out.items(), reverse=True)}))
    return EXIT_OK


def cmd_blattner(args) -> int:
    bs = BlockStructure.parse(args.blocks)
    delta, eta = parse_weight(args.delta), parse_weight(args.eta)
    value = blattner(bs, delta, eta, args.method, args.weyl_cap)
    if args.check_hypothesis:
        hs = check_hs_hypothesis(bs, eta)
        if args.format == "json":
            print(_dump({"value": value, "hs_hypothesis": hs}))
        else:
            print(value)
            print(f"hs_hypothesis={'true' if hs else 'false'}")
    elif args.format == "json":
        print(_dump({"value": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_blattner_table(args) -> int:
    bs = BlockStructure.parse(args.blocks)
    delta = parse_weight(args.delta)
    if args.window < 0:
        raise ValueError("window must be nonnegative")
    query = BlattnerQuery(bs, delta, delta)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow([f"eta{i + 1}" for i in range(bs.N)] + ["B"])
    target = sum(query.delta)
    rng = range(-args.window, args.window + 1)
    for eta in itertools.product(rng, repeat=bs.N):
        # B vanishes unless eta and delta have the same coordinate sum
        if sum(eta) != target:
            continue
        try:
            value = blattner(bs, query.delta, eta, args.method, args.weyl_cap)
        except ValueError:
            if args.method == "direct":
                raise
            continue  # outside the domain of the sign-free formula
        if value or not args.nonzero:
            writer.writerow(list(eta) + [value])
    return EXIT_OK


def cmd_series(args) -> int:
    bs = BlockStructure.parse(args.blocks)
    if args.depth < 0:
        raise ValueError("depth must be nonnegative")
    if args.kind == "b0":
        s = series.b0_series(bs, args.depth)
    else:
        if args.delta is None:
            raise ValueError("series bdelta needs --delta")
        s = series.b_delta_series(bs, parse_weight(args.delta), args.depth)
    if args.dominant:
        s = series.dominant_filter(s, bs, {"m-prime": "m'", "k-prime": "k'"}[args.dominant])
    print(s.to_json() if args.format == "json" else s.to_text())
    return EXIT_OK


def cmd_resolution(args) -> int:
    bs = BlockStructure.parse(args.blocks)
    lam = parse_weight(args.lam)
    depth = args.depth
    if depth != "auto":
        try:
            depth = int(depth)
        except ValueError:
            raise ValueError(f"depth must be an integer or 'auto', got {depth!r}") from None
    res = enright.resolution_of(bs, lam, depth, args.depth_ceiling)
    if args.euler_check and not enright.euler_character_check(bs, lam, res):
        raise OrderingHypothesisError("resolution fails the Euler characteristic check")
    print(res.to_json() if args.format == "json" else res.to_text())
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    from .selfcheck import run_checks
    failures = 0
    for name, ok, seconds in run_checks(args.level):
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({seconds:.2f}s)")
        failures += not ok
    print(f"{failures} failure(s)")
    return EXIT_SELFCHECK if failures else EXIT_OK


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="enright-blattner", description="Blattner multiplicities and Enright resolutions in type A.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lr", help="classical Littlewood-Richardson coefficients")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma")
    p.add_argument("--k", type=int, help="rank for the full decomposition (default: l(alpha) + l(beta))")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("genlr", help="generalized LR coefficients for rational GL_n weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma")
    p.set_defaults(func=cmd_genlr)

    for name, func, helptext in (
        ("blattner", cmd_blattner, "evaluate B(delta, eta)"),
        ("blattner-table", cmd_blattner_table,
         "CSV sweep of B(delta, eta) over a box of eta; rows outside a method's domain are omitted"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--blocks", required=True)
        p.add_argument("--delta", required=True)
        p.add_argument("--method", choices=METHODS, default="direct")
        p.add_argument("--weyl-cap", type=int, default=DEFAULT_WEYL_CAP)
        p.set_defaults(func=func)
        if name == "blattner":
            p.add_argument("--eta", required=True)
            p.add_argument("--check-hypothesis", action="store_true")
            p.add_argument("--format", choices=("text", "json"), default="text")
        else:
            p.add_argument("--window", type=int, required=True, help="sweep max |eta_i| <= window")
            p.add_argument("--nonzero", action="store_true", help="only rows with B != 0")

    p = sub.add_parser("series", help="truncated expansion of b(0) or b(delta)")
    p.add_argument("kind", choices=("b0", "bdelta"))
    p.add_argument("--blocks", required=True)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--delta")
    p.add_argument("--dominant", choices=("m-prime", "k-prime"))
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("resolution", help="ordered Enright resolution read off from b(0)")
    p.add_argument("--blocks", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--depth", default="auto")
    p.add_argument("--depth-ceiling", type=int, default=None,
                   help=f"ceiling for --depth auto (default ${enright.DEPTH_CEILING_ENV} or {enright.DEFAULT_DEPTH_CEILING})")
    p.add_argument("--euler-check", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("selfcheck", help="run the built-in cross-checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:  # map library errors to exit codes
        for cls, kind, code in _ERRORS:
            if isinstance(exc, cls):
                _fail(kind, code, str(exc))
        raise


def run(argv: Sequence[str] | None = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
