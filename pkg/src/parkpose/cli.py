"""
Command-line front end.

Exit status: 0 for success or a true answer, 1 for a false answer or a failed
check, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys

from ._config import check_degree, closure_cap, max_degree
from .export import to_dot, to_edges, to_json
from .parking import (
    IntervalPair, count_ipfs, count_parking_functions, enumerate_ipfs,
    enumerate_parking_functions, run_algorithm_a, run_algorithm_b,
)
from .patterns import avoids_213, is_ar
from .permutation import (
    IntVector, Permutation, format_vector, is_compact_notation, symmetric_group,
)
from .posets import bruhat_relation, weak_relation
from .reachability import (
    bioutcome, fiber_profile, is_reachable, pseudoreachability_relation,
    reachability_relation,
)
from .sorting import LambdaVector, from_lambda, lambda_vector, sorting_relation
from .verify import TIER_LIMITS, mutated_reachability, run_verification

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None


def _vec(text: str) -> IntVector:
    try:
        return IntVector.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad vector {text!r}: {exc}") from None


def _same_n(*objs):
    if len({len(o) for o in objs}) != 1:
        raise UsageError("arguments have different lengths")


def _style(text: str) -> bool:
    return is_compact_notation(text)


def _bool(flag: bool) -> int:
    print("true" if flag else "false")
    return EXIT_TRUE if flag else EXIT_FALSE


def _print_trace(trace, compact: bool) -> int:
    if trace.success:
        print("true")
        print(f"outcome {format_vector(trace.outcome, compact)}")
        return EXIT_TRUE
    print("false")
    print(f"failed car {trace.failed_car}")
    return EXIT_FALSE


def cmd_check(args) -> int:
    kind, operands = args.kind, args.operands
    arity = {"pf": 1, "ipf": 2, "reachable": 2, "ar": 1, "avoid213": 1}[kind]
    if len(operands) != arity:
        raise UsageError(f"check {kind} takes {arity} argument(s)")
    compact = _style(operands[0])
    if kind == "pf":
        return _print_trace(run_algorithm_a(_vec(operands[0])), compact)
    if kind == "ipf":
        a, b = _vec(operands[0]), _vec(operands[1])
        _same_n(a, b)
        return _print_trace(run_algorithm_b(IntervalPair(a, b)), compact)
    if kind == "reachable":
        x, y = _perm(operands[0]), _perm(operands[1])
        _same_n(x, y)
        return _bool(is_reachable(x, y))
    if kind == "ar":
        return _bool(is_ar(_perm(operands[0])))
    return _bool(avoids_213(_perm(operands[0])))


def _checked_degree(n: int, cap: int | None = None) -> int:
    try:
        return check_degree(n, cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args) -> int:
    n = _checked_degree(args.n)
    if args.kind == "pf":
        closed = count_parking_functions(n)
        found = sum(1 for _ in enumerate_parking_functions(n))
    elif args.kind == "ipf":
        closed = count_ipfs(n)
        found = sum(1 for _ in enumerate_ipfs(n))
    else:
        closed = 2 ** (n - 1)
        found = sum(1 for x in symmetric_group(n) if is_ar(x))
    same = closed == found
    print(f"{closed} {'=' if same else '!='} {found}")
    return EXIT_TRUE if same else EXIT_FALSE


def cmd_outcome(args) -> int:
    compact = _style(args.a)
    a = _vec(args.a)
    if args.b is None:
        trace = run_algorithm_a(a)
    else:
        b = _vec(args.b)
        _same_n(a, b)
        trace = run_algorithm_b(IntervalPair(a, b))
    if trace.success:
        print(format_vector(trace.outcome, compact))
        return EXIT_TRUE
    print(f"fails at car {trace.failed_car}")
    return EXIT_FALSE


def cmd_bioutcome(args) -> int:
    compact = _style(args.a)
    a, b = _vec(args.a), _vec(args.b)
    _same_n(a, b)
    try:
        x, y = bioutcome(IntervalPair(a, b))
    except ValueError as exc:
        print(str(exc))
        return EXIT_FALSE
    print(f"{format_vector(x, compact)} {format_vector(y, compact)}")
    return EXIT_TRUE


def _paren(seq) -> str:
    return "(" + ",".join(str(v) for v in seq) + ")"


def cmd_fibers(args) -> int:
    x, y = _perm(args.x), _perm(args.y)
    _same_n(x, y)
    prof = fiber_profile(x, y)
    print(f"c={_paren(prof.c)} d={_paren(prof.d)} phi={prof.phi}")
    return EXIT_TRUE


def cmd_lambda(args) -> int:
    text = args.value.strip()
    if text.startswith("("):
        try:
            lv = LambdaVector.parse(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        x = from_lambda(lv)
        print(format_vector(x))
        return EXIT_TRUE
    print(lambda_vector(_perm(text)))
    return EXIT_TRUE


_ORDERS = {
    "bruhat": (bruhat_relation, True),
    "weak": (weak_relation, True),
    "reach": (reachability_relation, False),
    "pseudo": (pseudoreachability_relation, True),
    "sorting": (sorting_relation, True),
}
_FORMATS = {"dot": to_dot, "edges": to_edges, "json": to_json}


def cmd_poset(args) -> int:
    n = _checked_degree(args.n, min(closure_cap(), max_degree()))
    build, poset = _ORDERS[args.order]
    text = _FORMATS[args.format](build(n), poset)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_TRUE


def cmd_verify(args) -> int:
    limit = TIER_LIMITS[args.tier]
    if not 1 <= args.n <= limit:
        raise UsageError(f"{args.tier} tier supports 1 <= n <= {limit}")
    _checked_degree(args.n, closure_cap())
    rc = mutated_reachability if args.mutate_rc else None
    report = run_verification(args.n, args.tier, rc=rc)
    print("\n".join(report.lines()))
    return EXIT_TRUE if report.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="parkpose",
        description="Interval parking functions and orders on the symmetric group.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide a property of one or two vectors")
    c.add_argument("kind", choices=["pf", "ipf", "reachable", "ar", "avoid213"])
    c.add_argument("operands", nargs="+")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("count", help="closed-form count vs. enumeration")
    c.add_argument("kind", choices=["pf", "ipf", "ar"])
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("outcome", help="run Algorithm A (or B when b is given)")
    c.add_argument("a")
    c.add_argument("b", nargs="?")
    c.set_defaults(func=cmd_outcome)

    c = sub.add_parser("bioutcome", help="(outcome(a), outcome(b*)*) of an IPF")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_bioutcome)

    c = sub.add_parser("fibers", help="c, d and the fiber size of a permutation pair")
    c.add_argument("x")
    c.add_argument("y")
    c.set_defaults(func=cmd_fibers)

    c = sub.add_parser("lambda", help="lambda vector of a permutation, or the inverse map")
    c.add_argument("value", help='a permutation such as 2431, or a lambda vector such as "(3,1,0)"')
    c.set_defaults(func=cmd_lambda)

    c = sub.add_parser("poset", help="export a relation on S_n")
    c.add_argument("n", type=int)
    c.add_argument("order", choices=sorted(_ORDERS))
    c.add_argument("format", choices=sorted(_FORMATS))
    c.add_argument("-o", "--output", help="write to this file instead of stdout")
    c.set_defaults(func=cmd_poset)

    c = sub.add_parser("verify", help="run the exhaustive theorem checks")
    c.add_argument("n", type=int)
    c.add_argument("--tier", choices=sorted(TIER_LIMITS), default="fast")
    c.add_argument(
        "--mutate-rc", action="store_true",
        help="swap in a deliberately broken reachability test (negative control)",
    )
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"parkpose: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
