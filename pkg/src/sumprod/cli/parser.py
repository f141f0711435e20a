"""Argument parsing for the sumprod command line."""

import argparse
from fractions import Fraction

from sumprod.cli.commands import cmd_classify, cmd_oracle, cmd_param, cmd_solve, cmd_verify
from sumprod.core.modules.families.models import FamilyKind
from sumprod.core.modules.rational.parsing import RATIONAL_RE, rat_parse
from sumprod.errors import ValidationError


def rational(text: str) -> Fraction:
    try:
        return rat_parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Invalid integer value: {text.strip()!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Invalid integer value: {text.strip()!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"Expected a nonnegative integer, got {value}")
    return value


def protect_negative_rationals(argv: list[str]) -> list[str]:
    """Prefix negative rationals such as "-3/2" with a space so argparse keeps them positional."""
    return [f" {arg}" if arg.startswith("-") and RATIONAL_RE.fullmatch(arg) else arg for arg in argv]


def _add_triple(parser: argparse.ArgumentParser, names: tuple[str, str, str] = ("a", "b", "c")) -> None:
    for name in names:
        parser.add_argument(name, type=rational, help="rational number, n or n/d")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["human", "json"], default="human", help="output format (default: human)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumprod",
        description="Rational solutions of x+y+z=a+b+c with xyz=abc or with x^3+y^3+z^3=a^3+b^3+c^3.",
    )
    parser.add_argument("--debug", action="store_true", help="human-readable debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify = subparsers.add_parser("classify", help="classify a triple by the torsion of its curve")
    _add_triple(classify)
    _add_format(classify)
    classify.set_defaults(handler=cmd_classify)

    solve = subparsers.add_parser("solve", help="stream verified solutions as JSON lines")
    _add_triple(solve)
    solve.add_argument("--limit", type=nonnegative_int, default=None, help="number of records (default: unlimited)")
    solve.add_argument("--positive", action="store_true", help="only solutions with all entries positive")
    solve.add_argument("--cubes", action="store_true", help="solve the cube-sum system instead")
    solve.add_argument("--cap", type=positive_int, default=None, help="group elements examined by a positive search")
    solve.add_argument("--include-trivial", action="store_true", help="also emit permutations of the input")
    solve.set_defaults(handler=cmd_solve)

    param = subparsers.add_parser("param", help="evaluate or invert a parametric family")
    param.add_argument("family", choices=[kind.value for kind in FamilyKind])
    param.add_argument("values", type=rational, nargs="*", help="scale and t")
    param.add_argument("--invert", type=rational, nargs=3, metavar=("A", "B", "C"), help="recover the parameters of a triple")
    param.add_argument("--u", type=rational, default=None, help="genus0 only: the solution with parameter u")
    _add_format(param)
    param.set_defaults(handler=cmd_param)

    verify = subparsers.add_parser("verify", help="check that (x, y, z) solves the system of (a, b, c)")
    _add_triple(verify)
    _add_triple(verify, ("x", "y", "z"))
    verify.add_argument("--cubes", action="store_true", help="check the cube-sum system instead")
    _add_format(verify)
    verify.set_defaults(handler=cmd_verify)

    oracle = subparsers.add_parser("oracle", help="exhaustive bounded-height search")
    _add_triple(oracle)
    oracle.add_argument("--height", type=nonnegative_int, required=True, help="height bound for the search coordinate")
    oracle.add_argument("--cubes", action="store_true", help="search the cube-sum system instead")
    oracle.add_argument("--probe", action="store_true", help="map solutions to curve points and report their orders")
    oracle.set_defaults(handler=cmd_oracle)

    return parser
