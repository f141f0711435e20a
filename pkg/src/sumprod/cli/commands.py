"""Command handlers; each returns the process exit code."""

import argparse

import structlog

from sumprod.app import App
from sumprod.cli.output import (
    ClassificationLine,
    PointOrderLine,
    SolutionLine,
    TripleLine,
    VerifyLine,
    render_classification,
    render_params,
    write_json,
    write_line,
)
from sumprod.core.modules.classify.models import Verdict
from sumprod.core.modules.families.models import FamilyKind
from sumprod.core.modules.rational.models import Triple
from sumprod.errors import ValidationError

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1


def _triple(args: argparse.Namespace, names: tuple[str, str, str] = ("a", "b", "c")) -> Triple:
    return Triple.of(*(getattr(args, name) for name in names))


def cmd_classify(app: App, args: argparse.Namespace) -> int:
    triple = _triple(args)
    classification = app.classify(triple)
    point_orders: list[PointOrderLine] = []
    if classification.verdict == Verdict.ELLIPTIC:
        family, orders = app.torsion(triple)
        point_orders = PointOrderLine.from_domain(family, orders)
    report = ClassificationLine(**dict(classification), point_orders=point_orders)
    if args.format == "json":
        write_json(report)
    else:
        for line in render_classification(report):
            write_line(line)
    return EXIT_OK


def cmd_solve(app: App, args: argparse.Namespace) -> int:
    records = app.solve(
        _triple(args),
        args.limit,
        positive=args.positive,
        cubes=args.cubes,
        cap=args.cap,
        include_trivial=args.include_trivial,
    )
    emitted = 0
    for record in records:
        write_json(SolutionLine.from_domain(record))
        emitted += 1
    logger.debug("solve_completed", emitted=emitted)
    return EXIT_OK


def cmd_param(app: App, args: argparse.Namespace) -> int:
    kind = FamilyKind(args.family)
    if args.invert is not None:
        if args.values or args.u is not None:
            raise ValidationError("--invert takes the triple only; drop the scale, t and --u values")
        a, b, c = args.invert
        params = app.family_invert(kind, Triple(x=a, y=b, z=c))
        if args.format == "json":
            write_json(params)
        else:
            write_line(render_params(params))
        return EXIT_OK

    if len(args.values) != 2:
        raise ValidationError(f"param {kind} expects exactly two values (scale and t), got {len(args.values)}")
    scale, t = args.values
    if args.u is not None:
        if kind != FamilyKind.GENUS_ZERO:
            raise ValidationError("--u applies to the genus0 family only")
        triple = app.genus_zero_solution(scale, t, args.u)
    else:
        triple = app.family_triple(kind, scale, t)
    if args.format == "json":
        write_json(TripleLine.from_domain(triple))
    else:
        write_line(str(triple))
    return EXIT_OK


def cmd_verify(app: App, args: argparse.Namespace) -> int:
    reference = _triple(args)
    candidate = _triple(args, ("x", "y", "z"))
    verified = app.verify(reference, candidate, cubes=args.cubes)
    if args.format == "json":
        write_json(VerifyLine(reference=reference, candidate=candidate, cubes=args.cubes, verified=verified))
    else:
        system = "sum and cube sum" if args.cubes else "sum and product"
        outcome = "verified" if verified else "not a solution"
        write_line(f"{candidate} for {reference} ({system}): {outcome}")
    return EXIT_OK if verified else EXIT_MISMATCH


def cmd_oracle(app: App, args: argparse.Namespace) -> int:
    triple = _triple(args)
    if args.probe:
        if args.cubes:
            raise ValidationError("--probe applies to the sum-product system only")
        write_json(app.probe(triple, args.height))
        return EXIT_OK
    report = app.oracle(triple, args.height, cubes=args.cubes)
    for solution in report.solutions:
        write_json(TripleLine.from_domain(solution))
    return EXIT_OK
