"""Command-line surface.

Exit codes: 0 when every requested property holds (for ``compare``: when the
instance agrees with the comparison theorem), 1 when one fails, 2 on
malformed input.
"""

import argparse
import logging
import os
import sys
from collections.abc import Sequence

from . import __version__
from .crossed import (
    CrossedProduct,
    Variant,
    build_ag,
    build_bb,
    compare_constructions,
    induce,
)
from .errors import AxiomError, CrossedError, FixtureError, InstanceError, WeakCrossedError
from .fixtures import FIXTURES_BY_NAME, fixture_by_name
from .hopf import (
    ANTIPODE_IDS,
    OBSERVATIONAL_IDS,
    WeakHopfAlgebra,
    verify_antipode,
    verify_counital,
    verify_weak_bialgebra,
)
from .instance import InstanceFile
from .linalg import LinMap, field_from_name
from .report import ConditionReport, ReportDocument, Verdict
from .runner import CONDITION_SETS, RunConfig, check_conditions

logger = logging.getLogger(__name__)

LOG_LEVEL_ENV = "WEAK_CROSSED_LOG_LEVEL"
LOG_FILE_ENV = "WEAK_CROSSED_LOG_FILE"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED = 0, 1, 2


def configure_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else os.getenv(LOG_LEVEL_ENV, "WARNING").upper()
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file := os.getenv(LOG_FILE_ENV):
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def _write(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def _emit(instance: InstanceFile, report: ConditionReport, fmt: str, title: str, ignore=()) -> bool:
    document = ReportDocument(
        version=__version__,
        digest=instance.digest,
        report=report,
        title=title,
        ignore=tuple(ignore),
    )
    _write(document.render(fmt))
    return document.passed


def _hopf(instance: InstanceFile) -> WeakHopfAlgebra:
    data = instance.hopf_data()
    if data is None:
        raise AxiomError(
            "No antipode exists for these bialgebra tables",
            ConditionReport.error("antipode-left", "no antipode exists"),
        )
    return WeakHopfAlgebra.verified(data)


def cmd_validate(args: argparse.Namespace) -> int:
    instance = InstanceFile.load(args.file)
    b = instance.bialgebra
    report = verify_weak_bialgebra(b)
    data = instance.hopf_data()
    if data is None:
        report = report + ConditionReport(
            tuple(
                Verdict(condition=c_id, passed=False, note="no antipode exists")
                for c_id in ANTIPODE_IDS
            )
        )
    else:
        report = report + verify_antipode(data)
    report = report + verify_counital(b)
    passed = _emit(instance, report, args.format, "weak Hopf algebra axioms", OBSERVATIONAL_IDS)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_conditions(args: argparse.Namespace) -> int:
    instance = InstanceFile.load(args.file)
    hopf = _hopf(instance)
    m = instance.measuring(hopf)
    c = instance.cocycle_table(m)
    report = check_conditions(m, c, args.set, RunConfig.from_env())
    passed = _emit(instance, report, args.format, f"conditions: {args.set}")
    return EXIT_OK if passed else EXIT_FAILED


def _build(instance: InstanceFile, construction: Variant) -> CrossedProduct:
    hopf = _hopf(instance)
    m = instance.measuring(hopf)
    c = instance.cocycle_table(m)
    if c is None:
        raise InstanceError("Building a crossed product needs a cocycle block")
    if construction == Variant.BB:
        return build_bb(m, c.retag(Variant.BB))
    return build_ag(m, induce(c))


def cmd_build(args: argparse.Namespace) -> int:
    instance = InstanceFile.load(args.file)
    construction = Variant(args.construction)
    product = _build(instance, construction)
    instance.with_product(product).dump(args.out)
    title = f"{construction} crossed product of dim {product.dim} written to {args.out}"
    _emit(instance, product.report, args.format, title)
    return EXIT_OK if product.verified else EXIT_FAILED


def format_matrix(linmap: LinMap) -> str:
    field = linmap.field
    rows = [
        [field.format(linmap.matrix[i, j]) for j in range(linmap.domain.dim)]
        for i in range(linmap.codomain.dim)
    ]
    width = max((len(x) for row in rows for x in row), default=1)
    label_width = max((len(x) for x in linmap.codomain.labels), default=0)
    lines = [
        f"  {label:<{label_width}}  " + " ".join(x.rjust(width) for x in row)
        for label, row in zip(linmap.codomain.labels, rows, strict=True)
    ]
    return "\n".join(lines) + "\n"


def cmd_compare(args: argparse.Namespace) -> int:
    instance = InstanceFile.load(args.file)
    hopf = _hopf(instance)
    m = instance.measuring(hopf)
    c = instance.cocycle_table(m)
    if c is None:
        raise InstanceError("The comparison needs a cocycle block")
    outcome = compare_constructions(m, c.retag(Variant.BB))
    _emit(instance, outcome.report, args.format, "comparison of the two crossed products")
    _write(f"{'CONFIRMED' if outcome.confirmed else 'NOT CONFIRMED'}: {outcome.message}\n")
    if outcome.psi is not None:
        _write("psi:\n" + format_matrix(outcome.psi))
    return EXIT_OK if outcome.confirmed else EXIT_FAILED


def cmd_fixture(args: argparse.Namespace) -> int:
    bundle = fixture_by_name(args.name, field_from_name(args.field))
    InstanceFile.from_bundle(bundle).dump(args.out)
    _write(f"{bundle.name}: dim H = {bundle.hopf.dim}, dim A = {bundle.algebra.dim} -> {args.out}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weak-crossed",
        description="Verify weak Hopf algebra crossed products on structure constants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p: argparse.ArgumentParser):
        p.add_argument("--format", choices=("text", "machine"), default="text")

    validate = sub.add_parser("validate", help="check the weak Hopf algebra axioms")
    validate.add_argument("file")
    with_format(validate)
    validate.set_defaults(func=cmd_validate)

    conditions = sub.add_parser("conditions", help="check the crossed product conditions")
    conditions.add_argument("file")
    conditions.add_argument("--set", choices=CONDITION_SETS, default="all")
    with_format(conditions)
    conditions.set_defaults(func=cmd_conditions)

    build = sub.add_parser("build", help="build a crossed product and write its tables")
    build.add_argument("file")
    build.add_argument("--construction", choices=[v.value for v in Variant], required=True)
    build.add_argument("--out", required=True)
    with_format(build)
    build.set_defaults(func=cmd_build)

    compare = sub.add_parser("compare", help="compare the two constructions")
    compare.add_argument("file")
    with_format(compare)
    compare.set_defaults(func=cmd_compare)

    fixture = sub.add_parser("fixture", help="export a built-in instance")
    fixture.add_argument("name", help=", ".join(FIXTURES_BY_NAME))
    fixture.add_argument("--out", required=True)
    fixture.add_argument("--field", default="QQ", help="QQ or GF(p)")
    fixture.set_defaults(func=cmd_fixture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except (InstanceError, FixtureError) as e:
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_MALFORMED
    except AxiomError as e:
        failing = e.report.first_failure()
        if failing is not None and failing.witness is not None:
            sys.stderr.write(f"error: {e.message}\n  ({failing.condition}) {failing.witness.render()}\n")
        else:
            sys.stderr.write(f"error: {e.message}\n")
        return EXIT_FAILED
    except CrossedError as e:
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_FAILED
    except WeakCrossedError as e:
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_MALFORMED


def run():
    sys.exit(main())
