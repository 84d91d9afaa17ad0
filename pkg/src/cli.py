"""
burnside-beta command line.

Exit status: 0 success, 1 verification mismatch, 2 usage error,
3 computation error (the message names the failing stage).
"""

import argparse
import os
import sys
from typing import List, Optional

from src.components import catalog
from src.components.characters import COMPLEX, complex_irreducibles, lattices_for
from src.components.data_ingestion import load_group_spec
from src.components.group_core import conjugacy_classes
from src.components.subgroup_lattice import enumerate_subgroup_classes, linear_extension, table_of_marks
from src.exception import CustomException, UsageError
from src.logger import logging
from src.pipeline import report as emit
from src.pipeline.beta_pipeline import FIELD_TAGS, analyze, parse_fields, resolve_group, stage, summary_table
from src.pipeline.verify_pipeline import run_golden_suite, render_results
from src.utils import load_settings, save_text

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, sys)


def group_source(text: str):
    """A catalog name, or a path to a group-spec document."""
    if os.path.isfile(text):
        return load_group_spec(text)
    return catalog.parse_catalog_name(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="burnside-beta",
                     description="Linearization of the Burnside ring into representation rings")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, with_format=True):
        if with_format:
            p.add_argument("--format", choices=emit.FORMATS, default="text")
        p.add_argument("--out", help="write the document to this path instead of stdout")

    p = sub.add_parser("analyze", help="image, kernel rank and cokernels of beta")
    p.add_argument("group", help="catalog name (C4, 2D6, 2T, S4, GL2F3, ...) or group-spec file")
    p.add_argument("--fields", default=",".join(FIELD_TAGS), help="comma-separated subset of q,r,c,int,int-r")
    common(p)

    p = sub.add_parser("marks", help="table of marks")
    p.add_argument("group")
    common(p)

    p = sub.add_parser("chartab", help="irreducible character basis over a field")
    p.add_argument("group")
    p.add_argument("--field", choices=FIELD_TAGS, default=COMPLEX)
    common(p)

    p = sub.add_parser("list-groups", help="catalog families and worked examples")
    common(p)

    p = sub.add_parser("verify-paper", help="run the golden suite over the worked examples")
    p.add_argument("--quick", action="store_true", help="skip the order-120 cases")
    common(p, with_format=False)

    p = sub.add_parser("summary", help="cokernels of every worked example group")
    common(p)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        path = save_text(out, text)
        logger.info("wrote %s", path)
    else:
        sys.stdout.write(text)


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = load_settings()

    if args.command == "analyze":
        result = analyze(group_source(args.group), parse_fields(args.fields), settings)
        _emit(emit.render(result, args.format), args.out)
        return 0

    if args.command == "marks":
        source = group_source(args.group)
        with stage("build"):
            name, G = resolve_group(source, settings)
        with stage("subgroups"):
            lattice = enumerate_subgroup_classes(G, settings.subgroup_cap)
        with stage("marks"):
            marks = table_of_marks(G, linear_extension(lattice))
        _emit(emit.render_marks(name, marks, args.format), args.out)
        return 0

    if args.command == "chartab":
        source = group_source(args.group)
        with stage("build"):
            name, G = resolve_group(source, settings)
            classes = conjugacy_classes(G)
        cyclic = None
        if args.field == "q":
            with stage("subgroups"):
                cyclic = len(enumerate_subgroup_classes(G, settings.subgroup_cap).cyclic_indices())
        with stage("characters"):
            table = complex_irreducibles(G, classes)
            lattice = lattices_for(table, (args.field,), cyclic_classes=cyclic)[args.field]
        _emit(emit.render_lattice(name, lattice, classes.labels, args.format), args.out)
        return 0

    if args.command == "list-groups":
        _emit(emit.render_group_list(args.format), args.out)
        return 0

    if args.command == "verify-paper":
        results = run_golden_suite(args.quick, settings)
        _emit(render_results(results), args.out)
        return 0 if all(r.passed for r in results) else 1

    if args.command == "summary":
        rows = summary_table(catalog.paper_groups(), settings)
        _emit(emit.render_summary(rows, args.format), args.out)
        return 0

    raise UsageError(f"unknown command {args.command!r}", sys)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        return run(argv)
    except CustomException as e:
        logger.error("%s", e.detail)
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except KeyboardInterrupt:
        return 130
    except Exception as e:
        wrapped = CustomException(e, sys, stage="cli")
        logger.error("%s", wrapped.detail)
        sys.stderr.write(f"error: {wrapped}\n")
        return wrapped.exit_code


if __name__ == "__main__":
    sys.exit(main())
