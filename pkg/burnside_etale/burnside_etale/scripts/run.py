#!/usr/bin/env python
"""
===========================================================================
| Étale fundamental groupoid of the Burnside ring of a finite group: L(G) |
===========================================================================

Spec A(G) is a union of copies of Spec Z glued along closed points. Its étale fundamental groupoid is a
disjoint union of profinite completions of free groups, one per connected component; L lists their ranks.

Usage:

1. Compute L of a group:
    `python run.py compute --group A5`
    `python run.py compute --group SL2_5 --json`
    `python run.py compute --group C6 --trace`

    Groups: C<n>, S<n>, A<n>, D<n> (dihedral of order n), Q8, SL2_<p> (p = 2, 3, 5, 7),
    products like C2xS3, inline generators perms:(1,2);(1,2,3), or a generator file gens:<path>
    (one permutation per line, in cycle notation).

2. Compute L from a table of marks file (when the group is too large to enumerate):
    `python run.py compute --tom tables/a5.json`
    `python run.py compute --tom tables/c6.g --format gap`

3. Write the table of marks of a group:
    `python run.py tom --group S3 --format gap`
    `python run.py tom --group A5 --format json --out a5.json`

4. The cyclic-extensions partition of the subgroup classes for a prime:
    `python run.py cycext --group A5 --prime 3`

5. Check all invariants over the built-in groups:
    `python run.py check --max-order 60`

6. A table of L values:
    `python run.py table --group A5 --group S5 --group SL2_3`

Add `--verbose` to any command to see progress messages (on stderr).

Exit codes: 0 on success, 1 for invalid input or a violated invariant, 2 when a group exceeds the order cap.
The order cap (default 1000) can be changed with the environment variable BURNSIDE_ETALE_ORDER_CAP.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from burnside_etale.env import VERBOSE, STRUCTURAL_CHECK_MAX_ORDER, TEXT_WIDTH
from burnside_etale.exceptions import InputException, InvariantViolation, ResourceException
from burnside_etale.formats.emit import emit_result
from burnside_etale.formats.gap_tom import render_gap_tom
from burnside_etale.formats.group_spec import parse_group_spec
from burnside_etale.formats.json_tom import write_json_tom
from burnside_etale.formats.tom_document import TomDocument
from burnside_etale.lattice.enumeration import conjugacy_classes_of_subgroups
from burnside_etale.marks.cyclic_extensions import cyclic_extensions_marks, cyclic_extensions_structural
from burnside_etale.marks.exceptions import CyclicExtensionsMismatch
from burnside_etale.marks.table_of_marks import table_of_marks
from burnside_etale.perms.constructors import make_group
from burnside_etale.pipeline import TOM_FORMATS, Analysis, analyze_group, analyze_tom, read_tom_file
from burnside_etale.self_check import run_self_check
from burnside_etale.utils.nice_list import compact_repr
from burnside_etale.utils.print_to_file import print_and_log, print_and_log_red, print_and_log_green

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RESOURCE_ERROR = 2

DEFAULT_CHECK_MAX_ORDER = 60


class ArgumentParser(argparse.ArgumentParser):
    """
    Usage errors are input errors: exit code 1.
    """
    def error(self, message):
        self.print_usage(sys.stderr)
        print_and_log_red(f'{self.prog}: error: {message}')
        raise SystemExit(EXIT_INPUT_ERROR)


def _analyze(args) -> Analysis:
    if args.group is not None:
        return analyze_group(args.group)
    return analyze_tom(read_tom_file(args.tom, args.format))


def cmd_compute(args) -> int:
    analysis = _analyze(args)
    if args.json:
        print_and_log(emit_result(analysis.invariant, 'json', trace=args.trace), end='')
        return EXIT_OK
    print_and_log(analysis.header())
    print_and_log(f'cyclic extensions: {analysis.method}')
    print_and_log(emit_result(analysis.invariant, 'human', trace=args.trace), end='')
    return EXIT_OK


def cmd_tom(args) -> int:
    group = make_group(parse_group_spec(args.group))
    doc = TomDocument.from_table_of_marks(table_of_marks(group, conjugacy_classes_of_subgroups(group)))
    text = write_json_tom(doc) if args.format == 'json' else render_gap_tom(doc)
    if args.out is None:
        print_and_log(text, end='')
    else:
        Path(args.out).write_text(text, encoding='utf-8')
        print_and_log_green(f'Table of marks of {group.name} written to {args.out}', file=sys.stderr)
    return EXIT_OK


def cmd_cycext(args) -> int:
    if args.group is not None:
        group = make_group(parse_group_spec(args.group))
        class_table = conjugacy_classes_of_subgroups(group)
        tom = table_of_marks(group, class_table)
        partition = cyclic_extensions_marks(tom, args.prime)
        if group.order <= STRUCTURAL_CHECK_MAX_ORDER.val:
            structural = cyclic_extensions_structural(group, class_table, args.prime)
            if structural != partition:
                raise CyclicExtensionsMismatch(prime=args.prime, from_marks=partition.blocks,
                                               structural=structural.blocks, group=group.name)
    else:
        tom = read_tom_file(args.tom, args.format).to_table_of_marks()
        partition = cyclic_extensions_marks(tom, args.prime)
    print_and_log(str(partition))
    return EXIT_OK


def cmd_check(args) -> int:
    report = run_self_check(args.max_order)
    print_and_log(report.to_string())
    if not report.ok:
        for failure in report.failures:
            print_and_log_red(str(failure))
        return EXIT_INPUT_ERROR
    print_and_log_green(f'All invariants hold for the {len(report.rows)} groups of order up to {args.max_order}.')
    return EXIT_OK


def cmd_table(args) -> int:
    if not (args.group or args.tom):
        print_and_log_red('table needs at least one --group or --tom')
        return EXIT_INPUT_ERROR
    analyses = [analyze_group(spec) for spec in args.group or []] \
        + [analyze_tom(read_tom_file(path, args.format)) for path in args.tom or []]
    rows = [{'group': a.name, 'order': a.tom.group_order, 'L': compact_repr(a.invariant.L)} for a in analyses]
    print_and_log(pd.DataFrame(rows).to_string(index=False, line_width=TEXT_WIDTH))
    return EXIT_OK


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', help='print progress messages to stderr')

    parser = ArgumentParser(prog='run.py', description='Étale fundamental groupoid of the Burnside ring')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    compute = subparsers.add_parser('compute', parents=[common], help='compute L')
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument('--group', type=str, help='group specification, e.g. A5 or C2xS3')
    source.add_argument('--tom', type=str, help='table of marks file')
    compute.add_argument('--format', choices=TOM_FORMATS, default=None,
                         help='format of the --tom file (default: json for .json files, gap otherwise)')
    compute.add_argument('--json', action='store_true', help='print the result as json')
    compute.add_argument('--trace', action='store_true', help='also print every step of the algorithm')
    compute.set_defaults(func=cmd_compute)

    tom = subparsers.add_parser('tom', parents=[common], help='write the table of marks of a group')
    tom.add_argument('--group', type=str, required=True)
    tom.add_argument('--out', type=str, default=None, help='output file (default: stdout)')
    tom.add_argument('--format', choices=TOM_FORMATS, default='gap')
    tom.set_defaults(func=cmd_tom)

    cycext = subparsers.add_parser('cycext', parents=[common], help='cyclic-extensions partition for a prime')
    source = cycext.add_mutually_exclusive_group(required=True)
    source.add_argument('--group', type=str)
    source.add_argument('--tom', type=str)
    cycext.add_argument('--format', choices=TOM_FORMATS, default=None)
    cycext.add_argument('--prime', type=int, required=True)
    cycext.set_defaults(func=cmd_cycext)

    check = subparsers.add_parser('check', parents=[common], help='check all invariants on the built-in groups')
    check.add_argument('--max-order', type=int, default=DEFAULT_CHECK_MAX_ORDER)
    check.set_defaults(func=cmd_check)

    table = subparsers.add_parser('table', parents=[common], help='a table of L values')
    table.add_argument('--group', type=str, action='append', help='group specification (repeatable)')
    table.add_argument('--tom', type=str, action='append', help='table of marks file (repeatable)')
    table.add_argument('--format', choices=TOM_FORMATS, default=None)
    table.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    with VERBOSE.temporary_set(args.verbose):
        try:
            return args.func(args)
        except ResourceException as e:
            print_and_log_red(str(e))
            return EXIT_RESOURCE_ERROR
        except (InputException, InvariantViolation) as e:
            print_and_log_red(str(e))
            return EXIT_INPUT_ERROR
        except OSError as e:
            print_and_log_red(f'{e.filename}: {e.strerror}')
            return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
