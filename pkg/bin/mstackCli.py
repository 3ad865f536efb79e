#!/usr/bin/env python3
# coding: utf-8
"""
Exact computations on moduli stacks of vector bundles on curves over
finite fields.

Every operation of the package is exposed as a subcommand:

    - ``poincare`` – Poincaré series of a graded ring preset.
    - ``trace`` – formal trace of ``phi^r x psi^s``.
    - ``ss`` – Poincaré series of the semistable locus.
    - ``coarse`` – Poincaré polynomial of the coarse moduli space.
    - ``strata`` – Harder-Narasimhan types up to a codimension.
    - ``mass`` – mass of trivial-determinant bundles on the projective
      line.
    - ``verify`` – verification suite and errata ledger.
    - ``demo`` – fixed-point mismatch on the projective line.

Results are printed to stdout as text or, with ``--format json``, as
JSON. Diagnostics go to stderr. The exit code is ``0`` on success,
``1`` on a usage error, ``2`` on a domain error and ``3`` when a
verification fails.

This script requires mstack to be installed within its executive
environment. It may also be imported as a module and contains the
following public functions:

    - :func:`run` - The scripts program function.
    - :func:`main` – Command line entry point.

"""
from __future__ import annotations
from collections.abc import Callable, Sequence
from typing import Any, NamedTuple, NoReturn
import argparse
import json
import sys

from mstack import (cli, config, converters, error, frobenius, pointcount,
                    rings, stdUtils, strata, verify)
from mstack.objects.curve import CurveData, GroundField

# Type aliases
JsonDict = dict[str, Any]

# Configuration
CONFIG = config.load()

# Parameter defaults
ORDER = CONFIG['series']['order']
CONVENTION = CONFIG['rings']['convention']
HEIGHT = CONFIG['pointcount']['height']
MAX_CODIM = CONFIG['strata']['maxCodim']
PRESET = 'moduli-fixed-det'
RANK = 2
DEGREE = 0
FORMAT = 'text'
VERBOSE = False

# Exit codes
SUCCESS = 0
USAGE_ERROR = 1
DOMAIN_ERROR = 2
VERIFICATION_FAILURE = 3

# pylint: disable=invalid-name


class Output(NamedTuple):
    """Rendered result of one subcommand."""
    payload: JsonDict
    lines: list[str]
    passed: bool = True


class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors exit with 1 rather than argparse's 2.

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f'{self.prog}: error: {message}\n')


def run(argv: Sequence[str] | None = None) -> int:
    """Parse `argv`, run the subcommand and print its result.

    :param argv: Command line arguments without the program name.
        Defaults to :data:`sys.argv`.
    :return: The exit code.

    """
    parser = _parseArgs()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.subcommand in {'trace', 'mass', 'demo'} and args.q is None:
        print(error.generateErrorMessage(
            'missingOption', objectName='q', command=args.subcommand
        ), file=sys.stderr)
        return USAGE_ERROR

    try:
        output = SUBCOMMANDS[args.subcommand](args)
    except error.DomainError as exc:
        print(exc, file=sys.stderr)
        return DOMAIN_ERROR
    except (TypeError, ValueError) as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR

    if args.format == 'json':
        print(json.dumps(output.payload, indent=4))
    else:
        print('\n'.join(output.lines))
    return SUCCESS if output.passed else VERIFICATION_FAILURE


def main() -> None:
    """Command line entry point."""
    sys.exit(run())


# -----------
# Subcommands
# -----------

def poincare(args: argparse.Namespace) -> Output:
    """Poincaré series of a graded ring preset."""
    genus = _genus(args)
    curve = _curve(args) if args.q is not None else None
    spec = rings.ringPreset(args.preset, args.rank, genus, args.convention,
                            curve)
    series = rings.poincareFromGenerators(spec, args.order)
    rational = rings.poincareRational(spec)
    payload = {
        'preset': spec.kind,
        'rank': args.rank,
        'genus': genus,
        'convention': spec.convention,
        'generators': list(spec.names),
        'series': converters.seriesToJson(series),
        'rational': converters.rationalToJson(rational)
    }
    lines = [
        f"generators: {' '.join(spec.names)}",
        f'series: {converters.seriesToText(series)}',
        f'rational: {rational}'
    ]
    if spec.kind == 'moduli-fixed-det':
        closedForm = rings.poincareClosedForm(genus, args.rank,
                                              args.convention)
        payload['closed_form'] = converters.rationalToJson(closedForm)
        lines.append(f'closed form: {closedForm}')
    if args.factorization:
        report = rings.grassmannFactorizationCheck(genus, args.rank,
                                                   args.convention,
                                                   args.order)
        payload['factorization'] = converters.factorizationReportToJson(
            report
        )
        lines += [
            f'factorization holds: {report.holds}',
            f'first mismatch degree: {report.firstMismatchDegree}',
            f'ratio: {report.ratio}'
        ]
    return Output(payload, lines)


def trace(args: argparse.Namespace) -> Output:
    """Formal trace of ``phi^r x psi^s``."""
    curve = _curve(args)
    spec = rings.ringPreset(args.preset, args.rank,
                            convention=args.convention, curve=curve)
    result = frobenius.formalTrace(spec, args.r, args.s)
    payload = {
        'preset': spec.kind,
        'rank': args.rank,
        'genus': curve.genus,
        'q': curve.q,
        'r': args.r,
        's': args.s,
        'trace': converters.traceToJson(result)
    }
    lines = [f'value: {converters.fractionToText(result.value)}',
             f'majorant: {converters.fractionToText(result.majorant)}']
    lines += [f'\t({text})^{exp}' for text, exp in result.factors]
    passed = True
    if args.degreeCutoff is not None:
        brute = frobenius.bruteTrace(spec, args.r, args.s, args.degreeCutoff)
        passed = abs(brute.partial - result.value) <= brute.tailBound
        payload['brute'] = {
            'degree_cutoff': args.degreeCutoff,
            'partial': converters.fractionToJson(brute.partial),
            'tail_bound': converters.fractionToJson(brute.tailBound),
            'pass': passed
        }
        lines += [
            f'partial: {converters.fractionToText(brute.partial)}',
            f'tail bound: {converters.fractionToText(brute.tailBound)}',
            f"oracle: {'pass' if passed else 'FAIL'}"
        ]
    return Output(payload, lines, passed)


def ss(args: argparse.Namespace) -> Output:
    """Poincaré series of the semistable locus."""
    genus = _genus(args)
    series = strata.ssSeries(args.rank, args.degree, genus, args.order)
    payload = {
        'rank': args.rank,
        'degree': args.degree,
        'genus': genus,
        'series': converters.seriesToJson(series)
    }
    return Output(payload, [f'series: {converters.seriesToText(series)}'])


def coarse(args: argparse.Namespace) -> Output:
    """Poincaré polynomial of the coarse moduli space."""
    genus = _genus(args)
    if args.fixedDet:
        series = strata.fixedDetCoarseSeries(args.rank, args.degree, genus,
                                             args.order)
    else:
        series = strata.coarseModuliSeries(args.rank, args.degree, genus,
                                           args.order)
    coefficients = series.coeffs[:series.lastNonzero() + 1]
    payload = {
        'rank': args.rank,
        'degree': args.degree,
        'genus': genus,
        'fixed_det': args.fixedDet,
        'series': converters.seriesToJson(series)
    }
    lines = [
        f"polynomial: [{', '.join(str(c) for c in coefficients)}]",
        f'palindromic: {strata.isPalindromic(series, len(coefficients) - 1)}'
    ]
    return Output(payload, lines)


def strataList(args: argparse.Namespace) -> Output:
    """Harder-Narasimhan types up to a codimension."""
    genus = _genus(args)
    types = strata.enumerateTypes(args.rank, args.degree, genus,
                                  args.maxCodim)
    entries = [(t, strata.codim(t, genus)) for t in types]
    payload = {
        'rank': args.rank,
        'degree': args.degree,
        'genus': genus,
        'types': [converters.hnTypeToJson(t, c) for t, c in entries]
    }
    lines = [f'{list(t.blocks)} codim {c}' for t, c in entries]
    return Output(payload, lines or ['none'])


def mass(args: argparse.Namespace) -> Output:
    """Mass of trivial-determinant bundles on the projective line."""
    result = pointcount.massSl(args.rank, GroundField(args.q), args.height)
    payload = {
        'rank': args.rank,
        'q': args.q,
        'height': args.height,
        'partial': converters.fractionToJson(result.partial),
        'tail_bound': converters.fractionToJson(result.tailBound),
        'closed_form': converters.fractionToJson(result.closedForm)
    }
    lines = [
        f'partial: {converters.fractionToText(result.partial)}',
        f'tail bound: {converters.fractionToText(result.tailBound)}',
        f'closed form: {converters.fractionToText(result.closedForm)}'
    ]
    return Output(payload, lines)


def verification(args: argparse.Namespace) -> Output:
    """Verification suite, single Lefschetz report or errata ledger."""
    if args.target == 'errata':
        return _errata(args)
    if args.target == 'lefschetz' and args.q is not None:
        return _lefschetz(args)
    names = None if args.target == 'all' else [args.target]
    results = verify.runAll(names, progress=True, verbose=args.verbose)
    passed = all(r.passed for r in results)
    payload = {
        'pass': passed,
        'checks': [{'name': r.name, 'pass': r.passed,
                    'details': list(r.details)} for r in results]
    }
    lines = []
    for result in results:
        lines.append(f"{result.name}: {'pass' if result.passed else 'FAIL'}")
        lines += [f'\t{line}' for line in result.details]
    return Output(payload, lines, passed)


def demo(args: argparse.Namespace) -> Output:
    """Fixed-point mismatch on the projective line."""
    report = pointcount.fixedPointDemo(GroundField(args.q), args.s,
                                       args.height)
    payload = {
        'q': args.q,
        's': args.s,
        'rows': [{'r': row.r,
                  'trace': converters.fractionToJson(row.trace),
                  'naive': converters.fractionToJson(row.naive),
                  'lefschetz': converters.fractionToJson(row.lefschetz)}
                 for row in report.rows],
        'varies': report.varies
    }
    lines = ['r\ttrace\tnaive\tlefschetz']
    lines += [
        '\t'.join([str(row.r)] + [converters.fractionToText(v) for v in
                                  (row.trace, row.naive, row.lefschetz)])
        for row in report.rows
    ]
    lines.append(f'trace varies with r: {report.varies}')
    return Output(payload, lines)


#: Subcommand handlers, by name.
SUBCOMMANDS: dict[str, Callable[[argparse.Namespace], Output]] = {
    'poincare': poincare,
    'trace': trace,
    'ss': ss,
    'coarse': coarse,
    'strata': strataList,
    'mass': mass,
    'verify': verification,
    'demo': demo
}


# -------
# Helpers
# -------

def _errata(args: argparse.Namespace) -> Output:
    # Print the ledger; pass only if one convention survives.
    entries, survivors = verify.errataLedger(args.order)
    passed = len(survivors) == 1 and all(e.confirmed for e in entries)
    payload = {
        'entries': [entry._asdict() for entry in entries],
        'survivors': list(survivors),
        'pass': passed
    }
    lines = []
    for entry in entries:
        lines += [
            f'{entry.topic}:',
            f'\tprinted: {entry.printed}',
            f'\tadopted: {entry.adopted}',
            f'\tevidence: {entry.evidence}',
            f'\tconfirmed: {entry.confirmed}'
        ]
    lines.append(f"surviving conventions: {', '.join(survivors) or 'none'}")
    return Output(payload, lines, passed)


def _lefschetz(args: argparse.Namespace) -> Output:
    # Single mass formula comparison.
    report = pointcount.verifyLefschetz(args.rank, GroundField(args.q),
                                        args.height, args.s)
    payload = {
        'rank': args.rank,
        'q': args.q,
        's': args.s,
        'lhs': converters.fractionToJson(report.lhs),
        'rhs_partial': converters.fractionToJson(report.rhsPartial),
        'tail_bound': converters.fractionToJson(report.tailBound),
        'exact': report.exact,
        'pass': report.passed
    }
    lines = [
        f'lhs: {converters.fractionToText(report.lhs)}',
        f'rhs partial: {converters.fractionToText(report.rhsPartial)}',
        f'tail bound: {converters.fractionToText(report.tailBound)}',
        f'exact: {report.exact}',
        f"lefschetz: {'pass' if report.passed else 'FAIL'}"
    ]
    return Output(payload, lines, report.passed)


def _genus(args: argparse.Namespace) -> int:
    # Genus from the flag, else from the L-polynomial degree.
    if args.genus is not None:
        return args.genus
    if getattr(args, 'lPoly', None) is not None:
        return (len(args.lPoly) - 1) // 2
    return 0


def _curve(args: argparse.Namespace) -> CurveData:
    # Curve from flags, defaulting to the L-polynomial (1 + q t^2)^g.
    genus = _genus(args)
    if args.lPoly is None:
        return CurveData.fromGenus(genus, args.q)
    return CurveData(genus, args.q, args.lPoly)


def _parseArgs() -> argparse.ArgumentParser:
    # Build the parser with one subparser per subcommand.
    formatter = cli.createHelpFormatter('RawDescriptionHelpFormatter')
    parser = _ArgumentParser(
        prog='mstack',
        description=stdUtils.getSummary(__doc__),
        formatter_class=formatter
    )
    subparsers = parser.add_subparsers(dest='subcommand', required=True,
                                       metavar='subcommand')
    common = {'format': FORMAT, 'verbose': VERBOSE}
    parents: dict[str, argparse.ArgumentParser] = {
        'poincare': cli.commonParser(
            addHelp=False, preset=PRESET, rank=RANK, genus=None,
            convention=CONVENTION, q=None, lPoly=None, order=ORDER,
            factorization=False, **common
        ),
        'trace': cli.commonParser(
            addHelp=False, preset=PRESET, rank=RANK, genus=None,
            convention=CONVENTION, q=None, lPoly=None, r=0, s=1,
            degreeCutoff=None, **common
        ),
        'ss': cli.commonParser(
            addHelp=False, rank=RANK, degree=DEGREE, genus=None, order=ORDER,
            **common
        ),
        'coarse': cli.commonParser(
            addHelp=False, rank=RANK, degree=1, genus=None, order=ORDER,
            fixedDet=False, **common
        ),
        'strata': cli.commonParser(
            addHelp=False, rank=RANK, degree=DEGREE, genus=None,
            maxCodim=MAX_CODIM, **common
        ),
        'mass': cli.commonParser(
            addHelp=False, rank=RANK, q=None, height=HEIGHT, **common
        ),
        'verify': cli.commonParser(
            'target', addHelp=False, rank=RANK, q=None, s=1, height=HEIGHT,
            order=ORDER, **common
        ),
        'demo': cli.commonParser(
            addHelp=False, q=None, s=2, height=HEIGHT, **common
        )
    }
    for name, parent in parents.items():
        summary = stdUtils.getSummary(SUBCOMMANDS[name].__doc__)
        subparsers.add_parser(name, parents=[parent], help=summary,
                              description=summary)
    return parser


if __name__ == '__main__':
    main()
