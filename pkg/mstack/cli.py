# pylint: disable=C0114
from __future__ import annotations
from typing import Any
from argparse import (
    ArgumentParser,
    HelpFormatter,
    RawDescriptionHelpFormatter,
    RawTextHelpFormatter,
    ArgumentDefaultsHelpFormatter,
    MetavarTypeHelpFormatter
)
import copy

from mstack import config, converters, error, normalizers, rings, verify

CONFIG = config.load()

# pylint: disable=C0103

#: Available arguments and their settings.
CLI_ARGUMENTS: dict[str, dict[str, Any]] = {
    'convention': {
        'choices': normalizers.CONVENTIONS,
        'help': "closed-form convention for the moduli ring"
    },
    'degree': {
        'type': int,
        'help': "bundle degree"
    },
    'degreeCutoff': {
        'type': int,
        'help': "also enumerate monomials up to this degree"
    },
    'fixedDet': {
        'action': 'store_true',
        'help': "fix the determinant"
    },
    'factorization': {
        'action': 'store_true',
        'help': "compare with the local-global factorization"
    },
    'format': {
        'choices': ('text', 'json'),
        'help': "output format"
    },
    'genus': {
        'type': int,
        'help': "genus of the curve"
    },
    'height': {
        'type': int,
        'help': "largest splitting type height enumerated"
    },
    'lPoly': {
        'type': converters.toCoefficients,
        'help': "L-polynomial coefficients as comma-separated integers"
    },
    'maxCodim': {
        'type': int,
        'help': "largest stratum codimension listed"
    },
    'order': {
        'type': int,
        'help': "truncation order of series"
    },
    'preset': {
        'choices': rings.PRESETS,
        'help': "graded ring preset"
    },
    'q': {
        'type': int,
        'help': "order of the ground field"
    },
    'r': {
        'type': int,
        'help': "power of the curve Frobenius pullback"
    },
    'rank': {
        'type': int,
        'help': "bundle rank"
    },
    's': {
        'type': int,
        'help': "power of the arithmetic Frobenius"
    },
    'target': {
        'choices': ('all', 'errata') + tuple(verify.CHECKS),
        'help': "check to run"
    },
    'verbose': {
        'action': 'store_true',
        'help': "make output verbose"
    }
}


def commonParser(*args: str,
                 addHelp: bool = True,
                 description: str | None = None,
                 customHelpers: dict[str, str] | None = None,
                 **kwargs: Any
                 ) -> ArgumentParser:
    r"""Provide generic command-line arguments and options.

    Settings are copied from :data:`CLI_ARGUMENTS`, so several parsers
    built in one process do not share defaults.

    :param \*args: Required positional arguments to assign.
    :param addHelp: Add help message. Should be :obj:`False` when
        function is parent and otherwise :obj:`True`. Defaults
        to :obj:`True`.
    :param description: Program description when used directly. Defaults
        to :obj:`None`
    :param customHelpers: Arguments mapped to custom help strings to
        override the default. Defaults to :obj:`None`
    :param \**kwargs: Options and their default values to assign.
    :raises ValueError: Duplicate arguments in \*args and \**kwargs, or
        two options configured with the same short flag.

    Examples::

        >>> import argparse
        >>> from mstack import cli
        >>> args = cli.commonParser(rank=2, q=None, addHelp=False)
        >>> parser = argparse.ArgumentParser(parents=[args])
        >>> parser.parse_args("-q 3".split())
        Namespace(rank=2, q=3)

    """

    parser = ArgumentParser(add_help=addHelp, description=description)
    seen = set()

    def checkSeen(flag: str) -> None:
        # Check if a flag has been seen before to avoid duplicates.
        if flag in seen:
            duplicateFlags = [
                key for key, value in CONFIG['cli.shortFlags'].items()
                if value == flag
            ]

            if len(duplicateFlags) >= 2:
                raise ValueError(
                    error.generateErrorMessage(
                        'duplicateFlags',
                        argument1=duplicateFlags[0],
                        argument2=duplicateFlags[1],
                        flag=flag
                    )
                )

        if flag.startswith('-'):
            seen.add(flag)

    def addArgument(arg: str,
                    flags: tuple[str, ...],
                    settings: dict[str, Any]) -> None:
        # Add argument to parser.
        checkSeen(flags[0])
        if customHelpers and arg in customHelpers:
            settings['help'] = customHelpers[arg]
        parser.add_argument(*flags, **settings)

    def generateFlags(argument: str) -> tuple[str, ...]:
        # Generates tuple of option flags.
        shortFlag = CONFIG['cli.shortFlags'][argument]
        longFlag = f'--{converters.toKebab(argument)}'
        if shortFlag == longFlag[1:]:
            return (shortFlag,)
        return (shortFlag, longFlag)

    for arg in args:
        settings = copy.deepcopy(CLI_ARGUMENTS[arg])
        settings['metavar'] = converters.toKebab(arg)
        addArgument(arg, (arg,), settings)

    for key, value in kwargs.items():
        if key in args:
            raise ValueError(
                error.generateErrorMessage('argumentConflict', key=key)
            )

        settings = copy.deepcopy(CLI_ARGUMENTS[key])
        settings['dest'] = key
        if value is not None:
            settings['default'] = value
        addArgument(key, generateFlags(key), settings)

    return parser


def createHelpFormatter(formatters: str | tuple[str, ...]
                        ) -> type[HelpFormatter]:
    """Create child class of multiple help formatters.

    The returned :class:`HelpFormatter` class can be passed to the
    `formatter_class` parameter of :class:`argparse.ArgumentParser` to
    combine different formatters, despite the parameter only taking a
    single class as argument.

    :param formatters: Name of the formatter class or tuple of class
        names to be enabled as :class:`str` corresponding to
        either :class:`~argparse.RawDescriptionHelpFormatter`,
        :class:`~argparse.RawTextHelpFormatter`,
        :class:`~argparse.ArgumentDefaultsHelpFormatter`,
        :class:`~argparse.RawDescriptionHelpFormatter` or
        :class:`~argparse.MetavarTypeHelpFormatter`, or a :class:`tuple`
        of class names.
    :raises TypeError: If `formatters` is not an accepted type.
    :raises ValueError: If any `formatters` item is not recognised.

    """

    baseFormatters = {
        'HelpFormatter': HelpFormatter,
        'RawDescriptionHelpFormatter': RawDescriptionHelpFormatter,
        'RawTextHelpFormatter': RawTextHelpFormatter,
        'ArgumentDefaultsHelpFormatter': ArgumentDefaultsHelpFormatter,
        'MetavarTypeHelpFormatter': MetavarTypeHelpFormatter
    }

    error.validateType(formatters, (str, tuple), 'formatters')
    if isinstance(formatters, str):
        formatters = (formatters,)

    try:
        employed = tuple(baseFormatters[v] for v in formatters)
    except KeyError as exc:
        raise ValueError(
            error.suggestValue(
                str(exc).strip("'"), list(baseFormatters), 'formatters',
                items=True
            )
        ) from exc

    return type('HelpFormatter', employed, {})
