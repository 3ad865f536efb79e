"""Utility functions for converting values between various formats.

These functions convert exact mstack values to their JSON encodings
(integers as decimal strings) and parse command line strings into
values.

"""
from __future__ import annotations
from typing import TYPE_CHECKING, Any
from fractions import Fraction
import re

from mstack import error

if TYPE_CHECKING:
    from mstack.objects.hnType import HNType
    from mstack.objects.polynomial import IntPolynomial, RationalFunction
    from mstack.objects.series import TruncatedSeries

# pylint: disable=C0103

# Type aliases
JsonDict = dict[str, Any]
JsonFraction = list[str]


def fractionToJson(value: Fraction | int | None) -> JsonFraction | None:
    """Convert an exact rational to ``["num", "den"]``.

    Example::

        >>> fractionToJson(Fraction(8, 3))
        ['8', '3']

    """
    if value is None:
        return None
    value = Fraction(value)
    return [str(value.numerator), str(value.denominator)]


def fractionToText(value: Fraction | int | None) -> str:
    """Render an exact rational as ``num/den`` or ``num``.

    Example::

        >>> fractionToText(Fraction(8, 3))
        '8/3'

    """
    if value is None:
        return 'null'
    return str(Fraction(value))


def polynomialToJson(value: IntPolynomial) -> list[str]:
    """Convert polynomial coefficients to decimal strings."""
    return [str(c) for c in value.coefficients]


def seriesToJson(value: TruncatedSeries) -> JsonDict:
    """Convert a series to ``{"order": K, "coeffs": [...]}``.

    Example::

        >>> seriesToJson(TruncatedSeries([1, 1], 1))
        {'order': 1, 'coeffs': [['1', '1'], ['1', '1']]}

    """
    return {
        'order': value.order,
        'coeffs': [fractionToJson(c) for c in value.coeffs]
    }


def seriesToText(value: TruncatedSeries) -> str:
    """Render series coefficients as a bracketed list."""
    return '[' + ', '.join(fractionToText(c) for c in value.coeffs) + ']'


def rationalToJson(value: RationalFunction) -> JsonDict:
    """Convert a rational function to ``{"num": [...], "den": [...]}``."""
    return {
        'num': polynomialToJson(value.numerator),
        'den': polynomialToJson(value.denominator)
    }


def hnTypeToJson(value: HNType, codim: int) -> JsonDict:
    """Convert a Harder-Narasimhan type to the strata report entry."""
    return {
        'blocks': [[n, d] for n, d in value.blocks],
        'codim': codim,
        'polygon': [[x, y] for x, y in value.polygon.vertices]
    }


def factorizationReportToJson(value: Any) -> JsonDict:
    """Convert a :class:`~mstack.rings.FactorizationReport` to JSON.

    Example::

        >>> from mstack.rings import grassmannFactorizationCheck
        >>> report = grassmannFactorizationCheck(0, 2, 'sign-fixed', 2)
        >>> factorizationReportToJson(report)['first_mismatch_degree']
        2

    """
    return {
        'holds': value.holds,
        'lhs': seriesToJson(value.lhs),
        'rhs': seriesToJson(value.rhs),
        'first_mismatch_degree': value.firstMismatchDegree,
        'ratio': rationalToJson(value.ratio)
    }


def toCoefficients(string: str) -> tuple[int, ...]:
    """Convert a comma-separated list of integers to a tuple.

    :param string: The value to convert.
    :raises TypeError: If `string` is not a :class:`str`.
    :raises ValueError: If any item is not an integer.

    Example::

        >>> toCoefficients('1,0,2')
        (1, 0, 2)

    """
    error.validateType(string, str, 'string')
    try:
        return tuple(int(item) for item in string.split(',') if item.strip())
    except ValueError as exc:
        raise ValueError(
            error.generateErrorMessage(
                'valueError', objectName='lPoly', value=string
            )
        ) from exc


def toKebab(camelCaseString: str) -> str:
    """Convert camelCase to kebab-case.

    :param camelCaseString: The string to convert.

    Example::

        >>> toKebab('maxCodim')
        'max-codim'

    """
    error.validateType(camelCaseString, str, 'camelCaseString')
    return re.sub(r'(?<!^)(?=[A-Z]{1})', '-', camelCaseString).lower()


def traceToJson(value: Any) -> JsonDict:
    """Convert a :class:`~mstack.frobenius.TraceResult` to JSON."""
    return {
        'convergent': value.convergent,
        'value': fractionToJson(value.value),
        'factors': [{'text': text, 'exp': exp} for text, exp in value.factors],
        'majorant': fractionToJson(value.majorant)
    }
