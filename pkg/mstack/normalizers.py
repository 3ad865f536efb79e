"""Utilities for normalizing arguments of mstack operations.

These functions ensure that user supplied values (ranks, genera,
truncation orders, conventions, coefficient lists, field sizes, ...)
adhere to expected types and ranges. They return the normalized value
or raise :class:`TypeError` / :class:`ValueError` with messages built
from :data:`mstack.error.ERROR_TEMPLATES`.

"""
from __future__ import annotations
from collections.abc import Iterable
from fractions import Fraction

from sympy import factorint

from mstack import error

# pylint: disable=C0103

#: Readings of the fixed-determinant Poincaré series and generator ranges.
CONVENTIONS: tuple[str, ...] = ('as-printed', 'sign-fixed', 'sl-strict')


# ------
# Series
# ------

def normalizeOrder(value: int, objectName: str = 'order') -> int:
    """Normalize a truncation order.

    :param value: The value to normalize.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not an :class:`int`.
    :raises ValueError: If `value` is negative.

    """
    return _normalizeBoundedInt(value, objectName, 0)


def normalizeCoefficients(value: Iterable[int],
                          objectName: str) -> tuple[int, ...]:
    """Normalize integer polynomial coefficients.

    :param value: The value to normalize.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not iterable.
    :raises ValueError: If any item is not an :class:`int`.

    """
    error.validateType(value, Iterable, objectName)
    coefficients = tuple(value)
    for coefficient in coefficients:
        error.validateType(coefficient, int, objectName, items=True)
    return coefficients


def normalizeRationals(value: Iterable[int | Fraction],
                       objectName: str) -> tuple[int | Fraction, ...]:
    """Normalize exact rational coefficients.

    Floating point values are rejected.

    :param value: The value to normalize.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not iterable.
    :raises ValueError: If any item is not an :class:`int`
        or :class:`~fractions.Fraction`.

    """
    error.validateType(value, Iterable, objectName)
    coefficients = tuple(value)
    for coefficient in coefficients:
        error.validateType(coefficient, (int, Fraction), objectName,
                           items=True)
    return coefficients


# -----
# Rings
# -----

def normalizeRank(value: int, minimum: int = 1,
                  objectName: str = 'rank') -> int:
    """Normalize a bundle rank.

    :param value: The value to normalize.
    :param minimum: Smallest accepted rank. Defaults to ``1``.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not an :class:`int`.
    :raises InvalidRank: If `value` is below `minimum`.

    """
    error.validateType(value, int, objectName)
    if value < minimum:
        raise error.InvalidRank(
            error.generateErrorMessage(
                'invalidRank', objectName=objectName, value=minimum
            )
        )
    return value


def normalizeGenus(value: int) -> int:
    """Normalize a curve genus.

    :param value: The value to normalize.
    :raises TypeError: If `value` is not an :class:`int`.
    :raises ValueError: If `value` is negative.

    """
    return _normalizeBoundedInt(value, 'genus', 0)


def normalizeConvention(value: str) -> str:
    """Normalize a Poincaré series convention name.

    :param value: The value to normalize.
    :raises TypeError: If `value` is not a :class:`str`.
    :raises ValueError: If `value` is not one of :data:`CONVENTIONS`,
        with a suggestion for close matches.

    """
    error.validateType(value, str, 'convention')
    return error.suggestValue(value, CONVENTIONS, 'convention')


def normalizeChoice(value: str, choices: Iterable[str],
                    objectName: str) -> str:
    """Normalize a value restricted to named choices.

    :param value: The value to normalize.
    :param choices: The accepted names.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not a :class:`str`.
    :raises ValueError: If `value` is not among `choices`.

    """
    error.validateType(value, str, objectName)
    return error.suggestValue(value, tuple(choices), objectName)


# -----------------
# Fields and traces
# -----------------

def normalizePrimePower(value: int, objectName: str = 'q') -> int:
    """Normalize the size of a finite field.

    :param value: The value to normalize.
    :param objectName: Name used in error messages.
    :raises TypeError: If `value` is not an :class:`int`.
    :raises NotPrimePower: If `value` is not a prime power.

    """
    error.validateType(value, int, objectName)
    if value < 2 or len(factorint(value)) != 1:
        raise error.NotPrimePower(
            error.generateErrorMessage(
                'notPrimePower', objectName=objectName, value=value
            )
        )
    return value


def normalizeTraceExponents(r: int, s: int) -> tuple[int, int]:
    """Normalize the exponents of ``phi^r x psi^s``.

    :param r: Power of the pullback along the curve Frobenius.
    :param s: Power of the arithmetic Frobenius.
    :raises TypeError: If either value is not an :class:`int`.
    :raises ValueError: If either value is negative.

    """
    return (_normalizeBoundedInt(r, 'r', 0), _normalizeBoundedInt(s, 's', 0))


# --------------
# Bundles/strata
# --------------

def normalizeBlocks(value: Iterable[tuple[int, int]]
                    ) -> tuple[tuple[int, int], ...]:
    """Normalize the (rank, degree) blocks of a Harder-Narasimhan type.

    Slopes must decrease strictly; they are compared by
    cross-multiplication.

    :param value: The value to normalize.
    :raises TypeError: If `value` is not iterable.
    :raises ValueError: If `value` is empty, a block is malformed, a
        rank is not positive, or slopes do not strictly decrease.

    """
    objectName = 'HNType.blocks'
    error.validateType(value, Iterable, objectName)
    blocks = tuple(tuple(b) for b in value)
    if not blocks:
        raise ValueError(
            error.generateErrorMessage('emptyValue', objectName=objectName)
        )
    for block in blocks:
        if len(block) != 2:
            raise ValueError(
                error.generateErrorMessage(
                    'itemsValueError', objectName=objectName, value=block
                )
            )
        for item in block:
            error.validateType(item, int, objectName, items=True)
        if block[0] < 1:
            raise ValueError(
                error.generateErrorMessage(
                    'itemsValueError', objectName=objectName, value=block
                )
            )
    for (n1, d1), (n2, d2) in zip(blocks, blocks[1:]):
        if d1 * n2 <= d2 * n1:
            raise ValueError(
                error.generateErrorMessage(
                    'nonIncreasingRange', objectName='HNType slopes'
                )
            )
    return blocks  # type: ignore[return-value]


def normalizeExponents(value: Iterable[int]) -> tuple[int, ...]:
    """Normalize a splitting type to a weakly decreasing tuple.

    :param value: The value to normalize.
    :raises TypeError: If `value` is not iterable.
    :raises ValueError: If `value` is empty or contains non-integers.

    """
    objectName = 'SplittingType.exponents'
    exponents = normalizeCoefficients(value, objectName)
    if not exponents:
        raise ValueError(
            error.generateErrorMessage('emptyValue', objectName=objectName)
        )
    return tuple(sorted(exponents, reverse=True))


def _normalizeBoundedInt(value: int, objectName: str, minimum: int) -> int:
    # Integer no smaller than `minimum`.
    error.validateType(value, int, objectName)
    if value < minimum:
        raise ValueError(
            error.generateErrorMessage(
                'valueTooLow', objectName=objectName, value=minimum
            )
        )
    return value
