"""Error message generation, type validation and domain exceptions.

This module provides functions to generate and validate error messages,
check types, and suggest corrections for invalid values. It includes
a dictionary of error message templates to ensure streamlined and
consistent error reporting.

Mathematical failures (a pole at the origin, a divergent trace, a
non-coprime rank and degree, ...) are raised as subclasses
of :class:`DomainError`. Their messages always start with the class
name, so that command line diagnostics name the originating error.

"""
from __future__ import annotations
from types import UnionType
from typing import Any, get_args
import difflib

# pylint: disable=C0103

#: Dictionary of error message templates.
ERROR_TEMPLATES: dict[str, str] = {
    'argumentConflict': (
        "The option '{key}' is already added as positional argument or flag."
    ),
    'badFunctionalEquation': (
        "The L-polynomial coefficients violate a_(2g-i) = q^(g-i) a_i "
        "at i = {index}."
    ),
    'dependenTypeError': (
        "Expected '{objectName}' to be of type {validTypes} when "
        "{dependency}, but got {value}."
    ),
    'divergent': (
        "The trace of phi^{r} x psi^{s} does not converge (requires s > r "
        "and s >= 1)."
    ),
    'divergentGenerator': (
        "The trace of phi^{r} x psi^{s} does not converge: generator "
        "'{generator}' has an eigenvalue of modulus >= 1."
    ),
    'duplicateFlags': (
        "Arguments '{argument1}' and '{argument2}' have duplicate short flag: "
        "{flag}."
    ),
    'duplicateItems': (
        "Items in '{objectName}' cannot be duplicates."
    ),
    'emptyValue': (
        "The value for '{objectName}' cannot be empty."
    ),
    'incompleteExteriorBlock': (
        "Exterior generators with eigenvalue {eigenvalue} do not cover "
        "every Weil number."
    ),
    'itemsTypeError': (
        "Items in '{objectName}' must be {validTypes}, not {value}."
    ),
    'itemsValueError': (
        "Invalid value for item in '{objectName}': {value}."
    ),
    'incompatibleMonomials': (
        "Cannot multiply eigenvalue monomials {first} and {second}."
    ),
    'invalidRank': (
        "The rank of '{objectName}' must be {value} or higher."
    ),
    'missingCurveData': (
        "'{objectName}' requires curve data (genus, q and L-polynomial)."
    ),
    'missingOption': (
        "The option '{objectName}' is required by '{command}'."
    ),
    'negativeCodimension': (
        "Stratum {hnType} has codimension {codim} but a nonzero "
        "semistable product."
    ),
    'nonIncreasingRange': (
        "The values in '{objectName}' must form an increasing range."
    ),
    'nonPolynomialResult': (
        "The series for '{objectName}' has a nonzero coefficient in degree "
        "{degree}, above the expected degree {bound}."
    ),
    'notCoprime': (
        "Rank {rank} and degree {degree} must be coprime."
    ),
    'notPrimePower': (
        "The value for '{objectName}' must be a prime power, not {value}."
    ),
    'notWeil': (
        "The L-polynomial has a reciprocal root of squared modulus {modulus} "
        "instead of q = {q}."
    ),
    'poleAtZero': (
        "The denominator of '{objectName}' vanishes at t = 0."
    ),
    'rankDegreeMismatch': (
        "Polygons end at {first} and {second}; total rank and degree must "
        "agree."
    ),
    'suggestion': (
        " Did you mean '{suggestion}'?"
    ),
    'typeError': (
        "Expected '{objectName}' to be of type {validTypes}, but got {value}."
    ),
    'unknownGenerator': (
        "The ring has no generator named '{name}'."
    ),
    'valueError': (
        "Invalid value for '{objectName}': {value}."
    ),
    'valueTooHigh': (
        "The value for '{objectName}' must be {value} or lower."
    ),
    'valueTooLow': (
        "The value for '{objectName}' must be {value} or higher."
    ),
    'zeroDenominator': (
        "The denominator of '{objectName}' is the zero polynomial."
    )
}


class ConventionWarning(Warning):
    """Use of a convention known to contradict its generator list."""


class DomainError(ValueError):
    """Base class of mathematical failures.

    The message is prefixed with the name of the concrete class.

    """

    def __init__(self, message: str) -> None:
        super().__init__(f"{self.__class__.__name__}: {message}")


class PoleAtZero(DomainError):
    """Power series expansion of a function with a pole at the origin."""


class ZeroDenominator(DomainError):
    """Rational function with the zero polynomial as denominator."""


class InvalidRank(DomainError):
    """Rank below the minimum of a moduli preset."""


class MissingCurveData(DomainError):
    """Curve data needed for exterior generators or eigenvalues."""


class UnknownGenerator(DomainError):
    """Generator name not present in a ring."""


class BadFunctionalEquation(DomainError):
    """L-polynomial without the functional-equation symmetry."""


class NotWeil(DomainError):
    """L-polynomial with a reciprocal root off the circle |z|^2 = q."""


class Divergent(DomainError):
    """Formal trace outside its domain of absolute convergence."""


class NotCoprime(DomainError):
    """Rank and degree sharing a common factor."""


class NonPolynomialResult(DomainError):
    """Series expected to be a polynomial that is not one."""


class RankDegreeMismatch(DomainError):
    """Polygons with different endpoints."""


class StratificationError(DomainError):
    """Inconsistent stratum in the semistable recursion."""


class NotPrimePower(DomainError):
    """Field size that is not a prime power."""


def generateErrorMessage(*templateNames: str, **kwargs) -> str:
    """Generate an error message from a template and keyword arguments.

    :param templateNames: Keys of :obj:`ERROR_TEMPLATES` to join.
    :param kwargs: Arbitrary keyword arguments corresponding to the
        placeholders in the template string.
    :raises KeyError: If a placeholder in the template does not have a
        corresponding keyword argument.

    Example::

        >>> generateErrorMessage('notCoprime', rank=2, degree=0)
        'Rank 2 and degree 0 must be coprime.'

    """
    messages = [ERROR_TEMPLATES[n].format(**kwargs) for n in templateNames]
    return ''.join(messages)


def generateTypeError(value: Any,
                      validTypes: type | tuple[type, ...] | UnionType,
                      objectName: str,
                      dependency: str | None = None,
                      items: bool = False) -> str:
    """Generate a :class:`TypeError` message.

    :param value: The value to be validated.
    :param validTypes: A :class:`tuple` of valid types.
    :param objectName: The name of the object being validated.
    :param dependency: Additional substring for dependent type errors.
        Defaults to :obj:`None`
    :param items: Whether to use items-specific template. Defaults
        to :obj:`False`.

    Example::

        >>> generateTypeError('2', (int,), 'rank')
        "Expected 'rank' to be of type int, but got str."

    """
    typeNames = _listTypes(validTypes)
    valueType = type(value).__name__

    if items:
        template = 'itemsTypeError'
    elif dependency:
        template = 'dependenTypeError'
    else:
        template = 'typeError'

    return generateErrorMessage(
        template,
        validTypes=typeNames,
        objectName=objectName,
        dependency=dependency,
        value=valueType
    )


def validateType(value: Any,
                 validTypes: type | tuple[type, ...] | UnionType,
                 objectName: str,
                 items=False) -> None:
    """Validate if a value matches any of the valid types.

    :class:`bool` is never accepted where :class:`int` is expected.

    :param value: The value to be validated.
    :param validTypes: A single valid type or :class:`tuple` of valid
        types.
    :param objectName: The name of the object being validated.
    :param items: Whether to validate `value` items rather than `value`
        itself. Defaults to :obj:`False`.
    :raises TypeError: If `value` does not match any of the valid
        types.
    :raises ValueError: If  `items` is :obj:`True` and any `value` item
        does not match any of the valid types.

    Example::

        >>> validateType('2', int, 'rank')
        Traceback (most recent call last):
        ...
        TypeError: Expected 'rank' to be of type int, but got str.

    """
    if isinstance(validTypes, type):
        validTypes = (validTypes,)

    elif isinstance(validTypes, UnionType):
        validTypes = get_args(validTypes)

    matches = any(isinstance(value, t) for t in validTypes)
    if isinstance(value, bool) and bool not in validTypes:
        matches = False

    if not matches:
        if items:
            raise ValueError(
                generateTypeError(value, validTypes, objectName, items=items)
            )
        raise TypeError(generateTypeError(value, validTypes, objectName))


def suggestValue(value: str,
                 possibilities: list[str] | tuple[str, ...],
                 objectName: str,
                 cutoff: float = 0.6,
                 items=False) -> str:
    """Validate value and suggest a valid close match.

    :param value: The value to be validated.
    :param possibilities: A list of valid possibilities for the value.
    :param objectName: The name of the object being validated.
    :param cutoff: Similarity threshold for close matches. Defaults
        to ``0.6``.
    :param items: Whether to use items-specific template. Defaults
        to :obj:`False`.
    :raises ValueError: If the provided value is not found in
        `possibilities`.

    Example::

        >>> suggestValue('sign-fix', ('as-printed', 'sign-fixed'),
        ... 'convention')
        Traceback (most recent call last):
        ...
        ValueError: Invalid value for 'convention': sign-fix. Did you mean 'sign-fixed'?

    """
    if value in possibilities:
        return value
    closeMatches = difflib.get_close_matches(value, possibilities, 1, cutoff)
    if closeMatches:
        suggestion = closeMatches[0]
        template = 'itemsValueError' if items else 'valueError'
        raise ValueError(
            generateErrorMessage(
                template, 'suggestion',
                objectName=objectName,
                value=value,
                suggestion=suggestion
            )
        )

    raise ValueError(
        generateErrorMessage(
            'valueError', objectName=objectName, value=value
        )
    )


def _listTypes(types: type | tuple[type, ...] | UnionType) -> str:
    # Represent a series of object type names as a string.

    if isinstance(types, type):
        types = (types,)

    elif isinstance(types, UnionType):
        types = get_args(types)

    if len(types) > 1:
        typeNames = (
            ', '.join(t.__name__ for t in types[:-1])
            + f" or {types[-1].__name__}"
        )
    else:
        typeNames = types[0].__name__
    return typeNames
