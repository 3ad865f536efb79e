"""Exact series and rational function arithmetic.

The operations of this module are the substrate of every Poincaré
series and trace computation in mstack:

    - :func:`seriesMultiply` – truncated Cauchy product.
    - :func:`expandRational` – power series expansion of a rational
      function.
    - :func:`rationalNormalize` – canonical form of a polynomial ratio.

All values are exact; no operation introduces floating point numbers.

"""
from __future__ import annotations
from collections.abc import Iterable
from fractions import Fraction

from mstack import config, error, normalizers
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.series import TruncatedSeries

CONFIG = config.load()

# Parameter defaults
ORDER = CONFIG['series']['order']

# pylint: disable=C0103


def seriesMultiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Multiply two truncated series.

    The product is the Cauchy convolution truncated at the smaller of
    the two orders.

    :param a: First factor.
    :param b: Second factor.
    :raises TypeError: If either factor is not a :class:`.TruncatedSeries`.

    Example::

        >>> geometric = expandRational(RationalFunction([1], [1, -1]), 4)
        >>> seriesMultiply(geometric, geometric).coeffs
        (Fraction(1, 1), Fraction(2, 1), Fraction(3, 1), Fraction(4, 1), Fraction(5, 1))

    """
    error.validateType(a, TruncatedSeries, 'a')
    error.validateType(b, TruncatedSeries, 'b')
    order = min(a.order, b.order)
    first, second = a.coeffs, b.coeffs
    firstSupport = [i for i in range(order + 1) if first[i]]
    product = [Fraction(0)] * (order + 1)
    for i in firstSupport:
        x = first[i]
        for j in range(order + 1 - i):
            if second[j]:
                product[i + j] += x * second[j]
    return TruncatedSeries(product, order)


def expandRational(f: RationalFunction, order: int = ORDER) -> TruncatedSeries:
    """Expand a rational function as a power series in `t`.

    The expansion is unique when the denominator does not vanish at
    ``t = 0``; truncating an expansion of higher order gives the
    expansion of lower order.

    :param f: The rational function to expand.
    :param order: Truncation order. Defaults to :ref:`[series]` `order`
        configuration.
    :raises TypeError: If `f` is not a :class:`.RationalFunction`.
    :raises PoleAtZero: If the denominator vanishes at ``t = 0``.

    Example::

        >>> f = RationalFunction([1], IntPolynomial.oneMinus(2) * IntPolynomial.oneMinus(4))
        >>> [int(c) for c in expandRational(f, 8).coeffs]
        [1, 0, 1, 0, 2, 0, 2, 0, 3]

    """
    error.validateType(f, RationalFunction, 'f')
    order = normalizers.normalizeOrder(order)
    numerator = f.numerator.coefficients
    denominator = f.denominator.coefficients
    if denominator[0] == 0:
        raise error.PoleAtZero(
            error.generateErrorMessage('poleAtZero', objectName=str(f))
        )

    leading = denominator[0]
    result: list[Fraction] = []
    for k in range(order + 1):
        value = Fraction(numerator[k]) if k < len(numerator) else Fraction(0)
        for i in range(1, min(k, len(denominator) - 1) + 1):
            value -= denominator[i] * result[k - i]
        result.append(value / leading)
    return TruncatedSeries(result, order)


def rationalNormalize(num: IntPolynomial | Iterable[int],
                      den: IntPolynomial | Iterable[int]) -> RationalFunction:
    """Bring a ratio of integer polynomials into canonical form.

    :param num: Numerator polynomial or coefficient list.
    :param den: Denominator polynomial or coefficient list.
    :raises ZeroDenominator: If `den` is the zero polynomial.

    Example::

        >>> rationalNormalize([2, 0, -2], [2, -2]) == RationalFunction([1, 1])
        True

    """
    return RationalFunction(_asPolynomial(num), _asPolynomial(den))


def productOf(factors: Iterable[RationalFunction]) -> RationalFunction:
    """Multiply rational functions, starting from ``1``."""
    result = RationalFunction([1])
    for factor in factors:
        result = result * factor
    return result


def _asPolynomial(value: IntPolynomial | Iterable[int]) -> IntPolynomial:
    # Convert coefficient lists to polynomials.
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial(value)
