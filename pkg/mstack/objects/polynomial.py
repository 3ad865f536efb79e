# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable
from fractions import Fraction
from functools import reduce
import math

from sympy import Poly, Symbol, ZZ

from mstack import error, normalizers

#: Formal variable of every polynomial and series.
T = Symbol('t')


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are indexed by the exponent of `t`. Trailing zero
    coefficients are removed on construction, so the zero polynomial
    has an empty coefficient tuple.

    :param coefficients: Integer coefficients, lowest degree first.
    :raises TypeError: If any coefficient is not an :class:`int`.

    Example::

        >>> IntPolynomial([1, 0, -1, 0])
        <IntPolynomial 1 - t^2>

    """

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coefficients = list(
            normalizers.normalizeCoefficients(coefficients, 'coefficients')
        )
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self}>"

    def __str__(self) -> str:
        return _formatTerms(self._coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        length = max(len(self._coefficients), len(other.coefficients))
        first = self._padded(length)
        second = other._padded(length)
        return IntPolynomial(a + b for a, b in zip(first, second))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self._coefficients)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        if self.isZero or other.isZero:
            return IntPolynomial()
        product = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        error.validateType(exponent, int, 'exponent')
        if exponent < 0:
            raise ValueError(
                error.generateErrorMessage(
                    'valueTooLow', objectName='exponent', value=0
                )
            )
        result = IntPolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value: int | Fraction) -> int | Fraction:
        """Evaluate the polynomial by Horner's rule."""
        result: int | Fraction = 0
        for coefficient in reversed(self._coefficients):
            result = result * value + coefficient
        return result

    def _padded(self, length: int) -> tuple[int, ...]:
        # Coefficients extended with zeros to `length`.
        return self._coefficients + (0,) * (length - len(self._coefficients))

    @classmethod
    def onePlus(cls, exponent: int) -> IntPolynomial:
        """Return ``1 + t^exponent``."""
        return cls([1] + [0] * (exponent - 1) + [1]) if exponent else cls([2])

    @classmethod
    def oneMinus(cls, exponent: int) -> IntPolynomial:
        """Return ``1 - t^exponent``."""
        return cls([1] + [0] * (exponent - 1) + [-1]) if exponent else cls()

    @classmethod
    def fromPoly(cls, poly: Poly) -> IntPolynomial:
        """Convert a :class:`sympy.Poly` in `t` to an IntPolynomial."""
        return cls(int(c) for c in reversed(poly.all_coeffs()))

    def toPoly(self) -> Poly:
        """Convert to a :class:`sympy.Poly` over the integers."""
        coefficients = list(reversed(self._coefficients)) or [0]
        return Poly(coefficients, T, domain=ZZ)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficients, lowest degree first."""
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def isZero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._coefficients

    @property
    def content(self) -> int:
        """Greatest common divisor of the coefficients."""
        return reduce(math.gcd, self._coefficients, 0)

    @property
    def lowestCoefficient(self) -> int:
        """Lowest-degree nonzero coefficient, ``0`` if zero."""
        return next((c for c in self._coefficients if c), 0)


class RationalFunction:
    """Ratio of integer polynomials in canonical form.

    Construction reduces the pair: the polynomial gcd and the common
    integer content are cancelled and the lowest nonzero coefficient of
    the denominator is made positive. Equality of rational functions is
    equality of canonical forms.

    :param numerator: Numerator polynomial or coefficient list.
    :param denominator: Denominator polynomial or coefficient list.
        Defaults to ``1``.
    :raises ZeroDenominator: If `denominator` is the zero polynomial.

    Example::

        >>> RationalFunction([2, 0, -2], [2, -2])
        <RationalFunction (1 + t) / (1)>

    """

    def __init__(self,
                 numerator: IntPolynomial | Iterable[int] | int,
                 denominator: IntPolynomial | Iterable[int] | int = 1
                 ) -> None:
        self._numerator, self._denominator = _normalizePair(
            _coerce(numerator), _coerce(denominator)
        )

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self}>"

    def __str__(self) -> str:
        return f"({self._numerator}) / ({self._denominator})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, IntPolynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self._numerator == other.numerator
                and self._denominator == other.denominator)

    def __hash__(self) -> int:
        return hash((self._numerator, self._denominator))

    def __mul__(self, other: RationalFunction | IntPolynomial | int
                ) -> RationalFunction:
        other = _coerceRational(other)
        return RationalFunction(self._numerator * other.numerator,
                                self._denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | IntPolynomial | int
                    ) -> RationalFunction:
        other = _coerceRational(other)
        return RationalFunction(self._numerator * other.denominator,
                                self._denominator * other.numerator)

    def __add__(self, other: RationalFunction | IntPolynomial | int
                ) -> RationalFunction:
        other = _coerceRational(other)
        return RationalFunction(
            self._numerator * other.denominator
            + other.numerator * self._denominator,
            self._denominator * other.denominator
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self._numerator, self._denominator)

    def __sub__(self, other: RationalFunction | IntPolynomial | int
                ) -> RationalFunction:
        return self + (-_coerceRational(other))

    def __pow__(self, exponent: int) -> RationalFunction:
        error.validateType(exponent, int, 'exponent')
        if exponent < 0:
            return RationalFunction(self._denominator ** -exponent,
                                    self._numerator ** -exponent)
        return RationalFunction(self._numerator ** exponent,
                                self._denominator ** exponent)

    @property
    def numerator(self) -> IntPolynomial:
        """Canonical numerator."""
        return self._numerator

    @property
    def denominator(self) -> IntPolynomial:
        """Canonical denominator."""
        return self._denominator

    @property
    def isPolynomial(self) -> bool:
        """Whether the canonical denominator is the constant ``1``."""
        return self._denominator == IntPolynomial([1])


def _normalizePair(numerator: IntPolynomial,
                   denominator: IntPolynomial
                   ) -> tuple[IntPolynomial, IntPolynomial]:
    # Cancel polynomial gcd and integer content, then fix the sign.
    if denominator.isZero:
        raise error.ZeroDenominator(
            error.generateErrorMessage(
                'zeroDenominator', objectName='RationalFunction'
            )
        )
    if numerator.isZero:
        return IntPolynomial(), IntPolynomial([1])

    numeratorPoly = numerator.toPoly()
    denominatorPoly = denominator.toPoly()
    common = numeratorPoly.gcd(denominatorPoly)
    numerator = IntPolynomial.fromPoly(numeratorPoly.exquo(common))
    denominator = IntPolynomial.fromPoly(denominatorPoly.exquo(common))

    content = math.gcd(numerator.content, denominator.content)
    if denominator.lowestCoefficient < 0:
        content = -content
    if content != 1:
        numerator = IntPolynomial(c // content for c in numerator.coefficients)
        denominator = IntPolynomial(
            c // content for c in denominator.coefficients
        )
    return numerator, denominator


def _coerce(value: IntPolynomial | Iterable[int] | int) -> IntPolynomial:
    # Accept integers and coefficient lists where polynomials are expected.
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPolynomial([value])
    error.validateType(value, (IntPolynomial, int, list, tuple), 'polynomial')
    return IntPolynomial(value)  # type: ignore[arg-type]


def _coerceRational(value: RationalFunction | IntPolynomial | int
                    ) -> RationalFunction:
    # Accept polynomials and integers where rational functions are expected.
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


def _formatTerms(coefficients: Iterable[int | Fraction]) -> str:
    # Render coefficients as a sum of signed powers of t.
    terms: list[str] = []
    for exponent, coefficient in enumerate(coefficients):
        if coefficient == 0:
            continue
        sign = '-' if coefficient < 0 else '+'
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = 't' if exponent == 1 else f't^{exponent}'
            body = power if magnitude == 1 else f'{magnitude}*{power}'
        terms.append(f'{sign} {body}')
    if not terms:
        return '0'
    rendered = ' '.join(terms)
    return rendered[2:] if rendered.startswith('+') else '-' + rendered[2:]
