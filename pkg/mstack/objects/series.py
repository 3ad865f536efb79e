# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable
from fractions import Fraction

from mstack import error, normalizers
from mstack.objects.polynomial import _formatTerms

#: Exact rational numbers throughout the package.
BigRational = Fraction


class TruncatedSeries:
    """Formal power series in `t` known up to a fixed order.

    A series of order ``K`` stores exactly ``K + 1`` exact rational
    coefficients, ``coeffs[k]`` being the coefficient of ``t^k``. Binary
    operations return a series of the smaller order of their operands.

    :param coeffs: Coefficients, lowest degree first. Missing
        coefficients up to `order` are filled with zeros and coefficients
        above `order` are dropped.
    :param order: Truncation order. Defaults to ``len(coeffs) - 1``.
    :raises TypeError: If a coefficient is not an :class:`int`
        or :class:`~fractions.Fraction`.
    :raises ValueError: If `order` is negative.

    Example::

        >>> TruncatedSeries([1, 1], order=4) * TruncatedSeries([1, -1], order=4)
        <TruncatedSeries 1 - t^2 + O(t^5)>

    """

    def __init__(self,
                 coeffs: Iterable[int | Fraction],
                 order: int | None = None) -> None:
        values = [
            Fraction(c) for c in normalizers.normalizeRationals(
                coeffs, 'TruncatedSeries.coeffs'
            )
        ]
        if order is None:
            order = max(len(values) - 1, 0)
        order = normalizers.normalizeOrder(order)
        values = values[:order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        self._order = order
        self._coeffs = tuple(values)

    def __repr__(self) -> str:
        return (f"<{self.__class__.__name__} {_formatTerms(self._coeffs)} "
                f"+ O(t^{self._order + 1})>")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other.order and self._coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, index: int) -> Fraction:
        return self._coeffs[index]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        error.validateType(other, TruncatedSeries, 'other')
        order = min(self._order, other.order)
        return TruncatedSeries(
            (a + b for a, b in zip(self._coeffs, other.coeffs)), order
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-a for a in self._coeffs), self._order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | int | Fraction
                ) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        from mstack.arith import seriesMultiply  # pylint: disable=C0415
        return seriesMultiply(self, other)

    __rmul__ = __mul__

    def scale(self, factor: int | Fraction) -> TruncatedSeries:
        """Multiply every coefficient by `factor`."""
        return TruncatedSeries((a * factor for a in self._coeffs), self._order)

    def truncate(self, order: int) -> TruncatedSeries:
        """Return the series truncated to a lower `order`.

        :raises ValueError: If `order` exceeds the current order.

        """
        order = normalizers.normalizeOrder(order)
        if order > self._order:
            raise ValueError(
                error.generateErrorMessage(
                    'valueTooHigh', objectName='order', value=self._order
                )
            )
        return TruncatedSeries(self._coeffs[:order + 1], order)

    def shift(self, exponent: int) -> TruncatedSeries:
        """Multiply by ``t^exponent``, keeping the order.

        A negative `exponent` divides by a power of `t`; the dropped
        leading coefficients must then be zero and the order decreases
        accordingly.

        :raises ValueError: If a dropped coefficient is nonzero.

        """
        if exponent >= 0:
            return TruncatedSeries(
                [Fraction(0)] * exponent + list(self._coeffs), self._order
            )
        if any(self._coeffs[:-exponent]):
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName='exponent', value=exponent
                )
            )
        return TruncatedSeries(self._coeffs[-exponent:],
                               self._order + exponent)

    def firstMismatch(self, other: TruncatedSeries) -> int | None:
        """Lowest degree at which two series differ, if any."""
        for degree, (a, b) in enumerate(zip(self._coeffs, other.coeffs)):
            if a != b:
                return degree
        return None

    def lastNonzero(self) -> int:
        """Highest degree with a nonzero coefficient, ``-1`` if none."""
        for degree in range(self._order, -1, -1):
            if self._coeffs[degree]:
                return degree
        return -1

    @property
    def order(self) -> int:
        """Truncation order ``K``."""
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """The ``K + 1`` exact coefficients."""
        return self._coeffs

    @property
    def isZero(self) -> bool:
        """Whether every known coefficient vanishes."""
        return not any(self._coeffs)

    @property
    def isIntegral(self) -> bool:
        """Whether every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        """The constant series ``1`` of the given order."""
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        """The zero series of the given order."""
        return cls([], order)
