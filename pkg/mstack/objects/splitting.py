# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable
from itertools import groupby

from mstack import normalizers


class SplittingType:
    """A vector bundle ``O(a_1) + ... + O(a_n)`` on the projective line.

    :param exponents: The integers ``a_i``, sorted on construction into
        weakly decreasing order.

    Example::

        >>> split = SplittingType([-2, 1, 1])
        >>> split.exponents, split.height, split.multiplicities
        ((1, 1, -2), 3, ((1, 2), (-2, 1)))

    """

    def __init__(self, exponents: Iterable[int]) -> None:
        self._exponents = normalizers.normalizeExponents(exponents)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self._exponents}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SplittingType):
            return NotImplemented
        return self._exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self._exponents)

    def shifted(self, amount: int) -> SplittingType:
        """Twist by ``O(amount)``."""
        return SplittingType(a + amount for a in self._exponents)

    @property
    def exponents(self) -> tuple[int, ...]:
        """Weakly decreasing exponents."""
        return self._exponents

    @property
    def rank(self) -> int:
        """Number of summands."""
        return len(self._exponents)

    @property
    def degree(self) -> int:
        """Sum of the exponents."""
        return sum(self._exponents)

    @property
    def height(self) -> int:
        """Spread ``a_1 - a_n``."""
        return self._exponents[0] - self._exponents[-1]

    @property
    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, multiplicity)`` pairs of distinct exponents."""
        return tuple((a, len(list(group)))
                     for a, group in groupby(self._exponents))
