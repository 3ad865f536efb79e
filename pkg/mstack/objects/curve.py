# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable

from sympy import factorint

from mstack import error, normalizers
from mstack.objects.polynomial import IntPolynomial


class GroundField:
    """The finite field with `q` elements.

    :param q: Number of elements, a prime power.
    :raises NotPrimePower: If `q` is not a prime power.

    Example::

        >>> GroundField(9).characteristic
        3

    """

    def __init__(self, q: int) -> None:
        self._q = normalizers.normalizePrimePower(q)
        ((self._characteristic, self._degree),) = factorint(q).items()

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} F_{self._q} at {id(self)}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroundField):
            return NotImplemented
        return self._q == other.q

    def __hash__(self) -> int:
        return hash(self._q)

    def extension(self, degree: int) -> GroundField:
        """The extension field of the given `degree`."""
        normalizers.normalizeRank(degree, objectName='degree')
        return GroundField(self._q ** degree)

    def glOrder(self, n: int) -> int:
        """Order of :math:`GL_n` over this field.

        Example::

            >>> GroundField(3).glOrder(2)
            48

        """
        if n == 0:
            return 1
        normalizers.normalizeRank(n)
        order = 1
        for k in range(n):
            order *= self._q ** n - self._q ** k
        return order

    def slOrder(self, n: int) -> int:
        """Order of :math:`SL_n` over this field."""
        return self.glOrder(n) // (self._q - 1)

    @property
    def q(self) -> int:
        """Number of elements."""
        return self._q

    @property
    def characteristic(self) -> int:
        """Characteristic of the field."""
        return int(self._characteristic)

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        return int(self._degree)


class CurveData:
    """Smooth projective curve over a finite field, up to cohomology.

    The curve enters only through its genus, the field size and the
    numerator of its zeta function, the L-polynomial
    ``L(t) = prod_j (1 - lambda_j t)``, whose reciprocal roots are the
    Weil numbers acting on the first cohomology. The orientation class
    has Frobenius weight `q` and the unit class weight ``1``.

    :param genus: Genus `g` of the curve.
    :param q: Size of the ground field.
    :param lPoly: Coefficients of the L-polynomial, lowest degree first,
        of degree ``2g`` with constant term ``1``. May be omitted
        when ``genus=0``.
    :raises MissingCurveData: If `lPoly` is omitted for positive genus.
    :raises ValueError: If `lPoly` has the wrong degree or constant
        term.

    Functional-equation symmetry and the Riemann hypothesis are checked
    by :func:`mstack.frobenius.weilNumbers`.

    Example::

        >>> curve = CurveData(1, 2, [1, 0, 2])
        >>> curve.lPoly
        <IntPolynomial 1 + 2*t^2>

    """

    def __init__(self,
                 genus: int,
                 q: int,
                 lPoly: IntPolynomial | Iterable[int] | None = None) -> None:
        self._genus = normalizers.normalizeGenus(genus)
        self._field = GroundField(q)
        if lPoly is None:
            if self._genus:
                raise error.MissingCurveData(
                    error.generateErrorMessage(
                        'missingCurveData', objectName='CurveData.lPoly'
                    )
                )
            lPoly = IntPolynomial([1])
        if not isinstance(lPoly, IntPolynomial):
            lPoly = IntPolynomial(lPoly)
        if lPoly.degree != 2 * self._genus or lPoly(0) != 1:
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName='CurveData.lPoly', value=lPoly
                )
            )
        self._lPoly = lPoly

    def __repr__(self) -> str:
        return (f"<{self.__class__.__name__} g={self._genus} q={self.q} "
                f"L='{self._lPoly}' at {id(self)}>")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveData):
            return NotImplemented
        return ((self._genus, self.q, self._lPoly)
                == (other.genus, other.q, other.lPoly))

    def __hash__(self) -> int:
        return hash((self._genus, self.q, self._lPoly))

    @classmethod
    def fromGenus(cls, genus: int, q: int) -> CurveData:
        """Curve data with the L-polynomial ``(1 + q t^2)^g``.

        This is the default curve of the command line program when no
        L-polynomial is given; every reciprocal root has modulus
        ``sqrt(q)``.

        """
        genus = normalizers.normalizeGenus(genus)
        return cls(genus, q, IntPolynomial([1, 0, q]) ** genus)

    @property
    def genus(self) -> int:
        """Genus `g`."""
        return self._genus

    @property
    def q(self) -> int:
        """Size of the ground field."""
        return self._field.q

    @property
    def field(self) -> GroundField:
        """The ground field."""
        return self._field

    @property
    def lPoly(self) -> IntPolynomial:
        """The L-polynomial."""
        return self._lPoly
