# pylint: disable=C0103, C0114
from __future__ import annotations
from fractions import Fraction

from mstack import error

#: Kinds of Weil-number part of an eigenvalue monomial.
LAMBDA_KINDS = ('none', 'single', 'all')


class EigenMonomial:
    r"""Eigenvalue of a Frobenius action on a ring generator.

    The eigenvalue is a monomial ``q^qExp`` times an optional
    Weil-number part, which is either absent, a single power
    ``lambda_j^e`` or a common power ``lambda^m`` standing for every
    Weil number at once. Monomials multiply by adding exponents.

    :param qExp: Exponent of `q`.
    :param lambdaIndex: Index `j` of a single Weil number, or :obj:`None`.
    :param lambdaExp: Exponent of the Weil-number part. Zero drops it.
    :param allLambdas: Whether the Weil-number part applies to every
        Weil number. Mutually exclusive with `lambdaIndex`.

    Example::

        >>> phi = EigenMonomial(0, lambdaIndex=1, lambdaExp=1)
        >>> psi = EigenMonomial(-2, lambdaIndex=1, lambdaExp=1)
        >>> phi * psi
        <EigenMonomial lambda_1^2*q^-2>

    """

    def __init__(self,
                 qExp: int = 0,
                 lambdaIndex: int | None = None,
                 lambdaExp: int = 0,
                 allLambdas: bool = False) -> None:
        error.validateType(qExp, int, 'qExp')
        error.validateType(lambdaExp, int, 'lambdaExp')
        if lambdaIndex is not None:
            error.validateType(lambdaIndex, int, 'lambdaIndex')
            if allLambdas:
                raise ValueError(
                    error.generateErrorMessage(
                        'argumentConflict', key='allLambdas'
                    )
                )
        self._qExp = qExp
        if lambdaExp == 0:
            self._kind = 'none'
            self._lambdaIndex = None
        elif allLambdas:
            self._kind = 'all'
            self._lambdaIndex = None
        elif lambdaIndex is not None:
            self._kind = 'single'
            self._lambdaIndex = lambdaIndex
        else:
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName='lambdaIndex', value=None
                )
            )
        self._lambdaExp = lambdaExp

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self}>"

    def __str__(self) -> str:
        parts = []
        if self._kind == 'single':
            parts.append(_power(f'lambda_{self._lambdaIndex}',
                                self._lambdaExp))
        elif self._kind == 'all':
            parts.append(_power('lambda', self._lambdaExp))
        if self._qExp:
            parts.append(_power('q', self._qExp))
        return '*'.join(parts) or '1'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EigenMonomial):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __mul__(self, other: EigenMonomial) -> EigenMonomial:
        error.validateType(other, EigenMonomial, 'other')
        if other.kind == 'none':
            lambdaIndex, lambdaExp, allLambdas = (
                self._lambdaIndex, self._lambdaExp, self._kind == 'all'
            )
        elif self._kind == 'none':
            lambdaIndex, lambdaExp, allLambdas = (
                other.lambdaIndex, other.lambdaExp, other.kind == 'all'
            )
        elif (self._kind, self._lambdaIndex) == (other.kind,
                                                 other.lambdaIndex):
            lambdaIndex = self._lambdaIndex
            lambdaExp = self._lambdaExp + other.lambdaExp
            allLambdas = self._kind == 'all'
        else:
            raise ValueError(
                error.generateErrorMessage(
                    'incompatibleMonomials', first=self, second=other
                )
            )
        return EigenMonomial(self._qExp + other.qExp, lambdaIndex,
                             lambdaExp, allLambdas)

    def __pow__(self, exponent: int) -> EigenMonomial:
        error.validateType(exponent, int, 'exponent')
        return EigenMonomial(self._qExp * exponent, self._lambdaIndex,
                             self._lambdaExp * exponent, self._kind == 'all')

    def inverse(self) -> EigenMonomial:
        """The reciprocal monomial."""
        return self ** -1

    def modulusSquared(self, q: int) -> Fraction:
        """Exact squared absolute value, using ``|lambda|^2 = q``.

        Example::

            >>> EigenMonomial(-2, lambdaIndex=1, lambdaExp=1).modulusSquared(2)
            Fraction(1, 8)

        """
        return Fraction(q) ** (2 * self._qExp + self._lambdaExp)

    def _key(self) -> tuple:
        return (self._qExp, self._kind, self._lambdaIndex, self._lambdaExp)

    @property
    def qExp(self) -> int:
        """Exponent of `q`."""
        return self._qExp

    @property
    def kind(self) -> str:
        """One of :data:`LAMBDA_KINDS`."""
        return self._kind

    @property
    def lambdaIndex(self) -> int | None:
        """Index of the single Weil number, if any."""
        return self._lambdaIndex

    @property
    def lambdaExp(self) -> int:
        """Exponent of the Weil-number part."""
        return self._lambdaExp

    @property
    def isIdentity(self) -> bool:
        """Whether the monomial is ``1``."""
        return self._qExp == 0 and self._kind == 'none'


def _power(base: str, exponent: int) -> str:
    return base if exponent == 1 else f'{base}^{exponent}'
