# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable, Iterator

from mstack import error, normalizers
from mstack.objects.curve import CurveData
from mstack.objects.eigen import EigenMonomial

#: Generator families by name prefix.
GENERATOR_KINDS = ('c', 'b', 'a')


class GeneratorDescriptor:
    r"""A generator of a free graded-commutative ring.

    Even-degree generators are polynomial, odd-degree generators
    exterior. Besides its degree a generator carries the eigenvalues of
    `phi` (pullback along the curve Frobenius) and `psi` (arithmetic
    Frobenius).

    :param kind: Generator family, one of :data:`GENERATOR_KINDS`.
    :param index: Index `i` of the generator.
    :param degree: Cohomological degree.
    :param phiEigen: Eigenvalue of `phi`.
    :param psiEigen: Eigenvalue of `psi`.
    :param lambdaIndex: Weil-number index `j` of an `a` generator.

    Example::

        >>> c3 = GeneratorDescriptor('c', 3, 6, EigenMonomial(), EigenMonomial(-3))
        >>> c3.name, c3.parity
        ('c_3', 'even')

    """

    def __init__(self,
                 kind: str,
                 index: int,
                 degree: int,
                 phiEigen: EigenMonomial,
                 psiEigen: EigenMonomial,
                 lambdaIndex: int | None = None) -> None:
        self._kind = normalizers.normalizeChoice(kind, GENERATOR_KINDS,
                                                 'kind')
        self._index = normalizers.normalizeRank(index, objectName='index')
        self._degree = normalizers.normalizeRank(degree, objectName='degree')
        error.validateType(phiEigen, EigenMonomial, 'phiEigen')
        error.validateType(psiEigen, EigenMonomial, 'psiEigen')
        if (kind == 'a') != (lambdaIndex is not None):
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName='lambdaIndex', value=lambdaIndex
                )
            )
        self._phiEigen = phiEigen
        self._psiEigen = psiEigen
        self._lambdaIndex = lambdaIndex

    def __repr__(self) -> str:
        return (f"<{self.__class__.__name__} '{self.name}' deg {self._degree} "
                f"phi={self._phiEigen} psi={self._psiEigen}>")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorDescriptor):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> tuple:
        return (self.name, self._degree, self._phiEigen, self._psiEigen)

    def withPsi(self, psiEigen: EigenMonomial) -> GeneratorDescriptor:
        """Copy of the generator with another `psi` eigenvalue."""
        return GeneratorDescriptor(self._kind, self._index, self._degree,
                                   self._phiEigen, psiEigen,
                                   self._lambdaIndex)

    @property
    def name(self) -> str:
        """Generator name, such as ``'c_2'`` or ``'a_2^(1)'``."""
        if self._kind == 'a':
            return f'a_{self._index}^({self._lambdaIndex})'
        return f'{self._kind}_{self._index}'

    @property
    def kind(self) -> str:
        """Generator family."""
        return self._kind

    @property
    def index(self) -> int:
        """Index `i`."""
        return self._index

    @property
    def lambdaIndex(self) -> int | None:
        """Weil-number index `j`, :obj:`None` unless an `a` generator."""
        return self._lambdaIndex

    @property
    def degree(self) -> int:
        """Cohomological degree."""
        return self._degree

    @property
    def parity(self) -> str:
        """``'odd'`` for exterior and ``'even'`` for polynomial generators."""
        return 'odd' if self._degree % 2 else 'even'

    @property
    def isExterior(self) -> bool:
        """Whether the generator squares to zero."""
        return bool(self._degree % 2)

    @property
    def phiEigen(self) -> EigenMonomial:
        """Eigenvalue of `phi`."""
        return self._phiEigen

    @property
    def psiEigen(self) -> EigenMonomial:
        """Eigenvalue of `psi`."""
        return self._psiEigen


class GradedRingSpec:
    """A free graded-commutative ring presented by its generators.

    :param generators: The generators. Names must be unique.
    :param curve: Curve supplying `q` and the Weil numbers. Needed to
        evaluate eigenvalues, but not for Poincaré series.
    :param convention: One of :data:`~mstack.normalizers.CONVENTIONS`.
    :param genus: Genus recorded for presets built without a curve.
        Defaults to the curve genus, or ``0``.
    :param kind: Name of the preset the ring was built from, if any.
    :raises ValueError: If generator names repeat, or `genus`
        contradicts `curve`.

    Example::

        >>> spec = rings.ringPreset('grassmannian', rank=3)
        >>> spec.names
        ('b_1', 'b_2')

    """

    def __init__(self,
                 generators: Iterable[GeneratorDescriptor],
                 curve: CurveData | None = None,
                 convention: str = 'sign-fixed',
                 genus: int | None = None,
                 kind: str | None = None) -> None:
        self._generators = tuple(generators)
        for generator in self._generators:
            error.validateType(generator, GeneratorDescriptor, 'generators',
                               items=True)
        names = [g.name for g in self._generators]
        if len(set(names)) != len(names):
            raise ValueError(
                error.generateErrorMessage(
                    'duplicateItems', objectName='generators'
                )
            )
        if curve is not None:
            error.validateType(curve, CurveData, 'curve')
            if genus is not None and genus != curve.genus:
                raise ValueError(
                    error.generateErrorMessage(
                        'valueError', objectName='genus', value=genus
                    )
                )
            genus = curve.genus
        self._curve = curve
        self._genus = normalizers.normalizeGenus(genus or 0)
        self._convention = normalizers.normalizeConvention(convention)
        self._kind = kind

    def __repr__(self) -> str:
        label = self._kind or 'ring'
        return (f"<{self.__class__.__name__} {label} "
                f"[{', '.join(self.names)}] at {id(self)}>")

    def __iter__(self) -> Iterator[GeneratorDescriptor]:
        return iter(self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def generator(self, name: str) -> GeneratorDescriptor:
        """Look up a generator by name.

        :raises UnknownGenerator: If no generator is called `name`.

        """
        for generator in self._generators:
            if generator.name == name:
                return generator
        raise error.UnknownGenerator(
            error.generateErrorMessage('unknownGenerator', name=name)
        )

    def withGenerators(self, generators: Iterable[GeneratorDescriptor]
                       ) -> GradedRingSpec:
        """Copy of the ring with replaced generators."""
        return GradedRingSpec(generators, self._curve, self._convention,
                              self._genus, self._kind)

    def requireCurve(self, objectName: str) -> CurveData:
        """Return the curve.

        :raises MissingCurveData: If the ring has no curve.

        """
        if self._curve is None:
            raise error.MissingCurveData(
                error.generateErrorMessage(
                    'missingCurveData', objectName=objectName
                )
            )
        return self._curve

    @property
    def generators(self) -> tuple[GeneratorDescriptor, ...]:
        """The generators in presentation order."""
        return self._generators

    @property
    def names(self) -> tuple[str, ...]:
        """Generator names in presentation order."""
        return tuple(g.name for g in self._generators)

    @property
    def curve(self) -> CurveData | None:
        """The attached curve, if any."""
        return self._curve

    @property
    def genus(self) -> int:
        """Genus of the underlying curve."""
        return self._genus

    @property
    def convention(self) -> str:
        """Convention the ring was built under."""
        return self._convention

    @property
    def kind(self) -> str | None:
        """Preset name, if any."""
        return self._kind
