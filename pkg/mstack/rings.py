"""Cohomology rings presented by generators, and their Poincaré series.

Every ring in mstack is free graded-commutative: a polynomial ring on
its even generators tensored with an exterior algebra on its odd
generators. This module ships the generator presets of the moduli stack
of bundles with trivialized determinant and of the classifying and
local stacks used to cross-check it:

    - ``moduli-fixed-det`` – ``c_2..c_n``, ``b_1..b_(n-1)`` and the
      exterior classes ``a_i^(j)``.
    - ``bgl`` / ``bsl`` / ``bgm`` – Chern classes of classifying stacks.
    - ``grassmannian`` – ``b_1..b_(n-1)`` of the affine Grassmannian.
    - ``open-curve`` – bundles on the punctured curve.
    - ``picard-stack`` – line bundles.

The range of the exterior index `i` depends on the convention:
``as-printed`` and ``sign-fixed`` take ``i = 1..n``, ``sl-strict``
takes ``i = 2..n``. The conventions also differ in the closed form
of :func:`poincareClosedForm`.

"""
from __future__ import annotations
from typing import NamedTuple
import warnings

from mstack import arith, config, error, normalizers
from mstack.objects.curve import CurveData
from mstack.objects.eigen import EigenMonomial
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.ring import GeneratorDescriptor, GradedRingSpec
from mstack.objects.series import TruncatedSeries

CONFIG = config.load()

# Parameter defaults
ORDER = CONFIG['series']['order']
CONVENTION = CONFIG['rings']['convention']

#: Names of the ring presets.
PRESETS = ('moduli-fixed-det', 'bgl', 'bgm', 'bsl', 'grassmannian',
           'open-curve', 'picard-stack')

#: Presets whose generators include exterior classes ``a_i^(j)``.
CURVE_PRESETS = ('moduli-fixed-det', 'open-curve', 'picard-stack')

MINIMUM_RANKS = {'moduli-fixed-det': 2, 'grassmannian': 2, 'open-curve': 2,
                 'bgl': 1, 'bsl': 1, 'bgm': 1, 'picard-stack': 1}

# pylint: disable=C0103


class FactorizationReport(NamedTuple):
    """Outcome of :func:`grassmannFactorizationCheck`.

    :param holds: Whether both sides agree to the truncation order.
    :param lhs: Expansion of the closed form.
    :param rhs: Product of the Grassmannian and open-curve series.
    :param firstMismatchDegree: Lowest degree where they differ,
        or :obj:`None`.
    :param ratio: Exact quotient ``rhs / lhs`` of the rational forms.

    """
    holds: bool
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    firstMismatchDegree: int | None
    ratio: RationalFunction


def ringPreset(kind: str,
               rank: int = 2,
               genus: int | None = None,
               convention: str = CONVENTION,
               curve: CurveData | None = None) -> GradedRingSpec:
    """Build the generator list of a named ring.

    :param kind: One of :data:`PRESETS`.
    :param rank: Rank `n`. Ignored by ``bgm`` and ``picard-stack``.
    :param genus: Genus `g` of the curve. Taken from `curve` when
        omitted.
    :param convention: One of :data:`~mstack.normalizers.CONVENTIONS`.
        Defaults to :ref:`[rings]` `convention` configuration.
    :param curve: Curve data attached to the ring, needed later for
        eigenvalue evaluation. A ring built from `genus` alone carries
        its exterior generators without a curve; degrees and Poincaré
        series are available, and evaluating eigenvalues (as
        in :func:`~mstack.frobenius.formalTrace`) raises
        :class:`~mstack.error.MissingCurveData`.
    :raises InvalidRank: If `rank` is below the minimum of `kind`.
    :raises MissingCurveData: If `kind` has exterior classes and neither
        `genus` nor `curve` is given.

    Example::

        >>> ringPreset('moduli-fixed-det', 2, genus=1,
        ...            convention='sl-strict').names
        ('b_1', 'c_2', 'a_2^(1)', 'a_2^(2)')

    """
    kind = normalizers.normalizeChoice(kind, PRESETS, 'kind')
    convention = normalizers.normalizeConvention(convention)
    rank = normalizers.normalizeRank(rank, MINIMUM_RANKS[kind])
    if kind in CURVE_PRESETS and genus is None:
        if curve is None:
            raise error.MissingCurveData(
                error.generateErrorMessage(
                    'missingCurveData', objectName=kind
                )
            )
        genus = curve.genus
    genus = normalizers.normalizeGenus(genus or 0)
    lowest = 2 if convention == 'sl-strict' else 1

    generators: list[GeneratorDescriptor] = []
    if kind == 'moduli-fixed-det':
        generators += _bClasses(rank)
        generators += _cClasses(2, rank)
        generators += _aClasses(lowest, rank, genus)
    elif kind == 'bgl':
        generators += _cClasses(1, rank)
    elif kind == 'bgm':
        generators += _cClasses(1, 1)
    elif kind == 'bsl':
        generators += _cClasses(2, rank)
    elif kind == 'grassmannian':
        generators += _bClasses(rank)
    elif kind == 'open-curve':
        generators += _cClasses(lowest, rank)
        generators += _aClasses(lowest, rank, genus)
    else:
        generators += _cClasses(1, 1)
        generators += _aClasses(1, 1, genus)
    return GradedRingSpec(generators, curve, convention, genus, kind)


def poincareFromGenerators(spec: GradedRingSpec,
                           order: int = ORDER) -> TruncatedSeries:
    """Poincaré series of a free graded-commutative ring.

    The series is the product of ``1/(1 - t^d)`` over polynomial
    generators and ``1 + t^d`` over exterior generators of degree `d`,
    multiplied out factor by factor as truncated series.

    :param spec: The ring.
    :param order: Truncation order. Defaults to :ref:`[series]` `order`
        configuration.

    Example::

        >>> spec = ringPreset('moduli-fixed-det', 2, genus=0)
        >>> [int(c) for c in poincareFromGenerators(spec, 8).coeffs]
        [1, 0, 1, 0, 2, 0, 2, 0, 3]

    """
    error.validateType(spec, GradedRingSpec, 'spec')
    order = normalizers.normalizeOrder(order)
    result = TruncatedSeries.one(order)
    for generator in spec:
        degree = generator.degree
        if generator.isExterior:
            factor = TruncatedSeries([1] + [0] * (degree - 1) + [1], order)
        else:
            factor = TruncatedSeries(
                [int(k % degree == 0) for k in range(order + 1)], order
            )
        result = result * factor
    return result


def poincareRational(spec: GradedRingSpec) -> RationalFunction:
    """Closed rational form of :func:`poincareFromGenerators`."""
    error.validateType(spec, GradedRingSpec, 'spec')
    return arith.productOf(
        RationalFunction(IntPolynomial.onePlus(g.degree)) if g.isExterior
        else RationalFunction(1, IntPolynomial.oneMinus(g.degree))
        for g in spec
    )


def poincareClosedForm(genus: int,
                       rank: int,
                       convention: str = CONVENTION) -> RationalFunction:
    """Closed-form Poincaré series of the trivial-determinant stack.

    ``as-printed`` divides the numerator
    ``prod_(i=1..n) (1 + t^(2i-1))^(2g)`` by
    ``prod_(i=2..n) (1 + t^(2i)) * prod_(i=2..n) (1 - t^(2i-2))``;
    ``sign-fixed`` uses ``(1 - t^(2i))`` in the first product, matching
    the even generators ``c_i``; ``sl-strict`` additionally restricts
    the numerator to ``i = 2..n``.

    :param genus: Genus `g`.
    :param rank: Rank `n`.
    :param convention: Convention. Defaults to :ref:`[rings]`
        `convention` configuration.
    :raises InvalidRank: If `rank` is below ``2``.

    Requesting ``as-printed`` emits a :class:`.ConventionWarning`.

    """
    genus = normalizers.normalizeGenus(genus)
    rank = normalizers.normalizeRank(rank, 2)
    convention = normalizers.normalizeConvention(convention)
    if convention == 'as-printed':
        warnings.warn(
            "the 'as-printed' closed form has (1 + t^2i) denominators that "
            "contradict its even generators c_i",
            error.ConventionWarning, stacklevel=2
        )
    lowest = 2 if convention == 'sl-strict' else 1
    numerator = IntPolynomial([1])
    for i in range(lowest, rank + 1):
        numerator *= IntPolynomial.onePlus(2 * i - 1) ** (2 * genus)
    denominator = IntPolynomial([1])
    for i in range(2, rank + 1):
        if convention == 'as-printed':
            denominator *= IntPolynomial.onePlus(2 * i)
        else:
            denominator *= IntPolynomial.oneMinus(2 * i)
        denominator *= IntPolynomial.oneMinus(2 * i - 2)
    return RationalFunction(numerator, denominator)


def grassmannFactorizationCheck(genus: int,
                                rank: int,
                                convention: str = CONVENTION,
                                order: int = ORDER) -> FactorizationReport:
    """Compare the closed form with the local-global factorization.

    The closed form of :func:`poincareClosedForm` is expanded and
    compared with the product of the ``grassmannian`` and ``open-curve``
    series. A mismatch is a valid outcome, not an error.

    :param genus: Genus `g`.
    :param rank: Rank `n`.
    :param convention: Convention of both the closed form and the
        open-curve generator range.
    :param order: Truncation order.

    Example::

        >>> report = grassmannFactorizationCheck(0, 2, 'sign-fixed')
        >>> report.holds, report.firstMismatchDegree
        (False, 2)

    """
    closedForm = poincareClosedForm(genus, rank, convention)
    lhs = arith.expandRational(closedForm, order)
    grassmannian = ringPreset('grassmannian', rank)
    openCurve = ringPreset('open-curve', rank, genus, convention)
    rhs = (poincareFromGenerators(grassmannian, order)
           * poincareFromGenerators(openCurve, order))
    mismatch = lhs.firstMismatch(rhs)
    ratio = (poincareRational(grassmannian)
             * poincareRational(openCurve)) / closedForm
    return FactorizationReport(mismatch is None, lhs, rhs, mismatch, ratio)


def _cClasses(lowest: int, rank: int) -> list[GeneratorDescriptor]:
    # c_i: phi 1, psi q^-i.
    return [
        GeneratorDescriptor('c', i, 2 * i, EigenMonomial(), EigenMonomial(-i))
        for i in range(lowest, rank + 1)
    ]


def _bClasses(rank: int) -> list[GeneratorDescriptor]:
    # b_k: phi q, psi q^-k.
    return [
        GeneratorDescriptor('b', k, 2 * k, EigenMonomial(1), EigenMonomial(-k))
        for k in range(1, rank)
    ]


def _aClasses(lowest: int, rank: int,
              genus: int) -> list[GeneratorDescriptor]:
    # a_i^(j): phi lambda_j, psi lambda_j q^-i.
    return [
        GeneratorDescriptor('a', i, 2 * i - 1,
                            EigenMonomial(0, j, 1), EigenMonomial(-i, j, 1),
                            lambdaIndex=j)
        for i in range(lowest, rank + 1)
        for j in range(1, 2 * genus + 1)
    ]
