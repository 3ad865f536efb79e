"""Harder-Narasimhan strata and the semistable recursion.

The stack of rank `n`, degree `d` bundles on a curve of genus `g` is
stratified by Harder-Narasimhan type. Each stratum is a vector bundle
over the product of semistable stacks of its subquotients, of
codimension::

    codim = sum_(i<j) [n_i n_j (g - 1) + n_j d_i - n_i d_j]

and its Gysin sequence splits, so that the Poincaré series of the whole
stack is the sum over types of ``t^(2 codim)`` times the product of the
semistable series. Solving this t-adically for the semistable series
gives :func:`ssSeries`; the coarse moduli series follow by removing the
classifying-line factor and, for fixed determinant, one Jacobian.

"""
from __future__ import annotations
from collections.abc import Callable, Iterable, Iterator
from typing import NamedTuple
import math
import threading
import warnings

from mstack import arith, config, error, normalizers, rings
from mstack.objects.hnType import HNPolygon, HNType
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.series import TruncatedSeries

CONFIG = config.load()

# Parameter defaults
ORDER = CONFIG['series']['order']
MAX_CODIM = CONFIG['strata']['maxCodim']

# Semistable series by (rank, degree, genus), at the highest order seen.
_SS_MEMO: dict[tuple[int, int, int], TruncatedSeries] = {}
_SS_LOCK = threading.RLock()

# pylint: disable=C0103


class ConventionComparison(NamedTuple):
    """One cell of the convention adjudication grid.

    :param convention: The closed-form convention.
    :param genus: Genus `g`.
    :param rank: Rank `n`.
    :param holds: Whether the closed form matches the recursion total.
    :param firstMismatchDegree: Lowest differing degree, or :obj:`None`.

    """
    convention: str
    genus: int
    rank: int
    holds: bool
    firstMismatchDegree: int | None


class AdjudicationReport(NamedTuple):
    """Outcome of :func:`adjudicateConventions`.

    :param comparisons: Every grid cell.
    :param survivors: Conventions matching on the whole grid.
    :param coarseCheck: Whether the rank 2, degree 1, genus 2
        fixed-determinant series equals the polynomial division oracle.

    """
    comparisons: tuple[ConventionComparison, ...]
    survivors: tuple[str, ...]
    coarseCheck: bool


# --------
# Polygons
# --------

def polygonOf(hnType: HNType) -> HNPolygon:
    """Polygon of partial ``(rank, degree)`` sums of `hnType`.

    Example::

        >>> polygonOf(HNType([(1, 1), (1, -1)])).vertices
        ((0, 0), (1, 1), (2, 0))

    """
    error.validateType(hnType, HNType, 'hnType')
    return hnType.polygon


def polygonLeq(p: HNPolygon, p2: HNPolygon) -> bool:
    """Whether `p` lies on or below `p2` everywhere.

    Both polygons are piecewise linear with integer breakpoints, so
    comparing values at integer abscissae decides the question.

    :raises RankDegreeMismatch: If the polygons end at different points.

    """
    error.validateType(p, HNPolygon, 'p')
    error.validateType(p2, HNPolygon, 'p2')
    if p.vertices[-1] != p2.vertices[-1]:
        raise error.RankDegreeMismatch(
            error.generateErrorMessage(
                'rankDegreeMismatch', first=p.vertices[-1],
                second=p2.vertices[-1]
            )
        )
    return all(p.valueAt(x) <= p2.valueAt(x) for x in range(p.rank + 1))


def polygonLess(p: HNPolygon, p2: HNPolygon) -> bool:
    """Strict version of :func:`polygonLeq`."""
    return polygonLeq(p, p2) and p != p2


def codim(hnType: HNType, genus: int) -> int:
    """Codimension of the Harder-Narasimhan stratum of `hnType`.

    ``sum_(i<j) [n_i n_j (g - 1) + n_j d_i - n_i d_j]``, at least ``1``
    for two or more blocks when ``g >= 1``. In genus 0 the value can be
    ``0`` or negative, as for ``((2, 1), (1, 0))``; those strata have a
    vanishing semistable product.

    Example::

        >>> codim(HNType([(2, 1), (1, -1)]), 2)
        5

    """
    error.validateType(hnType, HNType, 'hnType')
    genus = normalizers.normalizeGenus(genus)
    blocks = hnType.blocks
    return sum(
        ni * nj * (genus - 1) + nj * di - ni * dj
        for i, (ni, di) in enumerate(blocks)
        for nj, dj in blocks[i + 1:]
    )


# -----------
# Enumeration
# -----------

def enumerateTypes(rank: int,
                   degree: int,
                   genus: int,
                   maxCodim: int = MAX_CODIM,
                   includeSemistable: bool = False) -> list[HNType]:
    """Harder-Narasimhan types of codimension at most `maxCodim`.

    Each interior polygon vertex ``(N, D)`` satisfies
    ``nD - Nd <= sum_(i<j) (n_j d_i - n_i d_j)``, which is bounded by
    ``maxCodim`` plus ``n(n-1)/2`` when ``g = 0`` and by ``maxCodim``
    otherwise; this confines the search to finitely many polygons.

    :param rank: Total rank `n`.
    :param degree: Total degree `d`.
    :param genus: Genus `g`.
    :param maxCodim: Largest codimension. Defaults to :ref:`[strata]`
        `maxCodim` configuration.
    :param includeSemistable: Whether to include the one-block type,
        which has codimension 0 and is listed for every `maxCodim`.
        Defaults to :obj:`False`.

    Example::

        >>> [t.blocks for t in enumerateTypes(2, 0, 0, 5)]
        [((1, 1), (1, -1)), ((1, 2), (1, -2)), ((1, 3), (1, -3))]

    """
    rank = normalizers.normalizeRank(rank)
    error.validateType(degree, int, 'degree')
    genus = normalizers.normalizeGenus(genus)
    error.validateType(maxCodim, int, 'maxCodim')
    slack = rank * (rank - 1) // 2 if genus == 0 else 0

    def ceiling(x: int) -> int:
        return (maxCodim + slack + x * degree) // rank

    types = [t for t in _polygonTypes(rank, degree, ceiling)
             if not t.isSemistable and codim(t, genus) <= maxCodim]
    if includeSemistable:
        types.append(HNType([(rank, degree)]))
    return sorted(types)


def enumerateTypesBelow(rank: int,
                        degree: int,
                        bound: HNPolygon) -> list[HNType]:
    """Harder-Narasimhan types whose polygon lies below `bound`.

    The semistable type is always included.

    :raises RankDegreeMismatch: If `bound` does not end at
        ``(rank, degree)``.

    Example::

        >>> bound = HNPolygon([(0, 0), (1, 1), (2, 0)])
        >>> [t.blocks for t in enumerateTypesBelow(2, 0, bound)]
        [((1, 1), (1, -1)), ((2, 0),)]

    """
    rank = normalizers.normalizeRank(rank)
    error.validateType(degree, int, 'degree')
    error.validateType(bound, HNPolygon, 'bound')
    if bound.vertices[-1] != (rank, degree):
        raise error.RankDegreeMismatch(
            error.generateErrorMessage(
                'rankDegreeMismatch', first=(rank, degree),
                second=bound.vertices[-1]
            )
        )
    return sorted(
        _polygonTypes(rank, degree, lambda x: math.floor(bound.valueAt(x)))
    )


def _polygonTypes(rank: int, degree: int,
                  ceiling: Callable[[int], int]) -> Iterator[HNType]:
    # Concave polygons from (0, 0) to (rank, degree) whose interior
    # vertices lie strictly above the chord and at most at ceiling(x).

    def extend(vertices: list[tuple[int, int]]) -> Iterator[HNType]:
        x, y = vertices[-1]
        previous = ((x - vertices[-2][0], y - vertices[-2][1])
                    if len(vertices) > 1 else None)

        def admissible(dx: int, dy: int) -> bool:
            return previous is None or dy * previous[0] < previous[1] * dx

        if admissible(rank - x, degree - y):
            points = vertices + [(rank, degree)]
            yield HNType((x2 - x1, y2 - y1)
                         for (x1, y1), (x2, y2) in zip(points, points[1:]))
        for nextX in range(x + 1, rank):
            lowest = nextX * degree // rank + 1
            for nextY in range(lowest, ceiling(nextX) + 1):
                if admissible(nextX - x, nextY - y):
                    yield from extend(vertices + [(nextX, nextY)])

    yield from extend([(0, 0)])


# -------------------
# Stratified recursion
# -------------------

def totalSeriesUnfixed(rank: int, genus: int) -> RationalFunction:
    """Poincaré series of the stack of all rank-`n` bundles.

    The series is ``prod_(k=1..n) (1 + t^(2k-1))^(2g) / (1 - t^(2k))``
    times ``prod_(k=1..n-1) 1 / (1 - t^(2k))`` and does not depend on
    the degree.

    """
    rank = normalizers.normalizeRank(rank)
    genus = normalizers.normalizeGenus(genus)
    numerator = IntPolynomial([1])
    denominator = IntPolynomial([1])
    for k in range(1, rank + 1):
        numerator *= IntPolynomial.onePlus(2 * k - 1) ** (2 * genus)
        denominator *= IntPolynomial.oneMinus(2 * k)
    for k in range(1, rank):
        denominator *= IntPolynomial.oneMinus(2 * k)
    return RationalFunction(numerator, denominator)


def ssSeries(rank: int, degree: int, genus: int,
             order: int = ORDER) -> TruncatedSeries:
    """Poincaré series of the semistable bundles of rank `n`, degree `d`.

    Solves ``P_total = sum_tau t^(2 codim(tau)) prod_i P_ss(n_i, d_i)``
    for the one-block term, to the given order. Results are memoized
    per ``(rank, degree, genus)``.

    :param rank: Rank `n`.
    :param degree: Degree `d`.
    :param genus: Genus `g`.
    :param order: Truncation order. Defaults to :ref:`[series]` `order`
        configuration.
    :raises StratificationError: If a stratum of negative codimension
        has a nonzero semistable product.

    Example::

        >>> ssSeries(2, 1, 0, 40).isZero
        True

    """
    rank = normalizers.normalizeRank(rank)
    error.validateType(degree, int, 'degree')
    genus = normalizers.normalizeGenus(genus)
    order = normalizers.normalizeOrder(order)
    key = (rank, degree, genus)
    with _SS_LOCK:
        cached = _SS_MEMO.get(key)
        if cached is not None and cached.order >= order:
            return cached.truncate(order)

        series = arith.expandRational(totalSeriesUnfixed(rank, genus), order)
        for hnType in enumerateTypes(rank, degree, genus, order // 2):
            series = series - _stratumSeries(hnType, genus, order)
        _SS_MEMO[key] = series
        return series


def recursionTotal(rank: int, degree: int, genus: int,
                   order: int = ORDER) -> TruncatedSeries:
    """Sum of the stratum series over every Harder-Narasimhan type."""
    rank = normalizers.normalizeRank(rank)
    order = normalizers.normalizeOrder(order)
    total = TruncatedSeries.zero(order)
    for hnType in enumerateTypes(rank, degree, genus, order // 2,
                                 includeSemistable=True):
        total = total + _stratumSeries(hnType, genus, order)
    return total


def _stratumSeries(hnType: HNType, genus: int,
                   order: int) -> TruncatedSeries:
    # t^(2 codim) times the product of semistable series, to `order`.
    shift = 2 * codim(hnType, genus)
    innerOrder = order - shift
    product = TruncatedSeries.one(innerOrder)
    for n, d in hnType.blocks:
        product = product * ssSeries(n, d, genus, innerOrder)
    if shift >= 0:
        return TruncatedSeries([0] * shift + list(product.coeffs), order)
    try:
        return product.shift(shift)
    except ValueError as exc:
        raise error.StratificationError(
            error.generateErrorMessage(
                'negativeCodimension', hnType=hnType.blocks, codim=shift // 2
            )
        ) from exc


# -------------
# Coarse spaces
# -------------

def coarseModuliSeries(rank: int, degree: int, genus: int,
                       order: int = ORDER) -> TruncatedSeries:
    """Poincaré series of the coarse moduli space of stable bundles.

    For coprime rank and degree the semistable stack is a gerbe over
    the coarse space with fibre the classifying stack of the
    multiplicative group, so the series is ``(1 - t^2)`` times the
    semistable series. It is a polynomial of degree at most
    ``2(n^2(g - 1) + 1)``.

    :raises NotCoprime: If rank and degree share a factor.
    :raises NonPolynomialResult: If a coefficient above the degree bound
        is nonzero.

    Example::

        >>> [int(c) for c in coarseModuliSeries(2, 1, 1, 4).coeffs]
        [1, 2, 1, 0, 0]

    """
    rank = normalizers.normalizeRank(rank)
    genus = normalizers.normalizeGenus(genus)
    order = normalizers.normalizeOrder(order)
    _checkCoprime(rank, degree)
    series = (ssSeries(rank, degree, genus, order + 2)
              * TruncatedSeries(IntPolynomial.oneMinus(2).coefficients,
                                order + 2)).truncate(order)
    _checkPolynomial(series, 2 * (rank ** 2 * (genus - 1) + 1),
                     'coarseModuliSeries')
    return series


def fixedDetCoarseSeries(rank: int, degree: int, genus: int,
                         order: int = ORDER) -> TruncatedSeries:
    """Poincaré series of the coarse space with fixed determinant.

    The series is ``ssSeries * (1 - t^2) / (1 + t)^(2g)``: one Jacobian
    is divided out and the multiplicative gerbe factor removed. The
    automorphisms ``mu_n`` left over contribute trivially.

    :raises ValueError: If `genus` is ``0``.
    :raises NotCoprime: If rank and degree share a factor.
    :raises NonPolynomialResult: If a coefficient above
        ``2(n^2 - 1)(g - 1)`` is nonzero.

    Example::

        >>> [int(c) for c in fixedDetCoarseSeries(2, 1, 2, 8).coeffs]
        [1, 0, 1, 4, 1, 0, 1, 0, 0]

    """
    rank = normalizers.normalizeRank(rank)
    genus = normalizers.normalizeGenus(genus)
    if genus < 1:
        raise ValueError(
            error.generateErrorMessage(
                'valueTooLow', objectName='genus', value=1
            )
        )
    order = normalizers.normalizeOrder(order)
    _checkCoprime(rank, degree)
    factor = arith.expandRational(
        RationalFunction(IntPolynomial.oneMinus(2),
                         IntPolynomial([1, 1]) ** (2 * genus)),
        order + 2
    )
    series = (ssSeries(rank, degree, genus, order + 2)
              * factor).truncate(order)
    _checkPolynomial(series, 2 * (rank ** 2 - 1) * (genus - 1),
                     'fixedDetCoarseSeries')
    return series


def isPalindromic(series: TruncatedSeries, degree: int) -> bool:
    """Whether coefficients ``0..degree`` read the same reversed.

    :raises ValueError: If `degree` exceeds the order of `series`.

    """
    if degree > series.order:
        raise ValueError(
            error.generateErrorMessage(
                'valueTooHigh', objectName='degree', value=series.order
            )
        )
    coefficients = series.coeffs[:degree + 1]
    return coefficients == coefficients[::-1]


def rankTwoOracle(genus: int) -> RationalFunction:
    """Rank 2, degree 1 fixed-determinant series by direct division.

    Returns ``((1 + t^3)^(2g) - t^(2g) (1 + t)^(2g)) / ((1 - t^2)(1 - t^4))``,
    which reduces to a polynomial for every ``g >= 1``.

    """
    genus = normalizers.normalizeGenus(genus)
    numerator = (IntPolynomial.onePlus(3) ** (2 * genus)
                 - IntPolynomial([0, 0, 1]) ** genus
                 * IntPolynomial([1, 1]) ** (2 * genus))
    return RationalFunction(
        numerator, IntPolynomial.oneMinus(2) * IntPolynomial.oneMinus(4)
    )


def adjudicateConventions(genera: Iterable[int],
                          ranks: Iterable[int],
                          order: int = ORDER) -> AdjudicationReport:
    """Decide which closed-form convention the recursion supports.

    For every convention and grid point the closed form is compared
    with ``recursionTotal * (1 - t^2) / (1 + t)^(2g)``, the
    fixed-determinant series derived from the stratification. Genus
    ``0`` cannot separate ``sign-fixed`` from ``sl-strict``. The genus 2
    rank 2 coarse series is checked against :func:`rankTwoOracle` as
    well.

    :param genera: Genera of the grid.
    :param ranks: Ranks of the grid.
    :param order: Truncation order.

    """
    order = normalizers.normalizeOrder(order)
    genera = tuple(genera)
    ranks = tuple(ranks)
    comparisons = []
    for genus in genera:
        factor = arith.expandRational(
            RationalFunction(IntPolynomial.oneMinus(2),
                             IntPolynomial([1, 1]) ** (2 * genus)),
            order
        )
        for rank in ranks:
            derived = recursionTotal(rank, 0, genus, order) * factor
            for convention in normalizers.CONVENTIONS:
                with warnings.catch_warnings():
                    warnings.simplefilter('ignore', error.ConventionWarning)
                    closedForm = rings.poincareClosedForm(genus, rank,
                                                          convention)
                mismatch = arith.expandRational(
                    closedForm, order
                ).firstMismatch(derived)
                comparisons.append(ConventionComparison(
                    convention, genus, rank, mismatch is None, mismatch
                ))

    survivors = tuple(
        convention for convention in normalizers.CONVENTIONS
        if all(c.holds for c in comparisons if c.convention == convention)
    )
    oracle = rankTwoOracle(2)
    coarse = fixedDetCoarseSeries(2, 1, 2, 12)
    expected = TruncatedSeries(oracle.numerator.coefficients, 12)
    coarseCheck = (oracle.isPolynomial and coarse == expected
                   and isPalindromic(coarse, 6))
    return AdjudicationReport(tuple(comparisons), survivors, coarseCheck)


def clearCache() -> None:
    """Forget memoized semistable series."""
    with _SS_LOCK:
        _SS_MEMO.clear()


def _checkCoprime(rank: int, degree: int) -> None:
    error.validateType(degree, int, 'degree')
    if math.gcd(rank, degree) != 1:
        raise error.NotCoprime(
            error.generateErrorMessage('notCoprime', rank=rank, degree=degree)
        )


def _checkPolynomial(series: TruncatedSeries, bound: int,
                     objectName: str) -> None:
    last = series.lastNonzero()
    if last > max(bound, -1):
        raise error.NonPolynomialResult(
            error.generateErrorMessage(
                'nonPolynomialResult', objectName=objectName, degree=last,
                bound=bound
            )
        )
