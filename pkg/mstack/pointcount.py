"""Bundle counting on the projective line over a finite field.

Every vector bundle on the projective line splits as a sum of line
bundles ``O(a_1) + ... + O(a_n)``, so the groupoid of rank-`n` bundles
over ``F_q`` is enumerated by splitting types. This module computes
automorphism group orders, the mass ``sum 1/|Aut^0(E)|`` of bundles
with trivial determinant, and compares it with the formal trace of the
arithmetic Frobenius (:mod:`mstack.frobenius`):

    - :func:`verifyLefschetz` – the mass formula
      ``q^(1 - n^2) tr(psi) = sum 1/|Aut^0(E)|``.
    - :func:`fixedPointDemo` – traces of ``phi^r x psi^s`` next to the
      naive fixed-point mass, which does not depend on `r`.

"""
from __future__ import annotations
from collections.abc import Iterator
from fractions import Fraction
from typing import NamedTuple

from mstack import config, error, frobenius, normalizers, rings
from mstack.objects.curve import CurveData, GroundField
from mstack.objects.hnType import HNType
from mstack.objects.splitting import SplittingType

CONFIG = config.load()

# Parameter defaults
HEIGHT = CONFIG['pointcount']['height']

# pylint: disable=C0103


class AutOrders(NamedTuple):
    """Orders of ``Aut(E)`` and of its determinant-one subgroup."""
    aut: int
    aut0: int


class MassResult(NamedTuple):
    """Mass of trivial-determinant bundles up to a height.

    :param partial: Exact sum over splitting types of height at most
        the cutoff.
    :param tailBound: Bound on the omitted sum.
    :param closedForm: Exact total for rank 2, otherwise :obj:`None`.

    """
    partial: Fraction
    tailBound: Fraction
    closedForm: Fraction | None


class LefschetzReport(NamedTuple):
    """Both sides of the mass formula.

    :param lhs: ``q^(s(1 - n^2))`` times the trace of ``psi^s``.
    :param rhsPartial: Partial mass over ``F_(q^s)``.
    :param tailBound: Bound on the omitted mass.
    :param exact: Whether the mass is known in closed form.
    :param passed: Whether both sides agree, exactly when `exact`.

    """
    lhs: Fraction
    rhsPartial: Fraction
    tailBound: Fraction
    exact: bool
    passed: bool


class FixedPointRow(NamedTuple):
    """One row of :func:`fixedPointDemo`."""
    r: int
    trace: Fraction
    naive: Fraction
    lefschetz: Fraction


class FixedPointReport(NamedTuple):
    """Traces against the naive fixed-point mass.

    :param rows: One row per ``r = 0..s-1``.
    :param varies: Whether the trace column takes distinct values
        while the naive column is constant.

    """
    rows: tuple[FixedPointRow, ...]
    varies: bool


def enumerateSplittings(rank: int, degree: int,
                        height: int) -> list[SplittingType]:
    """Splitting types of given rank and degree up to a height.

    Types are ordered by height, then by exponents.

    Example::

        >>> [s.exponents for s in enumerateSplittings(3, 0, 2)]
        [(0, 0, 0), (1, 0, -1)]

    """
    rank = normalizers.normalizeRank(rank)
    error.validateType(degree, int, 'degree')
    height = normalizers.normalizeOrder(height, 'height')
    if rank == 1:
        return [SplittingType([degree])]
    result = []
    for spread in range(height + 1):
        # a_1 = top, a_n = top - spread, middle entries in between.
        for top in range(-((-degree - spread) // rank),
                         (degree + (rank - 1) * spread) // rank + 1):
            bottom = top - spread
            middleSum = degree - top - bottom
            for middle in _decreasing(rank - 2, middleSum, top, bottom):
                result.append(SplittingType((top,) + middle + (bottom,)))
    return sorted(result, key=lambda s: (s.height, s.exponents))


def _decreasing(count: int, total: int, upper: int,
                lower: int) -> Iterator[tuple[int, ...]]:
    # Weakly decreasing tuples in [lower, upper] with the given sum.
    if count == 0:
        if total == 0:
            yield ()
        return
    for value in range(min(upper, total - (count - 1) * lower), lower - 1, -1):
        if value * count < total:
            break
        for rest in _decreasing(count - 1, total - value, value, lower):
            yield (value,) + rest


def autOrders(split: SplittingType, field: GroundField) -> AutOrders:
    """Automorphism group orders of a split bundle.

    ``|Aut| = prod_k |GL_(m_k)(F_q)| * q^u`` where ``m_k`` are the
    multiplicities of the distinct exponents and ``u`` counts the
    homomorphisms ``O(b) -> O(a)`` for ``a > b``. The determinant is
    onto ``F_q^x``, so ``|Aut^0| = |Aut| / (q - 1)``.

    Example::

        >>> autOrders(SplittingType([0, 0]), GroundField(3))
        AutOrders(aut=48, aut0=24)

    """
    error.validateType(split, SplittingType, 'split')
    error.validateType(field, GroundField, 'field')
    blocks = split.multiplicities
    aut = 1
    for _, multiplicity in blocks:
        aut *= field.glOrder(multiplicity)
    u = sum(ma * mb * (a - b + 1)
            for i, (a, ma) in enumerate(blocks)
            for b, mb in blocks[i + 1:])
    aut *= field.q ** u
    return AutOrders(aut, aut // (field.q - 1))


def massSl(rank: int, field: GroundField,
           height: int = HEIGHT) -> MassResult:
    """Mass ``sum 1/|Aut^0(E)|`` of degree-zero bundles.

    Types of height ``h`` number at most ``(h + 1)^(n-2)`` and each
    contributes at most ``q^(-h) (q - 1)^(1-n)``; the omitted heights
    are bounded by summing ``n (h + 1)^(n-2) q^(-h) (q - 1)^(1-n)``
    until consecutive terms shrink geometrically.

    :param rank: Rank `n`, at least ``2``.
    :param field: The ground field.
    :param height: Largest height enumerated. Defaults
        to :ref:`[pointcount]` `height` configuration.

    Example::

        >>> massSl(2, GroundField(2)).closedForm
        Fraction(1, 3)

    """
    rank = normalizers.normalizeRank(rank, 2)
    error.validateType(field, GroundField, 'field')
    height = normalizers.normalizeOrder(height, 'height')
    partial = sum(
        (Fraction(1, autOrders(split, field).aut0)
         for split in enumerateSplittings(rank, 0, height)),
        Fraction(0)
    )
    closedForm = None
    if rank == 2:
        closedForm = Fraction(1, (field.q - 1) * (field.q ** 2 - 1))
    return MassResult(partial, _massTail(rank, field.q, height), closedForm)


def _massTail(rank: int, q: int, height: int) -> Fraction:
    # Sum the majorant explicitly until its term ratio drops below 1.
    def term(h: int) -> Fraction:
        return (rank * Fraction(h + 1) ** (rank - 2)
                / Fraction(q) ** h / Fraction(q - 1) ** (rank - 1))

    total = Fraction(0)
    h = height + 1
    while True:
        ratio = Fraction(h + 2, h + 1) ** (rank - 2) / q
        if ratio < 1:
            return total + term(h) / (1 - ratio)
        total += term(h)
        h += 1


def verifyLefschetz(rank: int, field: GroundField,
                    height: int = HEIGHT,
                    extension: int = 1) -> LefschetzReport:
    """Compare the trace of ``psi^s`` with the bundle mass.

    The left side is ``q^(s(1 - n^2))`` times the formal trace of
    ``psi^s`` on the genus 0 moduli ring; the right side is the mass
    over ``F_(q^s)``. Rank 2 is compared exactly with the closed form.

    :param rank: Rank `n`, at least ``2``.
    :param field: The ground field.
    :param height: Largest height enumerated.
    :param extension: The power `s` of `psi`. Defaults to ``1``.

    Example::

        >>> verifyLefschetz(2, GroundField(5)).lhs
        Fraction(1, 96)

    """
    rank = normalizers.normalizeRank(rank, 2)
    error.validateType(field, GroundField, 'field')
    extension = normalizers.normalizeRank(extension, objectName='extension')
    spec = rings.ringPreset('moduli-fixed-det', rank,
                            curve=CurveData(0, field.q))
    trace = frobenius.formalTrace(spec, 0, extension).value
    lhs = Fraction(field.q) ** (extension * (1 - rank ** 2)) * trace
    mass = massSl(rank, field.extension(extension), height)
    withinTail = abs(lhs - mass.partial) <= mass.tailBound
    if mass.closedForm is not None:
        return LefschetzReport(lhs, mass.partial, mass.tailBound, True,
                               withinTail and lhs == mass.closedForm)
    return LefschetzReport(lhs, mass.partial, mass.tailBound, False,
                           withinTail)


def fixedPointDemo(field: GroundField, s: int,
                   height: int = HEIGHT) -> FixedPointReport:
    """Traces of ``phi^r x psi^s`` beside the naive fixed-point mass.

    For rank 2 on the projective line, the trace ``T(r, s)`` is listed
    for ``r = 0..s-1`` next to the mass ``1/|SL_2(F_(q^s))|`` of the
    naive fixed points and the mass of all bundles over ``F_(q^s)``.
    The naive mass does not depend on `r`, the trace does.

    :param field: The ground field.
    :param s: Power of `psi`, at least ``2``.
    :param height: Height passed to the mass computation.

    Example::

        >>> [row.trace for row in fixedPointDemo(GroundField(2), 2).rows]
        [Fraction(64, 45), Fraction(32, 15)]

    """
    error.validateType(field, GroundField, 'field')
    s = normalizers.normalizeRank(s, 2, 's')
    spec = rings.ringPreset('moduli-fixed-det', 2,
                            curve=CurveData(0, field.q))
    extension = field.extension(s)
    naive = Fraction(1, extension.slOrder(2))
    lefschetz = verifyLefschetz(2, field, height, s).lhs
    rows = tuple(
        FixedPointRow(r, frobenius.formalTrace(spec, r, s).value, naive,
                      lefschetz)
        for r in range(s)
    )
    traces = [row.trace for row in rows]
    return FixedPointReport(rows, len(set(traces)) == len(traces))


def splittingCodim(split: SplittingType) -> int:
    """Codimension ``h^1(End E) = sum_(a_i > a_j) (a_i - a_j - 1)``.

    Example::

        >>> splittingCodim(SplittingType([2, -2]))
        3

    """
    error.validateType(split, SplittingType, 'split')
    exponents = split.exponents
    return sum(a - b - 1
               for i, a in enumerate(exponents)
               for b in exponents[i + 1:] if a > b)


def hnTypeOfSplitting(split: SplittingType) -> HNType:
    """Harder-Narasimhan type of a split bundle.

    Equal exponents ``a`` of multiplicity ``m`` form one block
    ``(m, m a)``.

    """
    error.validateType(split, SplittingType, 'split')
    return HNType((m, m * a) for a, m in split.multiplicities)
