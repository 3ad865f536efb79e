"""Frobenius eigenvalues, Weil numbers and formal Lefschetz traces.

Two commuting actions operate on the cohomology of the moduli stack:
`phi`, induced by pulling bundles back along the Frobenius of the curve,
and `psi`, the arithmetic Frobenius. Both act diagonally on the ring
generators (see :mod:`mstack.rings`), so the alternating trace of
``phi^r x psi^s`` over all cohomological degrees factors into
geometric series over polynomial generators and finite products over
exterior generators.

Products over the Weil numbers ``lambda_j`` are evaluated exactly from
the integer power sums ``p_m = sum_j lambda_j^m`` of the L-polynomial;
floating point numbers only enter the one-time check that every
``|lambda_j|^2`` equals `q`.

"""
from __future__ import annotations
from collections import Counter, defaultdict
from collections.abc import Iterator
from fractions import Fraction
from typing import NamedTuple
import itertools
import math
import threading

import numpy as np
from sympy import Rational, symbols
from sympy.polys.polyfuncs import symmetrize

from mstack import config, error, normalizers
from mstack.objects.curve import CurveData
from mstack.objects.eigen import EigenMonomial
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.ring import GeneratorDescriptor, GradedRingSpec

CONFIG = config.load()

# Parameter defaults
TOLERANCE = CONFIG['weil']['tolerance']
DEGREE_CUTOFF = CONFIG['trace']['degreeCutoff']

# Evaluation points of the brute-force tail majorant.
_TAIL_POINTS = ([Fraction(1)]
                + [1 + Fraction(k, 32) for k in range(1, 33)]
                + [1 + Fraction(1, 2 ** k) for k in range(6, 13)])

# Denominator of rational upper bounds of q^(-k/2).
_SQRT_SCALE = 2 ** 16

# pylint: disable=C0103


class WeilNumberSet:
    """The Weil numbers of a curve, accessed through their power sums.

    Construction validates the L-polynomial: the functional equation
    ``a_(2g-i) = q^(g-i) a_i`` is checked exactly and every reciprocal
    root is checked numerically to have squared modulus `q`.

    :param curve: The curve.
    :param tolerance: Accepted deviation of ``|lambda_j|^2`` from `q`.
        Defaults to :ref:`[weil]` `tolerance` configuration.
    :raises BadFunctionalEquation: If the coefficients are not
        symmetric.
    :raises NotWeil: If a reciprocal root is off the circle.

    Example::

        >>> weil = WeilNumberSet(CurveData(1, 2, [1, 0, 2]))
        >>> weil.powerSum(1), weil.powerSum(2)
        (0, -4)

    """

    def __init__(self, curve: CurveData, tolerance: float = TOLERANCE) -> None:
        error.validateType(curve, CurveData, 'curve')
        self._curve = curve
        _validateFunctionalEquation(curve)
        self._roots = _validateRiemannHypothesis(curve, tolerance)
        genus = curve.genus
        coefficients = curve.lPoly.coefficients
        self._elementary = tuple(
            (-1) ** k * coefficients[k] for k in range(2 * genus + 1)
        )
        self._powerSums = [2 * genus]
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return (f"<{self.__class__.__name__} g={self._curve.genus} "
                f"q={self._curve.q} at {id(self)}>")

    def powerSum(self, m: int) -> int:
        """Power sum ``p_m`` of the Weil numbers, by Newton's identities.

        :param m: Nonnegative exponent.

        """
        m = normalizers.normalizeOrder(m, 'm')
        with self._lock:
            while len(self._powerSums) <= m:
                self._powerSums.append(self._nextPowerSum())
            return self._powerSums[m]

    def _nextPowerSum(self) -> int:
        m = len(self._powerSums)
        e = self._elementary
        top = len(e) - 1
        value = sum((-1) ** (i - 1) * e[i] * self._powerSums[m - i]
                    for i in range(1, min(m - 1, top) + 1))
        if m <= top:
            value += (-1) ** (m - 1) * m * e[m]
        return value

    def powerPolynomial(self, m: int) -> IntPolynomial:
        """Return ``prod_j (1 - lambda_j^m x)`` as a polynomial in `x`.

        The coefficients are recovered from the power sums ``p_(mk)``
        by Newton's identities and are integers.

        :param m: Nonnegative exponent.

        Example::

            >>> weil.powerPolynomial(1) == weil.curve.lPoly
            True

        """
        m = normalizers.normalizeOrder(m, 'm')
        count = 2 * self._curve.genus
        elementary = [Fraction(1)]
        for k in range(1, count + 1):
            total = sum((-1) ** (i - 1) * elementary[k - i]
                        * self.powerSum(m * i) for i in range(1, k + 1))
            elementary.append(Fraction(total, k))
        coefficients = []
        for k, value in enumerate(elementary):
            if value.denominator != 1:
                raise ArithmeticError(f"non-integral e_{k} = {value}")
            coefficients.append((-1) ** k * int(value))
        return IntPolynomial(coefficients)

    @property
    def curve(self) -> CurveData:
        """The curve."""
        return self._curve

    @property
    def roots(self) -> np.ndarray:
        """Distinct numerical Weil numbers, used for validation only."""
        return self._roots


class TraceResult(NamedTuple):
    """Formal trace of ``phi^r x psi^s``.

    :param factors: ``(text, exp)`` pairs, the trace being the product
        of ``text^exp``.
    :param value: Exact value, :obj:`None` when divergent.
    :param convergent: Whether the trace converges absolutely.
    :param majorant: Absolute-convergence bound, :obj:`None` when
        divergent.

    """
    factors: tuple[tuple[str, int], ...]
    value: Fraction | None
    convergent: bool
    majorant: Fraction | None


class BruteTraceResult(NamedTuple):
    """Partial trace over monomials up to a degree cutoff.

    :param partial: Exact alternating sum over enumerated monomials.
    :param tailBound: Bound on the absolute sum over omitted monomials.

    """
    partial: Fraction
    tailBound: Fraction


def weilNumbers(curve: CurveData, tolerance: float = TOLERANCE
                ) -> WeilNumberSet:
    """Validate the L-polynomial of `curve` and return its Weil numbers.

    :param curve: The curve.
    :param tolerance: Accepted deviation of ``|lambda_j|^2`` from `q`.
    :raises BadFunctionalEquation: If the coefficients are not
        symmetric.
    :raises NotWeil: If a reciprocal root is off the circle.

    Example::

        >>> weilNumbers(CurveData(1, 2, [1, -3, 2]))
        Traceback (most recent call last):
        ...
        mstack.error.NotWeil: NotWeil: The L-polynomial has a reciprocal root...

    """
    return WeilNumberSet(curve, tolerance)


def generatorEigenvalues(spec: GradedRingSpec,
                         name: str) -> tuple[EigenMonomial, EigenMonomial]:
    """Eigenvalues of `phi` and `psi` on a generator.

    :param spec: The ring.
    :param name: Generator name.
    :raises UnknownGenerator: If `spec` has no generator `name`.

    Example::

        >>> spec = rings.ringPreset('moduli-fixed-det', 3, genus=0)
        >>> generatorEigenvalues(spec, 'b_2')
        (<EigenMonomial q>, <EigenMonomial q^-2>)

    """
    generator = spec.generator(name)
    return generator.phiEigen, generator.psiEigen


def geometricFrobeniusEigenvalue(spec: GradedRingSpec,
                                 name: str) -> EigenMonomial:
    """Eigenvalue of the geometric Frobenius, the inverse of `psi`."""
    return spec.generator(name).psiEigen.inverse()


def formalTrace(spec: GradedRingSpec,
                r: int,
                s: int,
                raiseOnDivergence: bool = True) -> TraceResult:
    """Exact alternating trace of ``phi^r x psi^s`` over all degrees.

    Each polynomial generator with eigenvalue `x` contributes the
    geometric series ``(1 - x)^-1``, each exterior generator the factor
    ``1 - x``. Generators whose eigenvalues involve single Weil numbers
    are grouped into blocks covering every ``lambda_j`` and evaluated as
    ``prod_j (1 - lambda_j^m q^e)`` with integer coefficients.

    The trace converges only for ``s > r``, ``s >= 1``, and when every
    polynomial generator has an eigenvalue of modulus below ``1``.

    :param spec: The ring. Must carry curve data.
    :param r: Power of `phi`.
    :param s: Power of `psi`.
    :param raiseOnDivergence: Whether to raise on divergence rather
        than return a result with ``convergent=False``. Defaults
        to :obj:`True`.
    :raises MissingCurveData: If `spec` has no curve.
    :raises Divergent: If the trace diverges and `raiseOnDivergence`
        is :obj:`True`.

    Example::

        >>> curve = CurveData(0, 2)
        >>> spec = rings.ringPreset('moduli-fixed-det', 2, curve=curve)
        >>> formalTrace(spec, 0, 1).value
        Fraction(8, 3)

    """
    r, s = normalizers.normalizeTraceExponents(r, s)
    curve = spec.requireCurve('formalTrace')
    try:
        eigenvalues = _traceEigenvalues(spec, curve, r, s)
    except error.Divergent:
        if raiseOnDivergence:
            raise
        return TraceResult((), None, False, None)

    q = Fraction(curve.q)
    weil = weilNumbers(curve)
    factors: list[tuple[str, int]] = []
    value = Fraction(1)
    for eigenvalue, exterior, multiplicity in _blocks(eigenvalues, curve):
        exp = 1 if exterior else -1
        if eigenvalue.kind == 'none':
            evaluated = 1 - q ** eigenvalue.qExp
            text = f'1 - {eigenvalue}'
        else:
            evaluated = Fraction(
                weil.powerPolynomial(eigenvalue.lambdaExp)(
                    q ** eigenvalue.qExp
                )
            )
            text = f'prod_j (1 - {eigenvalue})'
        for _ in range(multiplicity):
            factors.append((text, exp))
            value *= evaluated ** exp
    return TraceResult(tuple(factors), value, True,
                       traceMajorant(spec, r, s))


def traceMajorant(spec: GradedRingSpec, r: int, s: int) -> Fraction:
    """Absolute-convergence majorant of :func:`formalTrace`.

    Every eigenvalue is replaced by an upper bound of its modulus,
    exact whenever ``|x|^2`` is a square power of `q`, and exterior
    factors become ``1 + |x|``.

    :param spec: The ring. Must carry curve data.
    :param r: Power of `phi`.
    :param s: Power of `psi`.
    :raises MissingCurveData: If `spec` has no curve.
    :raises Divergent: If the trace diverges.

    """
    r, s = normalizers.normalizeTraceExponents(r, s)
    curve = spec.requireCurve('traceMajorant')
    majorant = Fraction(1)
    for generator, eigenvalue in _traceEigenvalues(spec, curve, r, s):
        bound = _modulusBound(eigenvalue, curve.q)
        if generator.isExterior:
            majorant *= 1 + bound
        else:
            majorant /= 1 - bound
    return majorant


def bruteTrace(spec: GradedRingSpec,
               r: int,
               s: int,
               degreeCutoff: int = DEGREE_CUTOFF) -> BruteTraceResult:
    """Partial trace by enumeration of monomials.

    Every monomial of total degree at most `degreeCutoff` contributes
    ``(-1)^degree`` times its eigenvalue. Sums over Weil numbers are
    collected as a symmetric polynomial and reduced to the coefficients
    of the L-polynomial, independently of the power sums used
    by :func:`formalTrace`.

    The omitted monomials are bounded through the absolute generating
    function ``F(x)``: their sum is at most ``F(x) / x^(D+1)`` for any
    admissible ``x >= 1``, and the smallest such value over a fixed set
    of points is returned.

    Exterior generators are expanded subset by subset, ``2^k`` subsets
    for ``k`` of them, so the enumeration is meant for small genus and
    rank.

    :param spec: The ring. Must carry curve data.
    :param r: Power of `phi`.
    :param s: Power of `psi`.
    :param degreeCutoff: Largest degree enumerated. Defaults
        to :ref:`[trace]` `degreeCutoff` configuration.
    :raises MissingCurveData: If `spec` has no curve.
    :raises Divergent: If the trace diverges.

    """
    r, s = normalizers.normalizeTraceExponents(r, s)
    degreeCutoff = normalizers.normalizeOrder(degreeCutoff, 'degreeCutoff')
    curve = spec.requireCurve('bruteTrace')
    eigenvalues = _traceEigenvalues(spec, curve, r, s)
    q = Fraction(curve.q)
    count = 2 * curve.genus

    polynomial = [(g.degree, e) for g, e in eigenvalues if not g.isExterior]
    exterior = [(g.degree, e) for g, e in eigenvalues if g.isExterior]

    exteriorParts: Counter = Counter()
    for subset in itertools.product((0, 1), repeat=len(exterior)):
        chosen = [item for item, k in zip(exterior, subset) if k]
        degree = sum(d for d, _ in chosen)
        if degree <= degreeCutoff:
            exteriorParts[(degree, sum(e.qExp for _, e in chosen),
                           _lambdaVector([e for _, e in chosen], count))] += 1

    # Accumulate sign * q-part per Weil-number exponent vector.
    terms: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    polynomialParts = _polynomialMonomials(polynomial, degreeCutoff, count)
    for degree, parts in sorted(polynomialParts.items()):
        for (extDegree, extExp, extVector), extCount in sorted(
                exteriorParts.items()):
            total = degree + extDegree
            if total > degreeCutoff:
                continue
            sign = -1 if total % 2 else 1
            for (partExp, partVector), partCount in sorted(parts.items()):
                key = tuple(a + b for a, b in zip(extVector, partVector))
                terms[key] += (sign * extCount * partCount
                               * q ** (extExp + partExp))

    partial = _reduceSymmetric(terms, curve)
    tailBound = min(
        _absoluteSum(x, polynomial, exterior, curve.q)
        / x ** (degreeCutoff + 1)
        for x in _TAIL_POINTS
        if all(_modulusBound(e, curve.q) * x ** d < 1 for d, e in polynomial)
    )
    return BruteTraceResult(partial, tailBound)


def curvePointCounts(curve: CurveData, count: int) -> list[int]:
    """Point counts ``#X(F_(q^k)) = q^k + 1 - p_k`` for ``k = 1..count``.

    Example::

        >>> curvePointCounts(CurveData(1, 2, [1, 0, 2]), 2)
        [3, 9]

    """
    count = normalizers.normalizeOrder(count, 'count')
    weil = weilNumbers(curve)
    return [curve.q ** k + 1 - weil.powerSum(k) for k in range(1, count + 1)]


def jacobianOrder(curve: CurveData) -> int:
    """Number of rational points of the Jacobian, ``L(1)``."""
    error.validateType(curve, CurveData, 'curve')
    return int(curve.lPoly(1))


def curveZeta(curve: CurveData) -> RationalFunction:
    """Zeta function ``L(t) / ((1 - t)(1 - qt))`` of the curve."""
    error.validateType(curve, CurveData, 'curve')
    return RationalFunction(
        curve.lPoly, IntPolynomial([1, -1]) * IntPolynomial([1, -curve.q])
    )


# -------
# Helpers
# -------

def _validateFunctionalEquation(curve: CurveData) -> None:
    genus = curve.genus
    coefficients = curve.lPoly.coefficients
    for i in range(genus + 1):
        expected = curve.q ** (genus - i) * coefficients[i]
        if coefficients[2 * genus - i] != expected:
            raise error.BadFunctionalEquation(
                error.generateErrorMessage('badFunctionalEquation', index=i)
            )


def _validateRiemannHypothesis(curve: CurveData,
                               tolerance: float) -> np.ndarray:
    # Reciprocal roots of L are the roots of its reversal. Repeated
    # roots are removed first, np.roots resolves them poorly.
    if not curve.genus:
        return np.array([], dtype=complex)
    squarefree = curve.lPoly.toPoly().sqf_part()
    coefficients = [int(c) for c in reversed(squarefree.all_coeffs())]
    roots = np.roots(np.array(coefficients, dtype=float))
    for root in roots:
        modulus = float(abs(root) ** 2)
        if abs(modulus - curve.q) > tolerance:
            raise error.NotWeil(
                error.generateErrorMessage(
                    'notWeil', modulus=round(modulus, 6), q=curve.q
                )
            )
    return roots


def _traceEigenvalues(spec: GradedRingSpec,
                      curve: CurveData,
                      r: int,
                      s: int
                      ) -> list[tuple[GeneratorDescriptor, EigenMonomial]]:
    # Eigenvalues of phi^r x psi^s, checking absolute convergence.
    if s == 0 or s <= r:
        raise error.Divergent(
            error.generateErrorMessage('divergent', r=r, s=s)
        )
    result = []
    for generator in spec:
        eigenvalue = generator.phiEigen ** r * generator.psiEigen ** s
        if (not generator.isExterior
                and eigenvalue.modulusSquared(curve.q) >= 1):
            raise error.Divergent(
                error.generateErrorMessage(
                    'divergentGenerator', r=r, s=s, generator=generator.name
                )
            )
        result.append((generator, eigenvalue))
    return result


def _blocks(eigenvalues: list[tuple[GeneratorDescriptor, EigenMonomial]],
            curve: CurveData) -> Iterator[tuple[EigenMonomial, bool, int]]:
    # Yield (eigenvalue, exterior, multiplicity), merging single Weil
    # numbers into blocks over every j.
    grouped: dict[tuple[bool, int, int], Counter] = {}
    for generator, eigenvalue in eigenvalues:
        if eigenvalue.kind != 'single':
            yield eigenvalue, generator.isExterior, 1
            continue
        key = (generator.isExterior, eigenvalue.qExp, eigenvalue.lambdaExp)
        grouped.setdefault(key, Counter())[eigenvalue.lambdaIndex] += 1

    indices = set(range(1, 2 * curve.genus + 1))
    for (exterior, qExp, lambdaExp), counts in grouped.items():
        multiplicities = set(counts.values())
        if set(counts) != indices or len(multiplicities) != 1:
            blockValue = EigenMonomial(qExp, lambdaExp=lambdaExp,
                                       allLambdas=True)
            raise ValueError(
                error.generateErrorMessage(
                    'incompleteExteriorBlock', eigenvalue=blockValue
                )
            )
        yield (EigenMonomial(qExp, lambdaExp=lambdaExp, allLambdas=True),
               exterior, multiplicities.pop())


def _modulusBound(eigenvalue: EigenMonomial, q: int) -> Fraction:
    # Upper bound of sqrt(q^k), exact when k is even.
    k = 2 * eigenvalue.qExp + eigenvalue.lambdaExp
    if k % 2 == 0:
        return Fraction(q) ** (k // 2)
    if k > 0:
        return Fraction(_ceilSqrt(q ** k))
    n = q ** -k
    return Fraction(_ceilSqrt(n * _SQRT_SCALE ** 2), n * _SQRT_SCALE)


def _ceilSqrt(n: int) -> int:
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def _lambdaVector(eigenvalues: Iterator[EigenMonomial] | list[EigenMonomial],
                  count: int) -> tuple[int, ...]:
    vector = [0] * count
    for eigenvalue in eigenvalues:
        if eigenvalue.kind == 'single':
            vector[eigenvalue.lambdaIndex - 1] += eigenvalue.lambdaExp
        elif eigenvalue.kind == 'all':
            vector = [v + eigenvalue.lambdaExp for v in vector]
    return tuple(vector)


def _polynomialMonomials(polynomial: list[tuple[int, EigenMonomial]],
                         degreeCutoff: int,
                         count: int
                         ) -> dict[int, Counter]:
    # Monomials in the polynomial generators bucketed by degree, each
    # bucket counting (qExp, lambda vector) keys.
    buckets: dict[int, Counter] = defaultdict(Counter)

    def visit(position: int, degree: int, qExp: int,
              vector: tuple[int, ...]) -> None:
        if position == len(polynomial):
            buckets[degree][(qExp, vector)] += 1
            return
        step, eigenvalue = polynomial[position]
        stepVector = _lambdaVector([eigenvalue], count)
        while degree <= degreeCutoff:
            visit(position + 1, degree, qExp, vector)
            degree += step
            qExp += eigenvalue.qExp
            vector = tuple(a + b for a, b in zip(vector, stepVector))

    visit(0, 0, 0, (0,) * count)
    return buckets


def _reduceSymmetric(terms: dict[tuple[int, ...], Fraction],
                     curve: CurveData) -> Fraction:
    # Evaluate sum_v c_v lambda^v through elementary symmetric functions.
    count = 2 * curve.genus
    if not count:
        return sum(terms.values(), Fraction(0))
    lambdas = symbols(f'l1:{count + 1}')
    expression = sum(
        Rational(c.numerator, c.denominator)
        * math.prod(x ** k for x, k in zip(lambdas, vector))
        for vector, c in sorted(terms.items()) if c
    )
    if expression == 0:
        return Fraction(0)
    if expression.is_number:
        value = Rational(expression)
        return Fraction(int(value.p), int(value.q))
    symmetric, remainder, definitions = symmetrize(
        expression, *lambdas, formal=True
    )
    if remainder != 0:
        raise ArithmeticError('trace sum is not symmetric in the Weil numbers')
    coefficients = curve.lPoly.coefficients
    substitution = {
        symbol: (-1) ** k * coefficients[k]
        for k, (symbol, _) in enumerate(definitions, start=1)
    }
    value = Rational(symmetric.subs(substitution))
    return Fraction(int(value.p), int(value.q))


def _absoluteSum(x: Fraction,
                 polynomial: list[tuple[int, EigenMonomial]],
                 exterior: list[tuple[int, EigenMonomial]],
                 q: int) -> Fraction:
    # Majorant generating function F(x) of all monomials.
    total = Fraction(1)
    for degree, eigenvalue in polynomial:
        total /= 1 - _modulusBound(eigenvalue, q) * x ** degree
    for degree, eigenvalue in exterior:
        total *= 1 + _modulusBound(eigenvalue, q) * x ** degree
    return total
