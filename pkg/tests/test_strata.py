import unittest
import itertools
from fractions import Fraction
from mstack import strata
from mstack.arith import expandRational
from mstack.error import (
    NonPolynomialResult,
    NotCoprime,
    RankDegreeMismatch
)
from mstack.objects.hnType import HNPolygon, HNType
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.series import TruncatedSeries

# pylint: disable=C0115, C0116, C0103


def _compositions(total):
    # Ordered tuples of positive integers summing to total.
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _allTypes(rank, degree, bound):
    # Every HN type with block degrees in [-bound, bound].
    for ranks in _compositions(rank):
        for degrees in itertools.product(range(-bound, bound + 1),
                                         repeat=len(ranks)):
            if sum(degrees) != degree:
                continue
            slopes = [Fraction(d, n) for n, d in zip(ranks, degrees)]
            if all(a > b for a, b in zip(slopes, slopes[1:])):
                yield HNType(list(zip(ranks, degrees)))


class Polygons(unittest.TestCase):

    def test_codim(self):
        self.assertEqual(strata.codim(HNType([(2, 1), (1, -1)]), 2), 5)
        self.assertEqual(strata.codim(HNType([(1, 1), (1, -1)]), 0), 1)
        self.assertEqual(strata.codim(HNType([(2, 1), (1, 0)]), 0), -1)
        self.assertEqual(strata.codim(HNType([(3, 2)]), 4), 0)

    def test_codim_sign(self):
        for genus in (1, 2):
            for degree in (0, 1):
                for hnType in _allTypes(3, degree, 6):
                    if not hnType.isSemistable:
                        self.assertGreaterEqual(strata.codim(hnType, genus), 1)
        negative = [t for degree in (0, 1) for t in _allTypes(3, degree, 6)
                    if strata.codim(t, 0) < 0]
        self.assertIn(HNType([(2, 1), (1, 0)]), negative)
        for hnType in negative:
            product = TruncatedSeries.one(6)
            for n, d in hnType.blocks:
                product = product * strata.ssSeries(n, d, 0, 6)
            self.assertTrue(product.isZero, msg=str(hnType.blocks))

    def test_polygonLeq(self):
        semistable = strata.polygonOf(HNType([(2, 0)]))
        unstable = strata.polygonOf(HNType([(1, 1), (1, -1)]))
        self.assertTrue(strata.polygonLeq(semistable, unstable))
        self.assertFalse(strata.polygonLeq(unstable, semistable))
        self.assertTrue(strata.polygonLeq(unstable, unstable))
        self.assertFalse(strata.polygonLess(unstable, unstable))
        self.assertTrue(strata.polygonLess(semistable, unstable))
        with self.assertRaises(RankDegreeMismatch):
            strata.polygonLeq(semistable, HNPolygon([(0, 0), (2, 1)]))

    def test_enumerateTypes(self):
        self.assertEqual(
            [t.blocks for t in strata.enumerateTypes(2, 0, 0, 5)],
            [((1, 1), (1, -1)), ((1, 2), (1, -2)), ((1, 3), (1, -3))]
        )
        types = strata.enumerateTypes(3, 0, 0, 2)
        self.assertEqual(
            [t.blocks for t in types],
            [((1, 1), (1, 0), (1, -1)), ((1, 1), (2, -1)), ((2, 1), (1, -1))]
        )
        self.assertTrue(all(strata.codim(t, 0) == 1 for t in types))
        types = strata.enumerateTypes(3, 1, 2, 6, includeSemistable=True)
        self.assertIn(HNType([(3, 1)]), types)
        for hnType in types:
            self.assertEqual((hnType.rank, hnType.degree), (3, 1))
            self.assertLessEqual(strata.codim(hnType, 2), 6)
        self.assertEqual(strata.enumerateTypes(1, 3, 0, 5), [])
        for genus in (0, 1, 3):
            self.assertEqual(strata.enumerateTypes(2, 0, genus, -1), [])
            self.assertEqual(
                [t.blocks for t in strata.enumerateTypes(
                    2, 0, genus, -1, includeSemistable=True
                )],
                [((2, 0),)]
            )

    def test_enumerateTypes_complete(self):
        cases = [(rank, degree, genus, maxCodim, 10)
                 for rank in (2, 3) for degree in (0, 1)
                 for genus in (0, 1, 2) for maxCodim in range(4)]
        cases += [(4, 0, 0, 2, 6), (4, 0, 1, 2, 6), (4, 1, 1, 1, 6)]
        for rank, degree, genus, maxCodim, bound in cases:
            expected = sorted(
                t for t in _allTypes(rank, degree, bound)
                if not t.isSemistable and strata.codim(t, genus) <= maxCodim
            )
            self.assertEqual(
                strata.enumerateTypes(rank, degree, genus, maxCodim),
                expected, msg=f'n={rank} d={degree} g={genus} C={maxCodim}'
            )

    def test_enumerateTypesBelow(self):
        bound = HNPolygon([(0, 0), (1, 1), (2, 0)])
        self.assertEqual(
            [t.blocks for t in strata.enumerateTypesBelow(2, 0, bound)],
            [((1, 1), (1, -1)), ((2, 0),)]
        )
        bound = HNType([(1, 2), (2, -2)]).polygon
        for hnType in strata.enumerateTypesBelow(3, 0, bound):
            self.assertTrue(strata.polygonLeq(hnType.polygon, bound))
        with self.assertRaises(RankDegreeMismatch):
            strata.enumerateTypesBelow(3, 0, HNType([(2, 0)]).polygon)


class Recursion(unittest.TestCase):

    def setUp(self):
        strata.clearCache()

    def test_ssSeries_lineBundles(self):
        self.assertEqual(
            strata.ssSeries(1, 5, 2, 10),
            expandRational(
                RationalFunction(IntPolynomial([1, 1]) ** 4,
                                 IntPolynomial.oneMinus(2)), 10
            )
        )

    def test_ssSeries_projectiveLine(self):
        self.assertEqual(
            strata.ssSeries(2, 0, 0, 16),
            expandRational(RationalFunction(
                1, IntPolynomial.oneMinus(2) * IntPolynomial.oneMinus(4)
            ), 16)
        )
        self.assertEqual(
            strata.ssSeries(3, 0, 0, 16),
            expandRational(RationalFunction(
                1, IntPolynomial.oneMinus(2) * IntPolynomial.oneMinus(4)
                * IntPolynomial.oneMinus(6)
            ), 16)
        )
        self.assertTrue(strata.ssSeries(2, 1, 0, 16).isZero)
        self.assertTrue(strata.ssSeries(3, 1, 0, 16).isZero)

    def test_ssSeries_memo(self):
        high = strata.ssSeries(2, 0, 1, 16)
        self.assertEqual(strata.ssSeries(2, 0, 1, 8), high.truncate(8))
        strata.clearCache()
        self.assertEqual(strata.ssSeries(2, 0, 1, 8), high.truncate(8))

    def test_recursionTotal(self):
        for genus in (0, 1, 2):
            for rank, degree in ((2, 0), (2, 1), (3, 1)):
                self.assertEqual(
                    strata.recursionTotal(rank, degree, genus, 12),
                    expandRational(strata.totalSeriesUnfixed(rank, genus), 12)
                )

    def test_totalSeriesUnfixed(self):
        self.assertEqual(
            strata.totalSeriesUnfixed(1, 1),
            RationalFunction([1, 1], [1, -1])
        )


class Coarse(unittest.TestCase):

    def test_coarseModuliSeries(self):
        self.assertEqual(strata.coarseModuliSeries(2, 1, 1, 4).coeffs,
                         (1, 2, 1, 0, 0))
        with self.assertRaises(NotCoprime):
            strata.coarseModuliSeries(2, 2, 1, 4)

    def test_fixedDetCoarseSeries(self):
        series = strata.fixedDetCoarseSeries(2, 1, 2, 12)
        self.assertEqual(series, TruncatedSeries([1, 0, 1, 4, 1, 0, 1], 12))
        self.assertTrue(strata.isPalindromic(series, 6))
        self.assertEqual(strata.fixedDetCoarseSeries(2, 1, 1, 6),
                         TruncatedSeries([1], 6))
        with self.assertRaises(ValueError):
            strata.fixedDetCoarseSeries(2, 1, 0, 6)

    def test_rankTwoOracle(self):
        self.assertEqual(strata.rankTwoOracle(1), 1)
        self.assertEqual(strata.rankTwoOracle(2),
                         RationalFunction([1, 0, 1, 4, 1, 0, 1]))
        for genus in (3, 4):
            oracle = strata.rankTwoOracle(genus)
            self.assertTrue(oracle.isPolynomial)
            order = oracle.numerator.degree + 4
            self.assertEqual(
                strata.fixedDetCoarseSeries(2, 1, genus, order),
                TruncatedSeries(oracle.numerator.coefficients, order)
            )

    def test_isPalindromic(self):
        series = TruncatedSeries([1, 2, 1, 0], 3)
        self.assertTrue(strata.isPalindromic(series, 2))
        self.assertFalse(strata.isPalindromic(series, 3))
        with self.assertRaises(ValueError):
            strata.isPalindromic(series, 4)

    def test_nonPolynomialResult(self):
        with self.assertRaises(NonPolynomialResult):
            strata._checkPolynomial(  # pylint: disable=W0212
                TruncatedSeries([1, 0, 1], 2), 1, 'test'
            )

    def test_adjudicateConventions(self):
        report = strata.adjudicateConventions((1,), (2,), 20)
        self.assertEqual(report.survivors, ('sl-strict',))
        self.assertTrue(report.coarseCheck)
        self.assertEqual(len(report.comparisons), 3)
        failed = [c for c in report.comparisons if not c.holds]
        self.assertTrue(all(c.firstMismatchDegree is not None
                            for c in failed))


if __name__ == '__main__':
    unittest.main()
