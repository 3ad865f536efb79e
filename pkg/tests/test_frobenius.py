import unittest
from fractions import Fraction
from mstack.arith import expandRational
from mstack.error import (
    BadFunctionalEquation,
    Divergent,
    MissingCurveData,
    NotWeil,
    UnknownGenerator
)
from mstack.frobenius import (
    bruteTrace,
    curvePointCounts,
    curveZeta,
    formalTrace,
    generatorEigenvalues,
    geometricFrobeniusEigenvalue,
    jacobianOrder,
    traceMajorant,
    weilNumbers
)
from mstack.objects.curve import CurveData
from mstack.objects.eigen import EigenMonomial
from mstack.objects.polynomial import IntPolynomial
from mstack.rings import ringPreset

# pylint: disable=C0115, C0116, C0103


class WeilNumbers(unittest.TestCase):

    def test_powerSums(self):
        weil = weilNumbers(CurveData.fromGenus(1, 2))
        self.assertEqual(weil.powerSum(0), 2)
        self.assertEqual(weil.powerSum(1), 0)
        self.assertEqual(weil.powerSum(2), -4)
        self.assertEqual(weil.powerSum(4), 8)
        self.assertEqual(len(weil.roots), 2)

    def test_powerPolynomial(self):
        curve = CurveData(1, 2, [1, -2, 2])
        weil = weilNumbers(curve)
        self.assertEqual(weil.powerPolynomial(1), curve.lPoly)
        self.assertEqual(weil.powerPolynomial(0), IntPolynomial([1, -2, 1]))
        self.assertEqual(weilNumbers(CurveData.fromGenus(1, 2))
                         .powerPolynomial(2), IntPolynomial([1, 4, 4]))
        genusTwo = weilNumbers(CurveData.fromGenus(2, 3))
        self.assertEqual(genusTwo.powerPolynomial(1),
                         IntPolynomial([1, 0, 3]) ** 2)
        self.assertEqual(len(genusTwo.roots), 2)

    def test_repeatedRoots(self):
        curve = CurveData.fromGenus(3, 2)
        weil = weilNumbers(curve)
        self.assertEqual(weil.powerPolynomial(1), curve.lPoly)
        self.assertEqual(weil.powerSum(2), -12)

    def test_invalidCurves(self):
        with self.assertRaises(NotWeil):
            weilNumbers(CurveData(1, 2, [1, -3, 2]))
        with self.assertRaises(BadFunctionalEquation):
            weilNumbers(CurveData(1, 2, [1, 0, 3]))
        self.assertEqual(len(weilNumbers(CurveData(0, 5)).roots), 0)

    def test_curveInvariants(self):
        curve = CurveData.fromGenus(1, 2)
        self.assertEqual(curvePointCounts(curve, 2), [3, 9])
        self.assertEqual(jacobianOrder(curve), 3)
        self.assertEqual(curvePointCounts(CurveData(0, 3), 3), [4, 10, 28])
        zeta = expandRational(curveZeta(CurveData(0, 2)), 3)
        self.assertEqual(zeta.coeffs, (1, 3, 7, 15))


class Traces(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.projectiveLine = ringPreset('moduli-fixed-det', 2,
                                        curve=CurveData(0, 2))

    def test_eigenvalues(self):
        spec = ringPreset('moduli-fixed-det', 3, genus=0)
        self.assertEqual(generatorEigenvalues(spec, 'b_2'),
                         (EigenMonomial(1), EigenMonomial(-2)))
        self.assertEqual(generatorEigenvalues(spec, 'c_3'),
                         (EigenMonomial(), EigenMonomial(-3)))
        self.assertEqual(geometricFrobeniusEigenvalue(spec, 'c_2'),
                         EigenMonomial(2))
        with self.assertRaises(UnknownGenerator):
            generatorEigenvalues(spec, 'a_1^(1)')

    def test_formalTrace_projectiveLine(self):
        spec = self.projectiveLine
        self.assertEqual(formalTrace(spec, 0, 1).value, Fraction(8, 3))
        self.assertEqual(formalTrace(spec, 0, 2).value, Fraction(64, 45))
        self.assertEqual(formalTrace(spec, 1, 2).value, Fraction(32, 15))
        result = formalTrace(spec, 0, 1)
        self.assertTrue(result.convergent)
        self.assertEqual(len(result.factors), 2)
        self.assertTrue(all(exp == -1 for _, exp in result.factors))
        self.assertEqual(result.majorant, Fraction(8, 3))

    def test_formalTrace_genusOne(self):
        curve = CurveData.fromGenus(1, 2)
        spec = ringPreset('moduli-fixed-det', 2, curve=curve)
        result = formalTrace(spec, 0, 1)
        self.assertEqual(result.value, Fraction(9, 2))
        self.assertEqual(sum(1 for _, exp in result.factors if exp == 1), 2)
        self.assertGreaterEqual(result.majorant, result.value)
        strict = ringPreset('moduli-fixed-det', 2, curve=curve,
                            convention='sl-strict')
        self.assertEqual(formalTrace(strict, 0, 1).value, Fraction(3))
        other = ringPreset('moduli-fixed-det', 2,
                           curve=CurveData(1, 2, [1, -2, 2]))
        self.assertEqual(formalTrace(other, 0, 1).value, Fraction(5, 6))

    def test_formalTrace_divergent(self):
        spec = self.projectiveLine
        for r, s in ((1, 1), (0, 0), (2, 1)):
            with self.assertRaises(Divergent):
                formalTrace(spec, r, s)
        result = formalTrace(spec, 1, 1, raiseOnDivergence=False)
        self.assertFalse(result.convergent)
        self.assertIsNone(result.value)
        self.assertIsNone(result.majorant)
        with self.assertRaises(Divergent):
            traceMajorant(spec, 1, 1)
        with self.assertRaises(ValueError):
            formalTrace(spec, -1, 1)

    def test_formalTrace_missingCurve(self):
        spec = ringPreset('moduli-fixed-det', 2, genus=0)
        with self.assertRaises(MissingCurveData):
            formalTrace(spec, 0, 1)
        with self.assertRaises(MissingCurveData):
            bruteTrace(spec, 0, 1, 4)

    def test_bruteTrace_projectiveLine(self):
        result = bruteTrace(self.projectiveLine, 0, 1, 30)
        self.assertLess(result.tailBound, Fraction(1, 100))
        self.assertLessEqual(abs(result.partial - Fraction(8, 3)),
                             result.tailBound)
        # Degree 0 only: the constant monomial.
        self.assertEqual(bruteTrace(self.projectiveLine, 0, 1, 1).partial, 1)

    def test_bruteTrace_tailBoundMonotone(self):
        curve = CurveData.fromGenus(1, 2)
        for spec in (self.projectiveLine,
                     ringPreset('moduli-fixed-det', 2, curve=curve)):
            bounds = [bruteTrace(spec, 0, 1, cutoff).tailBound
                      for cutoff in range(2, 22, 4)]
            for lower, higher in zip(bounds, bounds[1:]):
                self.assertLessEqual(higher, lower)
            self.assertLess(bounds[-1], bounds[0])

    def test_bruteTrace_genusOne(self):
        for lPoly, expected in (([1, 0, 2], Fraction(9, 2)),
                                ([1, -2, 2], Fraction(5, 6))):
            spec = ringPreset('moduli-fixed-det', 2,
                              curve=CurveData(1, 2, lPoly))
            result = bruteTrace(spec, 0, 1, 12)
            self.assertLessEqual(abs(result.partial - expected),
                                 result.tailBound)


if __name__ == '__main__':
    unittest.main()
