import unittest
from fractions import Fraction
from mstack.error import InvalidRank, NotPrimePower
from mstack.normalizers import (
    CONVENTIONS,
    normalizeOrder,
    normalizeCoefficients,
    normalizeRationals,
    normalizeRank,
    normalizeGenus,
    normalizeConvention,
    normalizeChoice,
    normalizePrimePower,
    normalizeTraceExponents,
    normalizeBlocks,
    normalizeExponents
)

# pylint: disable=C0115, C0116, C0103


class Normalizers(unittest.TestCase):

    def test_normalizeOrder(self):
        self.assertEqual(normalizeOrder(0), 0)
        with self.assertRaises(TypeError):
            normalizeOrder(4.0)
        with self.assertRaises(ValueError):
            normalizeOrder(-1)

    def test_normalizeCoefficients(self):
        self.assertEqual(normalizeCoefficients([1, 0, 2], 'lPoly'),
                         (1, 0, 2))
        with self.assertRaises(TypeError):
            normalizeCoefficients(1, 'lPoly')
        with self.assertRaises(ValueError):
            normalizeCoefficients([1, 0.5], 'lPoly')

    def test_normalizeRationals(self):
        self.assertEqual(normalizeRationals([1, Fraction(1, 2)], 'coeffs'),
                         (1, Fraction(1, 2)))
        with self.assertRaises(ValueError):
            normalizeRationals([0.5], 'coeffs')

    def test_normalizeRank(self):
        self.assertEqual(normalizeRank(1), 1)
        self.assertEqual(normalizeRank(2, 2), 2)
        with self.assertRaises(InvalidRank):
            normalizeRank(1, 2)
        with self.assertRaises(InvalidRank):
            normalizeRank(0)
        with self.assertRaises(TypeError):
            normalizeRank('2')

    def test_normalizeGenus(self):
        self.assertEqual(normalizeGenus(0), 0)
        with self.assertRaises(ValueError):
            normalizeGenus(-1)

    def test_normalizeConvention(self):
        for convention in CONVENTIONS:
            self.assertEqual(normalizeConvention(convention), convention)
        with self.assertRaisesRegex(ValueError, 'sl-strict'):
            normalizeConvention('sl_strict')
        with self.assertRaises(TypeError):
            normalizeConvention(None)

    def test_normalizeChoice(self):
        self.assertEqual(normalizeChoice('bgl', ('bgl', 'bsl'), 'kind'), 'bgl')
        with self.assertRaises(ValueError):
            normalizeChoice('gl', ('bgl', 'bsl'), 'kind')

    def test_normalizePrimePower(self):
        for q in (2, 4, 9, 16, 25, 27):
            self.assertEqual(normalizePrimePower(q), q)
        for faultyValue in (0, 1, 6, 12):
            with self.assertRaises(NotPrimePower):
                normalizePrimePower(faultyValue)

    def test_normalizeTraceExponents(self):
        self.assertEqual(normalizeTraceExponents(0, 1), (0, 1))
        with self.assertRaises(ValueError):
            normalizeTraceExponents(-1, 1)

    def test_normalizeBlocks(self):
        self.assertEqual(normalizeBlocks([(1, 1), [2, 1]]), ((1, 1), (2, 1)))
        for faultyValue in ([], [(0, 1)], [(1, 1, 1)], [(1, 0), (1, 0)],
                            [(2, 1), (1, 1)]):
            with self.assertRaises(ValueError):
                normalizeBlocks(faultyValue)

    def test_normalizeExponents(self):
        self.assertEqual(normalizeExponents([-1, 2, 0]), (2, 0, -1))
        with self.assertRaises(ValueError):
            normalizeExponents([])


if __name__ == '__main__':
    unittest.main()
