import unittest
from mstack.error import MissingCurveData, NotPrimePower
from mstack.objects.curve import CurveData, GroundField
from mstack.objects.polynomial import IntPolynomial

# pylint: disable=C0115, C0116, C0103


class Curve(unittest.TestCase):

    def test_groundField(self):
        field = GroundField(9)
        self.assertEqual(field.characteristic, 3)
        self.assertEqual(field.degree, 2)
        self.assertEqual(field.extension(2), GroundField(81))
        self.assertEqual(GroundField(3).glOrder(2), 48)
        self.assertEqual(GroundField(2).glOrder(3), 168)
        self.assertEqual(GroundField(2).glOrder(0), 1)
        self.assertEqual(GroundField(4).slOrder(2), 60)
        with self.assertRaises(NotPrimePower):
            GroundField(6)

    def test_curveData(self):
        curve = CurveData(1, 2, [1, 0, 2])
        self.assertEqual(curve.genus, 1)
        self.assertEqual(curve.q, 2)
        self.assertEqual(curve.field, GroundField(2))
        self.assertEqual(curve.lPoly, IntPolynomial([1, 0, 2]))
        self.assertEqual(CurveData(0, 5).lPoly, IntPolynomial([1]))

    def test_curveData_invalid(self):
        with self.assertRaises(MissingCurveData):
            CurveData(1, 2)
        with self.assertRaises(ValueError):
            CurveData(1, 2, [1, 0, 0, 2])
        with self.assertRaises(ValueError):
            CurveData(1, 2, [2, 0, 2])
        with self.assertRaises(NotPrimePower):
            CurveData(0, 10)

    def test_fromGenus(self):
        self.assertEqual(CurveData.fromGenus(2, 3).lPoly,
                         IntPolynomial([1, 0, 6, 0, 9]))
        self.assertEqual(CurveData.fromGenus(0, 3), CurveData(0, 3))


if __name__ == '__main__':
    unittest.main()
