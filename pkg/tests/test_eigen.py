import unittest
from fractions import Fraction
from mstack.objects.eigen import EigenMonomial

# pylint: disable=C0115, C0116, C0103


class Eigen(unittest.TestCase):

    def test_kinds(self):
        self.assertEqual(EigenMonomial(-1).kind, 'none')
        self.assertEqual(EigenMonomial(0, 2, 1).kind, 'single')
        self.assertEqual(EigenMonomial(0, lambdaExp=3, allLambdas=True).kind,
                         'all')
        self.assertEqual(EigenMonomial(2, 1, 0).kind, 'none')
        self.assertTrue(EigenMonomial().isIdentity)
        with self.assertRaises(ValueError):
            EigenMonomial(0, lambdaExp=1)
        with self.assertRaises(ValueError):
            EigenMonomial(0, 1, 1, allLambdas=True)

    def test_multiply(self):
        phi = EigenMonomial(0, 1, 1)
        psi = EigenMonomial(-2, 1, 1)
        self.assertEqual(phi * psi, EigenMonomial(-2, 1, 2))
        self.assertEqual(str(phi * psi), 'lambda_1^2*q^-2')
        self.assertEqual(psi * EigenMonomial(1), EigenMonomial(-1, 1, 1))
        self.assertTrue((psi * psi.inverse()).isIdentity)
        self.assertEqual(psi ** 0, EigenMonomial())
        with self.assertRaises(ValueError):
            phi * EigenMonomial(0, 2, 1)

    def test_modulusSquared(self):
        self.assertEqual(EigenMonomial(-2, 1, 1).modulusSquared(2),
                         Fraction(1, 8))
        self.assertEqual(EigenMonomial(1).modulusSquared(3), 9)

    def test_str(self):
        self.assertEqual(str(EigenMonomial()), '1')
        self.assertEqual(str(EigenMonomial(1)), 'q')
        self.assertEqual(
            str(EigenMonomial(-1, lambdaExp=2, allLambdas=True)),
            'lambda^2*q^-1'
        )


if __name__ == '__main__':
    unittest.main()
