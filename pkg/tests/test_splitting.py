import unittest
from mstack.objects.splitting import SplittingType

# pylint: disable=C0115, C0116, C0103


class Splitting(unittest.TestCase):

    def test_splittingType(self):
        split = SplittingType([-2, 1, 1])
        self.assertEqual(split.exponents, (1, 1, -2))
        self.assertEqual(split.rank, 3)
        self.assertEqual(split.degree, 0)
        self.assertEqual(split.height, 3)
        self.assertEqual(split.multiplicities, ((1, 2), (-2, 1)))
        self.assertEqual(split, SplittingType((1, -2, 1)))
        self.assertEqual(len({split, SplittingType([1, 1, -2])}), 1)

    def test_shifted(self):
        self.assertEqual(SplittingType([0, 0]).shifted(1).exponents, (1, 1))
        self.assertEqual(SplittingType([2, -1]).shifted(-1).degree, -1)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            SplittingType([])
        with self.assertRaises(ValueError):
            SplittingType([1, 0.5])
        with self.assertRaises(TypeError):
            SplittingType(3)


if __name__ == '__main__':
    unittest.main()
