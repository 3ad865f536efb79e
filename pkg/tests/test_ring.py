import unittest
from mstack.error import MissingCurveData, UnknownGenerator
from mstack.objects.curve import CurveData
from mstack.objects.eigen import EigenMonomial
from mstack.objects.ring import GeneratorDescriptor, GradedRingSpec

# pylint: disable=C0115, C0116, C0103


class Ring(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.c2 = GeneratorDescriptor('c', 2, 4, EigenMonomial(),
                                     EigenMonomial(-2))
        cls.a1 = GeneratorDescriptor('a', 1, 1, EigenMonomial(0, 1, 1),
                                     EigenMonomial(-1, 1, 1), lambdaIndex=1)

    def test_generatorDescriptor(self):
        self.assertEqual(self.c2.name, 'c_2')
        self.assertEqual(self.c2.parity, 'even')
        self.assertFalse(self.c2.isExterior)
        self.assertEqual(self.a1.name, 'a_1^(1)')
        self.assertEqual(self.a1.parity, 'odd')
        self.assertTrue(self.a1.isExterior)
        self.assertEqual(self.a1.lambdaIndex, 1)
        with self.assertRaises(ValueError):
            GeneratorDescriptor('d', 1, 2, EigenMonomial(), EigenMonomial())
        with self.assertRaises(ValueError):
            GeneratorDescriptor('a', 1, 1, EigenMonomial(), EigenMonomial())
        with self.assertRaises(TypeError):
            GeneratorDescriptor('c', 1, 2, 1, EigenMonomial())

    def test_withPsi(self):
        changed = self.c2.withPsi(EigenMonomial(-1))
        self.assertEqual(changed.psiEigen, EigenMonomial(-1))
        self.assertEqual(changed.name, 'c_2')
        self.assertNotEqual(changed, self.c2)

    def test_gradedRingSpec(self):
        spec = GradedRingSpec([self.c2, self.a1], genus=1)
        self.assertEqual(len(spec), 2)
        self.assertEqual(spec.names, ('c_2', 'a_1^(1)'))
        self.assertIn('c_2', spec)
        self.assertNotIn('c_3', spec)
        self.assertIs(spec.generator('a_1^(1)'), self.a1)
        self.assertEqual(spec.genus, 1)
        self.assertEqual(spec.convention, 'sign-fixed')
        with self.assertRaises(UnknownGenerator):
            spec.generator('c_3')
        with self.assertRaises(ValueError):
            GradedRingSpec([self.c2, self.c2])

    def test_curve(self):
        spec = GradedRingSpec([self.c2])
        with self.assertRaises(MissingCurveData):
            spec.requireCurve('formalTrace')
        curve = CurveData(1, 2, [1, 0, 2])
        attached = GradedRingSpec([self.c2], curve)
        self.assertIs(attached.requireCurve('formalTrace'), curve)
        self.assertEqual(attached.genus, 1)
        with self.assertRaises(ValueError):
            GradedRingSpec([self.c2], curve, genus=2)

    def test_withGenerators(self):
        spec = GradedRingSpec([self.c2], kind='bsl')
        replaced = spec.withGenerators([self.c2.withPsi(EigenMonomial(-3))])
        self.assertEqual(replaced.kind, 'bsl')
        self.assertEqual(replaced.generator('c_2').psiEigen,
                         EigenMonomial(-3))


if __name__ == '__main__':
    unittest.main()
