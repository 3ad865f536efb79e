import unittest
from fractions import Fraction
from mstack import pointcount, strata, verify
from mstack.objects.curve import GroundField

# pylint: disable=C0115, C0116, C0103


class Checks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        strata.clearCache()

    def assertCheck(self, result, name):
        self.assertEqual(result.name, name)
        self.assertTrue(result.passed, msg='\n'.join(result.details))
        self.assertTrue(result.details)

    def test_checkGenerators(self):
        self.assertCheck(verify.checkGenerators(12), 'generators')

    def test_checkRecursion(self):
        self.assertCheck(verify.checkRecursion(10), 'recursion')

    def test_checkGrassmann(self):
        self.assertCheck(verify.checkGrassmann(10), 'grassmann')

    def test_checkTrace(self):
        self.assertCheck(verify.checkTrace(10), 'trace')

    def test_checkTrace_configuredCutoff(self):
        self.assertEqual(verify.DEGREE_CUTOFF, 30)
        self.assertCheck(verify.checkTrace(), 'trace')

    def test_checkLefschetz(self):
        self.assertEqual(verify.HEIGHT, 60)
        self.assertEqual(verify.GRID['primePowers'],
                         (2, 3, 4, 5, 7, 8, 9, 11, 13, 16))
        self.assertEqual(verify.GRID['massRanks'], (3, 4))
        self.assertCheck(verify.checkLefschetz(), 'lefschetz')
        report = pointcount.verifyLefschetz(4, GroundField(3), verify.HEIGHT)
        self.assertTrue(report.passed)
        self.assertLess(report.tailBound, Fraction(1, 10 ** 9))

    def test_checkCoarse(self):
        self.assertCheck(verify.checkCoarse(), 'coarse')

    def test_checkDemo(self):
        self.assertCheck(verify.checkDemo(20), 'demo')

    def test_checkAdjudication(self):
        result = verify.checkAdjudication(16)
        self.assertCheck(result, 'adjudication')
        self.assertEqual(result.details[-1],
                         'surviving conventions: sl-strict')

    def test_runAll(self):
        results = verify.runAll(['coarse', 'generators'])
        self.assertEqual([r.name for r in results], ['coarse', 'generators'])
        with self.assertRaises(ValueError):
            verify.runAll(['generator'])
        self.assertEqual(set(verify.CHECKS),
                         {'generators', 'recursion', 'grassmann', 'lefschetz',
                          'trace', 'coarse', 'demo', 'adjudication'})


class Errata(unittest.TestCase):

    def test_errataLedger(self):
        entries, survivors = verify.errataLedger(16)
        self.assertEqual(survivors, ('sl-strict',))
        self.assertEqual([e.topic for e in entries],
                         ['closed-form sign', 'b-weight', 'exterior range'])
        for entry in entries:
            self.assertTrue(entry.confirmed, msg=entry.evidence)
        self.assertIn('8/3', entries[1].evidence)
        self.assertIn('convergent=False', entries[1].evidence)


if __name__ == '__main__':
    unittest.main()
