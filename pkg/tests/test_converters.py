import unittest
from fractions import Fraction
from mstack.converters import (
    fractionToJson,
    fractionToText,
    polynomialToJson,
    seriesToJson,
    seriesToText,
    rationalToJson,
    hnTypeToJson,
    factorizationReportToJson,
    traceToJson,
    toCoefficients,
    toKebab
)
from mstack.frobenius import TraceResult
from mstack.objects.hnType import HNType
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.series import TruncatedSeries
from mstack.rings import grassmannFactorizationCheck

# pylint: disable=C0115, C0116, C0103


class Converters(unittest.TestCase):

    def test_fractionToJson(self):
        self.assertEqual(fractionToJson(Fraction(8, 3)), ['8', '3'])
        self.assertEqual(fractionToJson(-2), ['-2', '1'])
        self.assertIsNone(fractionToJson(None))

    def test_fractionToText(self):
        self.assertEqual(fractionToText(Fraction(8, 3)), '8/3')
        self.assertEqual(fractionToText(Fraction(4, 2)), '2')
        self.assertEqual(fractionToText(None), 'null')

    def test_polynomialToJson(self):
        self.assertEqual(polynomialToJson(IntPolynomial([1, 0, -1])),
                         ['1', '0', '-1'])

    def test_seriesToJson(self):
        series = TruncatedSeries([1, Fraction(1, 2)], 2)
        self.assertEqual(seriesToJson(series), {
            'order': 2,
            'coeffs': [['1', '1'], ['1', '2'], ['0', '1']]
        })
        self.assertEqual(seriesToText(series), '[1, 1/2, 0]')

    def test_factorizationReportToJson(self):
        report = grassmannFactorizationCheck(0, 2, 'sign-fixed', 4)
        payload = factorizationReportToJson(report)
        self.assertEqual(
            set(payload),
            {'holds', 'lhs', 'rhs', 'first_mismatch_degree', 'ratio'}
        )
        self.assertFalse(payload['holds'])
        self.assertEqual(payload['first_mismatch_degree'], 2)
        self.assertEqual(payload['lhs']['order'], 4)
        self.assertEqual(payload['rhs'], seriesToJson(report.rhs))
        self.assertEqual(payload['ratio'],
                         {'num': ['1'], 'den': ['1', '0', '-1']})
        payload = factorizationReportToJson(
            grassmannFactorizationCheck(0, 3, 'sl-strict', 4)
        )
        self.assertTrue(payload['holds'])
        self.assertIsNone(payload['first_mismatch_degree'])
        self.assertEqual(payload['ratio'], {'num': ['1'], 'den': ['1']})

    def test_rationalToJson(self):
        self.assertEqual(
            rationalToJson(RationalFunction([1], [1, 0, -1])),
            {'num': ['1'], 'den': ['1', '0', '-1']}
        )

    def test_hnTypeToJson(self):
        self.assertEqual(hnTypeToJson(HNType([(1, 1), (1, -1)]), 1), {
            'blocks': [[1, 1], [1, -1]],
            'codim': 1,
            'polygon': [[0, 0], [1, 1], [2, 0]]
        })

    def test_traceToJson(self):
        result = TraceResult((('1 - q^-1', -1),), Fraction(2), True,
                             Fraction(2))
        self.assertEqual(traceToJson(result), {
            'convergent': True,
            'value': ['2', '1'],
            'factors': [{'text': '1 - q^-1', 'exp': -1}],
            'majorant': ['2', '1']
        })
        divergent = TraceResult((), None, False, None)
        self.assertIsNone(traceToJson(divergent)['value'])

    def test_toCoefficients(self):
        self.assertEqual(toCoefficients('1,-2,2'), (1, -2, 2))
        self.assertEqual(toCoefficients('1, 0, 2'), (1, 0, 2))
        with self.assertRaises(ValueError):
            toCoefficients('1,a')
        with self.assertRaises(TypeError):
            toCoefficients(102)

    def test_toKebab(self):
        self.assertEqual(toKebab('lPoly'), 'l-poly')
        self.assertEqual(toKebab('maxCodim'), 'max-codim')
        self.assertEqual(toKebab('order'), 'order')
        with self.assertRaises(TypeError):
            toKebab(1)


if __name__ == '__main__':
    unittest.main()
