import unittest
from mstack.error import (
    ERROR_TEMPLATES,
    DomainError,
    Divergent,
    InvalidRank,
    NotCoprime,
    PoleAtZero,
    generateErrorMessage,
    generateTypeError,
    validateType,
    suggestValue
)

# pylint: disable=C0115, C0116, C0103


class Error(unittest.TestCase):

    def test_generateErrorMessage(self):
        self.assertEqual(
            generateErrorMessage('notCoprime', rank=2, degree=4),
            "Rank 2 and degree 4 must be coprime."
        )
        self.assertEqual(
            generateErrorMessage('valueError', 'suggestion',
                                 objectName='kind', value='bsl2',
                                 suggestion='bsl'),
            "Invalid value for 'kind': bsl2. Did you mean 'bsl'?"
        )
        with self.assertRaises(KeyError):
            generateErrorMessage('notCoprime', rank=2)

    def test_templates(self):
        for name, template in ERROR_TEMPLATES.items():
            self.assertIsInstance(template, str, name)

    def test_generateTypeError(self):
        self.assertEqual(
            generateTypeError('2', (int, float), 'q'),
            "Expected 'q' to be of type int or float, but got str."
        )
        self.assertEqual(
            generateTypeError(None, int, 'coefficients', items=True),
            "Items in 'coefficients' must be int, not NoneType."
        )

    def test_validateType(self):
        validateType(2, int, 'rank')
        validateType(2, int | str, 'rank')
        with self.assertRaises(TypeError):
            validateType('2', int, 'rank')
        with self.assertRaises(TypeError):
            validateType(True, int, 'rank')
        with self.assertRaises(ValueError):
            validateType(2.0, int, 'coefficients', items=True)

    def test_suggestValue(self):
        self.assertEqual(
            suggestValue('sl-strict', ('sign-fixed', 'sl-strict'),
                         'convention'),
            'sl-strict'
        )
        with self.assertRaisesRegex(ValueError, "Did you mean 'sign-fixed'"):
            suggestValue('sign-fix', ('as-printed', 'sign-fixed'),
                         'convention')
        with self.assertRaises(ValueError):
            suggestValue('zzz', ('as-printed', 'sign-fixed'), 'convention')

    def test_domainErrors(self):
        for errorClass in (Divergent, InvalidRank, NotCoprime, PoleAtZero):
            self.assertTrue(issubclass(errorClass, DomainError))
            self.assertTrue(issubclass(errorClass, ValueError))
        self.assertEqual(str(Divergent('requires s > r')),
                         'Divergent: requires s > r')


if __name__ == '__main__':
    unittest.main()
