import io
import unittest
from contextlib import redirect_stderr, redirect_stdout
from mstack.stdUtils import getSummary, verbosePrint, progressIter

# pylint: disable=C0115, C0116, C0103


class StdUtils(unittest.TestCase):

    def test_getSummary(self):
        def showcase():
            """Provide an example.

            More text.

            """
        self.assertEqual(getSummary(showcase.__doc__), 'Provide an example.')
        self.assertIsNone(getSummary(None))

    def test_verbosePrint(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            verbosePrint('shown', True)
            verbosePrint('hidden', False)
        self.assertEqual(stdout.getvalue(), '')
        self.assertEqual(stderr.getvalue(), 'shown\n')

    def test_progressIter(self):
        items = [1, 2, 3]
        self.assertIs(progressIter(items, False, False), items)
        self.assertIs(progressIter(items, True, True), items)
        stderr = io.StringIO()
        with redirect_stderr(stderr):
            self.assertEqual(list(progressIter(items, True, False)), items)


if __name__ == '__main__':
    unittest.main()
