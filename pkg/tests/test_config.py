import unittest
import tempfile
from pathlib import Path
from mstack.config import load

# pylint: disable=C0115, C0116, C0103


class Config(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        # Create config test file
        cls.tempDir = tempfile.TemporaryDirectory()
        cls.path = Path(cls.tempDir.name) / 'test.cfg'
        cls.path.write_text(
            '[series]\n'
            'order = 12\n'
            '\n'
            '[test]\n'
            'flag = true\n'
            'ratio = 0.5\n'
            'grid = (1, 2.5, 3)\n'
            'names = (a, b)\n'
            'name = sl-strict\n'
            'empty =\n'
            'derived = ${series:order}\n',
            encoding='utf-8'
        )

    @classmethod
    def tearDownClass(cls):
        # Delete config test file
        cls.tempDir.cleanup()

    def test_load_package(self):
        config = load()
        self.assertEqual(config['series']['order'], 40)
        self.assertEqual(config['rings']['convention'], 'sign-fixed')
        self.assertEqual(config['weil']['tolerance'], 1e-6)
        self.assertEqual(config['trace']['degreeCutoff'], 30)
        self.assertEqual(config['pointcount']['height'], 60)
        self.assertEqual(config['verify']['genera'], (0, 1, 2, 3))
        self.assertEqual(config['cli.shortFlags']['lPoly'], '-l')

    def test_load_path(self):
        config = load(self.path)
        self.assertEqual(config['series']['order'], 12)
        self.assertIs(config['test']['flag'], True)
        self.assertEqual(config['test']['ratio'], 0.5)
        self.assertEqual(config['test']['grid'], (1, 2.5, 3))
        self.assertEqual(config['test']['names'], ('a', 'b'))
        self.assertEqual(config['test']['name'], 'sl-strict')
        self.assertIsNone(config['test']['empty'])
        self.assertEqual(config['test']['derived'], 12)
        self.assertEqual(load(str(self.path)), config)

    def test_load_missing(self):
        with self.assertRaises(FileNotFoundError):
            load(Path(self.tempDir.name) / 'missing.cfg')


if __name__ == '__main__':
    unittest.main()
