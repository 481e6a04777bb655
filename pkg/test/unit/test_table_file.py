from gyro_cayley.builtins import BUILTIN_NAMES, builtin_text, load_builtin
from gyro_cayley.serialize.table_file import (TableFile, format_table_file,
                                              legend_names, parse_table_file,
                                              read_table_file)
from gyro_cayley.util.errors import ParseError, VerificationError
import pathlib
import tempfile
from unittest import TestCase


SMALL = """\
# the group Z3
gyrotable 3
[addition]
0 1 2
1 2 0
2 0 1
"""


def _uncommented(text):
    return ''.join(line for line in text.splitlines(keepends=True)
                   if not line.startswith('#'))


class TestParse(TestCase):
    def test_addition_only(self):
        doc = read_table_file(SMALL)
        self.assertEqual(doc.order, 3)
        self.assertIsNone(doc.gyrations)
        self.assertIsNone(doc.name)
        self.assertEqual(doc.table.entry(1, 2), 0)

    def test_builtin_docs(self):
        doc = read_table_file(builtin_text('g15'))
        self.assertEqual(doc.name, 'g15')
        self.assertEqual(sorted(doc.legend), ['A', 'B', 'C', 'D'])
        self.assertEqual(doc.gyrations.gyr(1, 3), doc.legend['A'])

    def test_legend_after_gyrations(self):
        text = ('gyrotable 2\n[addition]\n0 1\n1 0\n'
                '[gyration]\nI e\nid X\n[legend]\nX = ()\n')
        table, gyrations = parse_table_file(text)
        self.assertEqual(table.order, 2)
        self.assertTrue(gyrations.gyr(1, 1).is_identity())

    def test_inline_rows(self):
        text = ('gyrotable 2\n[addition]\n0 1\n1 0\n'
                '[gyration]\nI ; ()\nI ; I\n')
        _, gyrations = parse_table_file(text)
        self.assertTrue(gyrations.gyr(0, 1).is_identity())

    def _error(self, text):
        with self.assertRaises(ParseError) as ctx:
            read_table_file(text)
        return ctx.exception

    def test_bad_entry(self):
        err = self._error('gyrotable 2\n[addition]\n0 1\n1 x\n')
        self.assertEqual((err.line, err.column), (4, 3))
        err = self._error('gyrotable 2\n[addition]\n0 1\n1 2\n')
        self.assertEqual((err.line, err.column), (4, 3))

    def test_bad_row_length(self):
        err = self._error('gyrotable 2\n[addition]\n0 1 0\n')
        self.assertEqual(err.line, 3)

    def test_missing_rows(self):
        err = self._error('gyrotable 3\n[addition]\n0 1 2\n')
        self.assertEqual(err.line, 4)

    def test_bad_header(self):
        err = self._error('\n\ntable 3\n')
        self.assertEqual((err.line, err.column), (3, 1))
        self._error('')

    def test_non_ascii_digits(self):
        err = self._error('gyrotable 2\n[addition]\n0 1\n1 ²\n')
        self.assertEqual((err.line, err.column), (4, 3))
        err = self._error('gyrotable ²\n')
        self.assertEqual((err.line, err.column), (1, 11))
        err = self._error('gyrotable 2\n[addition]\n0 1\n1 ٠\n')
        self.assertEqual((err.line, err.column), (4, 3))

    def test_sections(self):
        self._error('gyrotable 1\n[addition]\n0\n[extra]\n')
        self._error('gyrotable 1\n[addition]\n0\n[addition]\n')
        self._error('gyrotable 1\n0\n')

    def test_legend_errors(self):
        base = 'gyrotable 2\n[addition]\n0 1\n1 0\n[legend]\n'
        self._error(base + 'I = (0 1)\n')
        self._error(base + 'A = ()\nA = ()\n')
        err = self._error(base + 'A = (0 2)\n')
        self.assertEqual(err.line, 6)

    def test_unknown_gyration_name(self):
        err = self._error('gyrotable 2\n[addition]\n0 1\n1 0\n'
                          '[gyration]\nI I\nI Q\n')
        self.assertEqual((err.line, err.column), (7, 3))


class TestFormat(TestCase):
    def test_builtins_are_normalized(self):
        for name in BUILTIN_NAMES:
            group = load_builtin(name)
            text = format_table_file(group.table, group.gyrations, name)
            self.assertEqual(text, _uncommented(builtin_text(name)))

    def test_idempotent(self):
        for name in BUILTIN_NAMES:
            for inline in [False, True]:
                first = format_table_file(*parse_table_file(
                    builtin_text(name)), inline=inline)
                second = format_table_file(*parse_table_file(first),
                                           inline=inline)
                self.assertEqual(first, second)

    def test_inline(self):
        group = load_builtin('g8')
        text = format_table_file(group.table, group.gyrations,
                                 inline=True)
        self.assertNotIn('[legend]', text)
        self.assertIn('I ; (1 6)(2 5) ; (1 6)(2 5)', text)
        self.assertTrue(text.endswith('\n'))

    def test_addition_only(self):
        table, _ = parse_table_file(SMALL)
        self.assertEqual(format_table_file(table),
                         'gyrotable 3\n\n[addition]\n0 1 2\n1 2 0\n2 0 1\n')

    def test_legend_names(self):
        names = legend_names(27)
        self.assertEqual(names[:9], list('ABCDEFGHJ'))
        self.assertNotIn('I', names)
        self.assertEqual(names[24], 'Z')
        self.assertEqual(names[25:], ['P25', 'P26'])


class TestTableFile(TestCase):
    def test_save_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = str(pathlib.Path(tmp) / 'g16.gyro')
            TableFile(path).save(load_builtin('g16'))
            group = TableFile(path).load()
            self.assertEqual(group.name, 'g16')
            self.assertEqual(group.table, load_builtin('g16').table)
            self.assertEqual(group.gyrations,
                             load_builtin('g16').gyrations)
            renamed = TableFile(path, name='other').load()
            self.assertEqual(renamed.name, 'other')

    def test_load_rejects_non_gyrogroup(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = pathlib.Path(tmp) / 'bad.gyro'
            path.write_text('gyrotable 2\n[addition]\n0 1\n1 1\n')
            with self.assertRaises(VerificationError):
                TableFile(str(path)).load()
