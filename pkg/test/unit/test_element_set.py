from gyro_cayley.util.element_set import (format_element_set,
                                          parse_element_set)
from gyro_cayley.util.errors import ParseError
from unittest import TestCase


class TestElementSet(TestCase):
    def test_single(self):
        self.assertEqual(parse_element_set('8'), [8])
        self.assertEqual(parse_element_set(8), [8])

    def test_list(self):
        self.assertEqual(parse_element_set('1,3'), [1, 3])
        self.assertEqual(parse_element_set(' 1 , 3 '), [1, 3])
        self.assertEqual(parse_element_set([3, 1]), [3, 1])

    def test_expand_range(self):
        self.assertEqual(parse_element_set('8-11'), [8, 9, 10, 11])
        self.assertEqual(parse_element_set('1,8-9,12'), [1, 8, 9, 12])
        self.assertEqual(parse_element_set('4-4'), [4])

    def test_duplicates_kept(self):
        self.assertEqual(parse_element_set('1,1-2'), [1, 1, 2])

    def test_empty(self):
        self.assertEqual(parse_element_set(None), [])
        self.assertEqual(parse_element_set(''), [])
        self.assertEqual(parse_element_set('  '), [])

    def test_errors(self):
        with self.assertRaises(ParseError) as ctx:
            parse_element_set('1,,3')
        self.assertEqual(ctx.exception.column, 3)
        self.assertIn('column 3', str(ctx.exception))
        with self.assertRaises(ParseError):
            parse_element_set(',1')
        with self.assertRaises(ParseError) as ctx:
            parse_element_set('1,x')
        self.assertEqual(ctx.exception.column, 3)
        with self.assertRaises(ParseError):
            parse_element_set('5-2')
        with self.assertRaises(ParseError):
            parse_element_set('-1')

    def test_format(self):
        self.assertEqual(format_element_set([1, 8, 9]), '1,8,9')
        self.assertEqual(format_element_set([]), '')
