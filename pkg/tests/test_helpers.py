# -*- coding: utf-8 -*-

from fractions import Fraction
from ballotforge import helpers
from unittest import TestCase
from mock import patch


class HelpersTest(TestCase):
    def test_string_to_bool(self):
        true_values = [True, 'YES', 'on', 'Y', 1, '1']
        false_values = [False, 'NO', 'off', 'N', 0, '0']
        none_values = [None, 'none', 10, 'bad value', '', 1.1, [1], {'a': 1}]
        for value in true_values:
            self.assertEqual(helpers.string_to_bool(value), True)
        for value in false_values:
            self.assertEqual(helpers.string_to_bool(value), False)
        for value in none_values:
            self.assertIsNone(helpers.string_to_bool(value))
        self.assertEqual(
            helpers.string_to_bool('bad value', 'default'),
            'default',
        )
        self.assertEqual(
            helpers.string_to_bool('YES', 'default'),
            True
        )

    def test_string_to_integer(self):
        values = {
            1: 1, 0: 0, 10: 10, -1: -1, 2.0: 2, 1.2: None,
            '1': 1, '0': 0, ' 10 ': 10, '-10': -10,
            '2a': None, 'a2': None, '1.5': None,
            None: None, '': None, 'test': None,
        }
        for value_in, value_out in values.items():
            self.assertEqual(helpers.string_to_integer(value_in), value_out)
        self.assertIsNone(helpers.string_to_integer(True))
        self.assertEqual(
            helpers.string_to_integer('bad_value', 10),
            10,
        )
        self.assertEqual(
            helpers.string_to_integer(1, 'default'),
            1,
        )

    def test_string_to_fraction(self):
        self.assertEqual(helpers.string_to_fraction('0.1'), Fraction(1, 10))
        self.assertEqual(helpers.string_to_fraction(0.1), Fraction(1, 10))
        self.assertEqual(helpers.string_to_fraction('1/3'), Fraction(1, 3))
        self.assertEqual(helpers.string_to_fraction(1), Fraction(1))
        self.assertIsNone(helpers.string_to_fraction(None))
        self.assertIsNone(helpers.string_to_fraction('tenth'))
        self.assertEqual(helpers.string_to_fraction('tenth', 0), 0)

    def test_string_to_list(self):
        self.assertEqual(helpers.string_to_list('lu, lur borda'),
                         ['lu', 'lur', 'borda'])
        self.assertEqual(helpers.string_to_list(('lu',)), ['lu'])
        self.assertEqual(helpers.string_to_list(''), [])
        self.assertIsNone(helpers.string_to_list(None))

    def test_ceil_share(self):
        self.assertEqual(helpers.ceil_share(0.1, 10), 1)
        self.assertEqual(helpers.ceil_share(0.1, 100), 10)
        self.assertEqual(helpers.ceil_share(0.2, 10), 2)
        self.assertEqual(helpers.ceil_share(0.15, 10), 2)
        self.assertEqual(helpers.ceil_share('0.2', 9), 2)
        self.assertEqual(helpers.ceil_share(0.1, 1000), 100)

    def internal_function(self):
        return 'value'

    @helpers.memoization
    def memoised_function(self):
        return self.internal_function()

    def test_memoisation(self):
        with patch('tests.test_helpers.HelpersTest.internal_function') as mock:
            mock.return_value = 'value'
            self.memoised_function()
            self.memoised_function()
            self.assertEqual(mock.call_count, 1)
        self.assertEqual(self.memoised_function(), 'value')

    @helpers.docstring_format('one', 2)
    def documented_method():
        """
        A = {0}
        B = {1}
        C_
        """
        pass

    def test_docstring_format(self):
        self.assertIn('A = one', self.documented_method.__doc__)
        self.assertIn('B = 2', self.documented_method.__doc__)
        self.assertIn(r'C\_', self.documented_method.__doc__)
