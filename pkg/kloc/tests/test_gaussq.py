import pickle
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from kloc.errors import DivisionByZero, ParseError
from kloc.gaussq import (GaussianRational, I, MINUS_ONE, ONE, ZERO, gq_add, gq_conj, gq_div,
                         gq_format, gq_inv, gq_key, gq_mul, gq_neg, gq_norm, gq_parse, gq_sub)

parts = st.fractions(min_value=-50, max_value=50, max_denominator=30)
scalars = st.builds(GaussianRational, parts, parts)
nonzero = scalars.filter(bool)


def gq(text):
    return gq_parse(text)


class TestArithmetic(unittest.TestCase):

    def test_add(self):
        half = GaussianRational(Fraction(1, 2))
        self.assertEqual(gq_add(half, half), ONE)
        self.assertEqual(gq_add(gq('3/2-1/4i'), ZERO), gq('3/2-1/4i'))
        self.assertEqual(gq_add(gq('1+i'), gq('1-i')), GaussianRational(2))

    def test_mul(self):
        self.assertEqual(gq_mul(I, I), MINUS_ONE)
        self.assertEqual(gq_mul(gq('2-3i'), ONE), gq('2-3i'))
        self.assertEqual(gq_mul(gq('1+i'), gq('1-i')), GaussianRational(2))

    def test_inv(self):
        self.assertEqual(gq_inv(GaussianRational(2)), GaussianRational(Fraction(1, 2)))
        self.assertEqual(gq_inv(I), -I)
        self.assertEqual(gq_inv(gq('1+i')), gq('1/2-1/2i'))
        self.assertEqual(gq_mul(gq('1+i'), gq('1/2-1/2i')), ONE)

    def test_inv_of_zero(self):
        with self.assertRaises(DivisionByZero):
            gq_inv(ZERO)
        with self.assertRaises(ZeroDivisionError):
            ONE / ZERO

    def test_norm(self):
        self.assertEqual(gq_norm(gq('2+i')), 5)
        self.assertEqual(gq_norm(ZERO), 0)
        self.assertEqual(gq_norm(GaussianRational(Fraction(1, 2))), Fraction(1, 4))

    def test_other_operations(self):
        self.assertEqual(gq_sub(gq('1+i'), I), ONE)
        self.assertEqual(gq_neg(gq('1-i')), gq('-1+i'))
        self.assertEqual(gq_div(ONE, gq('1+i')), gq('1/2-1/2i'))
        self.assertEqual(gq_conj(gq('3/2-1/4i')), gq('3/2+1/4i'))
        self.assertEqual(gq('2') ** 3, GaussianRational(8))
        self.assertEqual(I ** -1, -I)
        self.assertEqual(2 - I, gq('2-i'))
        self.assertEqual(1 / GaussianRational(4), gq('1/4'))

    def test_order(self):
        values = [gq('1'), gq('-i'), gq('1/2+i'), gq('1/2'), gq('-3')]
        ordered = sorted(values, key=gq_key)
        self.assertEqual([gq_format(v) for v in ordered], ['-3', '-i', '1/2', '1/2+i', '1'])

    def test_mixed_equality_and_hash(self):
        self.assertEqual(GaussianRational(3), 3)
        self.assertEqual(GaussianRational(Fraction(1, 2)), Fraction(1, 2))
        self.assertEqual(hash(GaussianRational(3)), hash(3))
        self.assertNotEqual(I, 1)
        self.assertEqual(len({ONE, GaussianRational(1, 0), gq('1')}), 1)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            I.re = 5

    def test_pickle(self):
        z = gq('3/2-1/4i')
        self.assertEqual(pickle.loads(pickle.dumps(z)), z)

    def test_rejects_floats(self):
        with self.assertRaises(TypeError):
            GaussianRational(0.5)


class TestFieldAxioms(unittest.TestCase):

    @settings(max_examples=200, deadline=None)
    @given(scalars, scalars, scalars)
    def test_ring_laws(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a - a, ZERO)

    @settings(max_examples=200, deadline=None)
    @given(nonzero)
    def test_inverse(self, a):
        self.assertEqual(a * a.inverse(), ONE)
        self.assertEqual(a.inverse().inverse(), a)

    @settings(max_examples=200, deadline=None)
    @given(scalars, scalars)
    def test_norm_is_multiplicative(self, a, b):
        self.assertEqual(gq_norm(a * b), gq_norm(a) * gq_norm(b))
        self.assertEqual(a * a.conjugate(), GaussianRational(gq_norm(a)))


class TestParseFormat(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(gq('3/2-1/4i'), GaussianRational(Fraction(3, 2), Fraction(-1, 4)))
        self.assertEqual(gq('i'), GaussianRational(0, 1))
        self.assertEqual(gq('-2'), GaussianRational(-2))
        self.assertEqual(gq('-1/4i'), GaussianRational(0, Fraction(-1, 4)))
        self.assertEqual(gq('0'), ZERO)
        self.assertEqual(gq('4/6'), GaussianRational(Fraction(2, 3)))

    def test_format(self):
        cases = {'0': ZERO, '-1': MINUS_ONE, '3/2': GaussianRational(Fraction(3, 2)), 'i': I,
                 '-i': -I, '-1/4i': GaussianRational(0, Fraction(-1, 4)),
                 '3/2-1/4i': GaussianRational(Fraction(3, 2), Fraction(-1, 4)),
                 '1+i': GaussianRational(1, 1), '2+3i': GaussianRational(2, 3)}
        for text, value in cases.items():
            self.assertEqual(gq_format(value), text)

    def test_malformed(self):
        for text in ['', ' 1', '1 ', '1+', 'i+1', '1/0', '1/', '2+3', 'ii', '1.5', '--1', 'j']:
            with self.assertRaises(ParseError, msg=text):
                gq(text)

    def test_error_position(self):
        with self.assertRaises(ParseError) as cm:
            gq('1/0')
        self.assertEqual(cm.exception.position, 2)
        self.assertEqual(cm.exception.to_dict()['code'], 'parse')

    def test_long_integers(self):
        z = GaussianRational(Fraction(10 ** 5000, 3), -(10 ** 4500 + 7))
        text = '1' + '0' * 5000 + '/3-1' + '0' * 4499 + '7i'
        self.assertEqual(gq_format(z), text)
        self.assertEqual(gq_parse(text), z)
        self.assertEqual(gq_parse('9' * 5000), 10 ** 5000 - 1)
        self.assertEqual(gq_format(GaussianRational(-(10 ** 2000))), '-1' + '0' * 2000)

    @settings(max_examples=300, deadline=None)
    @given(scalars)
    def test_round_trip(self, z):
        self.assertEqual(gq_parse(gq_format(z)), z)


if __name__ == "__main__":
    unittest.main()
