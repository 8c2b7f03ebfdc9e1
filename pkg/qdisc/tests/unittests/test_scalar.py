from fractions import Fraction
from unittest import TestCase

from qdisc.algebra.scalar import (ONE, TSeries, ZERO, eval_numeric, format_qscalar, format_tseries, parse_rational, q,
                                  q_power, qnumber, qpochhammer, qscalar_arith, s, s_power, to_qscalar,
                                  tseries_from_rational)
from qdisc.errors import NotAPowerSeriesError, PoleError, ScalarDivisionError, SeriesOrderError
from qdisc.tests.utils import S0


class TestQScalar(TestCase):
    def test_powers(self):
        self.assertEqual(s**2, q)
        self.assertEqual(q, q_power(1))
        self.assertEqual(s**-4, q_power(-2))
        self.assertEqual(s**3, s_power(3))
        self.assertEqual(ONE, q_power(0))

    def test_to_qscalar(self):
        self.assertEqual(ONE + ONE, to_qscalar(2))
        self.assertEqual(ONE / 2, to_qscalar(Fraction(1, 2)))
        self.assertIs(q, to_qscalar(q))

        with self.assertRaises(TypeError):
            to_qscalar('q')

    def test_arith(self):
        self.assertEqual(q * q, qscalar_arith(q, q, 'mul'))
        self.assertEqual(ONE, qscalar_arith(q, q, 'div'))
        self.assertEqual(ZERO, qscalar_arith(q, q, 'sub'))

        with self.assertRaises(ScalarDivisionError):
            qscalar_arith(q, ZERO, 'div')

        # Still a ZeroDivisionError for callers that only know the builtin
        with self.assertRaises(ZeroDivisionError):
            qscalar_arith(ONE, ZERO, 'div')

        with self.assertRaises(ValueError):
            qscalar_arith(q, q, 'pow')

    def test_qpochhammer(self):
        a = q_power(3)

        self.assertEqual(ONE, qpochhammer(a, 2, 0))
        self.assertEqual((ONE - a) * (ONE - a * q_power(2)), qpochhammer(a, 2, 2))
        self.assertEqual((ONE - a) * (ONE - a * q_power(-2)), qpochhammer(a, -2, 2))

        # (q^-2k; q^2)_j vanishes past j = k
        self.assertFalse(qpochhammer(q_power(-6), 2, 4))
        self.assertTrue(qpochhammer(q_power(-6), 2, 3))

        with self.assertRaises(ValueError):
            qpochhammer(a, 2, -1)

    def test_qnumber(self):
        self.assertEqual(ZERO, qnumber(0))
        self.assertEqual(ONE, qnumber(1))
        self.assertEqual(ONE + q_power(2) + q_power(4), qnumber(3))
        self.assertEqual(ONE + q_power(-2), qnumber(2, -2))

    def test_format_qscalar(self):
        self.assertEqual('1', format_qscalar(ONE))
        self.assertEqual('0', format_qscalar(ZERO))
        self.assertEqual('s^4', format_qscalar(q_power(2)))
        self.assertEqual('-s^4 + 1', format_qscalar(ONE - q_power(2)))
        self.assertEqual('1/s^2', format_qscalar(q_power(-1)))
        self.assertEqual('7/10', format_qscalar(to_qscalar(Fraction(7, 10))))
        self.assertEqual('1/(s - 1)', format_qscalar(ONE / (s - 1)))

    def test_eval_numeric(self):
        self.assertEqual(Fraction(49, 100), eval_numeric(q, S0))
        self.assertEqual(Fraction(100, 49), eval_numeric(q_power(-1), S0))
        self.assertEqual(Fraction(149, 100), eval_numeric((ONE - q_power(2)) / (ONE - q), S0))

        with self.assertRaises(PoleError):
            eval_numeric(ONE / (s - 1), Fraction(1))

    def test_parse_rational(self):
        self.assertEqual(Fraction(7, 10), parse_rational('7/10'))
        self.assertEqual(Fraction(-3), parse_rational(' -3 '))

        for text in ('x', '1/0', ''):
            with self.assertRaises(ValueError):
                parse_rational(text)


class TestTSeries(TestCase):
    def test_truncation(self):
        series = TSeries.from_coeffs([1, 2, 3, 4], 1)

        self.assertEqual(1, series.order)
        self.assertEqual((ONE, to_qscalar(2)), series.coeffs)
        self.assertEqual(ZERO, series.coefficient(5))

    def test_geometric_series(self):
        # 1 / (1 - t)
        series = tseries_from_rational([1], [1, -1], 3)
        self.assertEqual((ONE,) * 4, series.coeffs)

        # (1 - q^2) / (1 - t q^2)
        series = tseries_from_rational([ONE - q_power(2)], [ONE, -q_power(2)], 2)
        self.assertEqual((ONE - q_power(2), (ONE - q_power(2)) * q_power(2), (ONE - q_power(2)) * q_power(4)),
                         series.coeffs)

    def test_not_a_power_series(self):
        with self.assertRaises(NotAPowerSeriesError):
            tseries_from_rational([1], [0, 1], 2)

    def test_arithmetic(self):
        one_minus_t = TSeries.from_coeffs([1, -1], 3)
        inverse = one_minus_t.inverse()

        self.assertEqual((ONE,) * 4, inverse.coeffs)
        self.assertEqual(TSeries.constant(1, 3), one_minus_t * inverse)
        self.assertEqual(TSeries.zero(3), one_minus_t - one_minus_t)
        self.assertTrue((one_minus_t + (-one_minus_t)).is_zero())
        self.assertEqual(TSeries.from_coeffs([q, -q], 3), one_minus_t.scale(q))

    def test_inverse_needs_a_constant_term(self):
        with self.assertRaises(ScalarDivisionError):
            TSeries.from_coeffs([0, 1], 2).inverse()

    def test_order_mismatch(self):
        with self.assertRaises(SeriesOrderError):
            TSeries.constant(1, 1) + TSeries.constant(1, 2)

        # SeriesOrderError is also a ValueError
        with self.assertRaises(ValueError):
            TSeries.constant(1, 1) * TSeries.constant(1, 2)

    def test_evaluate(self):
        series = TSeries.from_coeffs([q, ONE], 1)
        self.assertEqual([Fraction(49, 100), Fraction(1)], series.evaluate(S0))

    def test_format(self):
        self.assertEqual('0', format_tseries(TSeries.zero(2)))
        self.assertEqual('1 + s^2*t^2', format_tseries(TSeries.from_coeffs([1, 0, q], 2)))
        self.assertEqual('1 + (-s^4 + 1)*t', format_tseries(TSeries.from_coeffs([1, ONE - q_power(2)], 1)))
