import unittest

from chamberzeta.algebra import (QFraction, RationalFn, Series, UPoly, ratfn_normalize, series_exp,
                                 series_from_ratfn, series_log, series_log_derivative)
from chamberzeta.closed_form import count_generating_function, inverse_zeta, zeta_closed_form
from chamberzeta.errors import DivisionByZeroError, SeriesError
from .samples import *


class TestRationalFn(unittest.TestCase):
    def test_cancels_common_factor(self):
        f = upoly(1, -Q)
        r = RationalFn(f * upoly(1, Q), f * upoly(2, Q))
        self.assertEqual(r.num, upoly(1, Q))
        self.assertEqual(r.den, upoly(2, Q))

    def test_content_and_sign(self):
        r = ratfn_normalize(upoly(2 * Q, 4), upoly(-2, -2 * Q))
        self.assertEqual(r.num, upoly(-Q, -2))
        self.assertEqual(r.den, upoly(1, Q))

    def test_equality_of_forms(self):
        a = RationalFn(upoly(1, -Q)) / RationalFn(upoly(1, Q))
        common = upoly(Q - Q ** 2, Q ** 2 - Q)
        b = RationalFn(upoly(1, -Q) * common, upoly(1, Q) * common)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))

    def test_arith(self):
        x = RationalFn(upoly(0, 1), upoly(1, -1))
        self.assertEqual(x + 1, RationalFn(1, upoly(1, -1)))
        self.assertEqual(x * x.reciprocal(), 1)
        self.assertEqual(x ** -2, x.reciprocal() * x.reciprocal())
        self.assertTrue((x - x).num == 0)

    def test_zero_denominator(self):
        self.assertRaises(DivisionByZeroError, RationalFn, 1, 0)
        self.assertRaises(DivisionByZeroError, RationalFn(0).reciprocal)

    def test_value_at_zero(self):
        r = RationalFn(upoly(Q, 1), upoly(Q - 1, 1))
        self.assertEqual(r.value_at_zero(), QFraction(Q, Q - 1))

    def test_json(self):
        z = zeta_closed_form()
        self.assertEqual(RationalFn.from_json(z.to_json()), z)

    def test_canonical_form_is_stable(self):
        forms = [zeta_closed_form(), inverse_zeta(Q2), count_generating_function(),
                 RationalFn(upoly(2 * Q, 4), upoly(-2, -2 * Q))]
        for r in forms:
            self.assertEqual(RationalFn(r.num, r.den), r)
            self.assertEqual((RationalFn(r.num, r.den).num, RationalFn(r.num, r.den).den), (r.num, r.den))


class TestSeries(unittest.TestCase):
    def test_expansion_is_multiplicative(self):
        f = zeta_closed_form()
        g = RationalFn(upoly(1, Q), upoly(1, 0, -(Q ** 2)))
        for order in (0, 4, 9):
            self.assertEqual(series_from_ratfn(f * g, order),
                             series_from_ratfn(f, order) * series_from_ratfn(g, order))
        self.assertEqual(series_from_ratfn(f * f.reciprocal(), 6), Series.one(6))

    def test_zeta_expansion(self):
        s = series_from_ratfn(zeta_closed_form(Q2), 9)
        self.assertEqual(s.to_upoly(), upoly(*ZETA_Q2))
        self.assertEqual(str(s.truncate(6)), "1 + 4u^3 + 24u^6 + O(u^7)")

    def test_symbolic_coefficient(self):
        s = series_from_ratfn(zeta_closed_form(SYM), 6)
        self.assertTrue(s.is_integral())
        self.assertEqual(s.coefficient(6), QFraction(ZETA_U6))

    def test_inverse(self):
        s = Series.from_upoly(upoly(1, -Q), 5)
        self.assertEqual((s * s.inverse()), Series.one(5))
        self.assertRaises(SeriesError, Series.from_upoly(upoly(0, 1), 3).inverse)

    def test_mixed_orders_truncate(self):
        a = Series.one(3) + Series.one(7)
        self.assertEqual(a.order, 3)

    def test_exp_log(self):
        s = series_from_ratfn(zeta_closed_form(Q2), 9)
        self.assertEqual(series_exp(series_log(s)), s)
        self.assertRaises(SeriesError, series_exp, Series.one(2))
        self.assertRaises(SeriesError, Series([2], 2).log)

    def test_log_of_geometric(self):
        # log 1/(1-u) = sum u^n / n
        s = series_log(RationalFn(1, upoly(1, -1)), 4)
        self.assertEqual(s.coeffs, tuple([QFraction()] + [QFraction(1, n) for n in range(1, 5)]))

    def test_log_derivative_counts(self):
        g = series_log_derivative(zeta_closed_form(Q2), 6)
        self.assertEqual(g.to_upoly(), upoly(0, 0, 0, 12, 0, 0, 96))

    def test_pole_at_zero(self):
        f = RationalFn(1, upoly(0, 1))
        self.assertRaises(SeriesError, series_from_ratfn, f, 3)
        self.assertRaises(SeriesError, series_log_derivative, RationalFn(upoly(0, 1)), 3)

    def test_json(self):
        s = series_from_ratfn(RationalFn(1, upoly(2, -Q)), 3)
        self.assertFalse(s.is_integral())
        self.assertEqual(Series.from_json(s.to_json()), s)

    def test_specialize(self):
        s = series_from_ratfn(zeta_closed_form(SYM), 6)
        self.assertEqual(s.specialize(2), series_from_ratfn(zeta_closed_form(Q2), 6))


if __name__ == "__main__":
    unittest.main()
