import random
import unittest

from chamberzeta.algebra import RationalFn, UPoly, poly_arith, poly_divrem, poly_gcd
from chamberzeta.errors import DivisionByZeroError, GcdError, InexactDivisionError
from .samples import *


class TestUPoly(unittest.TestCase):
    def test_arith(self):
        a = upoly(1, -Q)
        b = upoly(1, Q)
        self.assertEqual(poly_arith(a, b, 'mul'), upoly(1, 0, -(Q ** 2)))
        self.assertEqual(poly_arith(a, b, 'add'), 2)
        self.assertEqual(poly_arith(a, b, 'sub'), upoly(0, -2 * Q))
        self.assertRaises(ValueError, poly_arith, a, b, 'pow')

    def test_ring_axioms(self):
        rng = random.Random(3)

        def sample():
            return UPoly([qpoly(*(rng.randint(-3, 3) for _ in range(3))) for _ in range(rng.randint(0, 4))])

        for _ in range(25):
            a, b, c = sample(), sample(), sample()
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a + b, b + a)
            self.assertEqual(a - a, 0)

    def test_str(self):
        self.assertEqual(str(DET_A1.specialize(2)), "1 - 4u^3 - 8u^6")
        self.assertEqual(str(xpoly((1, 0), (-(Q ** 3), 3), (-(Q ** 3), 6), (Q ** 6, 9))),
                         "1 - q^3u^3 - q^3u^6 + q^6u^9")
        self.assertEqual(str(upoly(0, Q - 1)), "(q - 1)u")
        self.assertEqual(str(UPoly()), "0")

    def test_shift_truncate(self):
        p = upoly(1, 2, 3)
        self.assertEqual(p.shift(2), upoly(0, 0, 1, 2, 3))
        self.assertEqual(p.truncate(1), upoly(1, 2))

    def test_exact_div(self):
        a = upoly(1, -Q)
        b = upoly(1, Q, Q ** 2)
        self.assertEqual((a * b).exact_div(b), a)
        self.assertRaises(InexactDivisionError, b.exact_div, a)
        self.assertRaises(DivisionByZeroError, a.exact_div, UPoly())

    def test_series_inverse(self):
        p = upoly(1, -Q)
        inverse = p.series_inverse(4)
        self.assertEqual(inverse, upoly(1, Q, Q ** 2, Q ** 3, Q ** 4))
        self.assertEqual((p * inverse).truncate(4), 1)
        self.assertRaises(InexactDivisionError, upoly(2, 1).series_inverse, 3)

    def test_derivative(self):
        self.assertEqual(upoly(5, Q, Q ** 2).derivative(), upoly(Q, 2 * Q ** 2))

    def test_json(self):
        self.assertEqual(UPoly.from_json(DET_A1.to_json()), DET_A1)
        self.assertEqual(DET_A1.to_json()["var"], "u")


class TestDivrem(unittest.TestCase):
    def test_integral(self):
        a = upoly(1, 0, -(Q ** 2))
        quot, rem = poly_divrem(a, upoly(1, Q))
        self.assertEqual(quot, upoly(1, -Q))
        self.assertEqual(rem, 0)

    def test_with_remainder(self):
        quot, rem = poly_divrem(upoly(3, 1, 1), upoly(0, 1))
        self.assertEqual(quot, upoly(1, 1))
        self.assertEqual(rem, 3)

    def test_exact_quotients(self):
        self.assertEqual(poly_divrem(upoly(1, 0, -1), upoly(1, -1)), (upoly(1, 1), UPoly()))
        self.assertEqual(poly_divrem(upoly(1, 0, -(Q ** 2)), upoly(1, -Q)), (upoly(1, Q), UPoly()))
        self.assertEqual(poly_divrem(upoly(0, 1), upoly(0, 0, 1)), (UPoly(), upoly(0, 1)))

    def test_over_fraction_field(self):
        quot, rem = poly_divrem(upoly(0, 0, 1), upoly(1, Q))
        self.assertEqual(quot, RationalFn(upoly(-1, Q), Q ** 2))
        self.assertEqual(rem, RationalFn(1, Q ** 2))
        self.assertEqual(poly_divrem(upoly(0, 1), upoly(1, 2)), (RationalFn(1, 2), RationalFn(-1, 2)))

    def test_division_identity(self):
        cases = ((upoly(0, 0, 1), upoly(1, Q)), (upoly(0, 1), upoly(1, 2)), (upoly(1, 0, 1), upoly(0, 2)),
                 (upoly(3, Q, Q ** 2, 1), upoly(Q - 1, 0, Q)), (DET_A1, upoly(1, 0, 0, -(Q ** 2))))
        for dividend, divisor in cases:
            quot, rem = poly_divrem(dividend, divisor)
            self.assertEqual(divisor * quot + rem, dividend, f"{dividend} by {divisor}")
            self.assertLess(RationalFn(rem).num.degree, divisor.degree)

    def test_cleared_multiplier(self):
        quot, rem, multiplier = upoly(0, 0, 1).divrem(upoly(1, Q))
        self.assertEqual((quot, rem, multiplier), (upoly(-1, Q), upoly(1), Q ** 2))

    def test_zero_divisor(self):
        self.assertRaises(DivisionByZeroError, poly_divrem, upoly(1), UPoly())


class TestPolyGcd(unittest.TestCase):
    def test_common_factor(self):
        f = upoly(1, -Q)
        a = f * upoly(1, Q ** 2)
        b = f * upoly(2, 0, Q) * 3
        self.assertEqual(poly_gcd(a, b), upoly(-1, Q))

    def test_coprime(self):
        self.assertEqual(poly_gcd(upoly(1, -Q), upoly(1, Q)), 1)

    def test_zero_zero(self):
        self.assertRaises(GcdError, poly_gcd, UPoly(), UPoly())


if __name__ == "__main__":
    unittest.main()
