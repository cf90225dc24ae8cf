"""Truncated formal power series in u with coefficients in Q(q).

A Series of order O carries the coefficients of u^0 .. u^O. Binary
operations on series of different orders truncate to the smaller order.
"""

from ..errors import SeriesError
from .qfrac import QFraction
from .qpoly import QPoly
from .ratfn import RationalFn
from .upoly import UPoly


class Series:
    """Power series truncated after u^order."""

    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise SeriesError("series order must be nonnegative")
        coeffs = [c if isinstance(c, QFraction) else QFraction(c) for c in coeffs][:order + 1]
        coeffs += [QFraction()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> 'Series':
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> 'Series':
        return cls([1], order)

    @classmethod
    def from_upoly(cls, p: UPoly, order: int) -> 'Series':
        return cls(list(p.coeffs), order)

    def coefficient(self, exponent: int) -> QFraction:
        return self.coeffs[exponent]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> 'Series':
        return Series(self.coeffs, min(order, self.order))

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QPoly, QFraction)):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(order + 1):
            acc = QFraction()
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, order)

    __rmul__ = __mul__

    def inverse(self) -> 'Series':
        a0 = self.coeffs[0]
        if not a0:
            raise SeriesError("constant term is not invertible")
        inv0 = a0.reciprocal()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = QFraction()
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out, self.order)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    def log_derivative(self) -> 'Series':
        """u * s'(u) / s(u)."""
        u_times_derivative = Series([c * i for i, c in enumerate(self.coeffs)], self.order)
        return u_times_derivative / self

    def log(self) -> 'Series':
        if self.coeffs[0] != QFraction(1):
            raise SeriesError("log needs constant term 1")
        g = self.log_derivative()
        return Series([QFraction()] + [g.coeffs[n] / n for n in range(1, self.order + 1)],
                      self.order)

    def exp(self) -> 'Series':
        """Exponential via the convolution n E_n = sum_k k s_k E_{n-k}."""
        if self.coeffs[0]:
            raise SeriesError("exp needs a zero constant term")
        out = [QFraction(1)]
        for n in range(1, self.order + 1):
            acc = QFraction()
            for k in range(1, n + 1):
                if self.coeffs[k] and out[n - k]:
                    acc = acc + self.coeffs[k] * k * out[n - k]
            out.append(acc / n)
        return Series(out, self.order)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def to_upoly(self) -> UPoly:
        """The truncated polynomial; every coefficient must lie in Z[q]."""
        return UPoly([c.to_qpoly() for c in self.coeffs])

    def specialize(self, q_value: int) -> 'Series':
        return Series([QFraction(c.num.evaluate(q_value), c.den.evaluate(q_value))
                       for c in self.coeffs], self.order)

    def __str__(self):
        if self.is_integral():
            body = str(self.to_upoly())
        else:
            terms = [f"({c})u^{i}" for i, c in enumerate(self.coeffs) if c]
            body = ' + '.join(terms) or '0'
        return f"{body} + O(u^{self.order + 1})"

    def __repr__(self):
        return f"Series('{self}')"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "num_coeffs": [c.num.to_json() for c in self.coeffs],
            "den_coeffs": [c.den.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> 'Series':
        coeffs = [QFraction(QPoly.from_json(n), QPoly.from_json(d))
                  for n, d in zip(data["num_coeffs"], data["den_coeffs"])]
        return cls(coeffs, data["order"])


def series_from_ratfn(f: RationalFn, order: int) -> Series:
    if not f.den.coefficient(0):
        raise SeriesError(f"denominator {f.den} vanishes at u = 0")
    return Series.from_upoly(f.num, order) / Series.from_upoly(f.den, order)


def series_exp(s: Series) -> Series:
    return s.exp()


def series_log(f, order: int = None) -> Series:
    """Logarithm of a series or rational function with constant term 1."""
    if isinstance(f, RationalFn):
        f = series_from_ratfn(f, order)
    return f.log()


def series_log_derivative(f: RationalFn, order: int) -> Series:
    s = series_from_ratfn(f, order)
    if not s.coefficient(0):
        raise SeriesError("log-derivative needs f(0) != 0")
    return s.log_derivative()
