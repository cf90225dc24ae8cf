"""Reduced elements of the fraction field Q(q)."""

from fractions import Fraction

from ..errors import DivisionByZeroError, InexactDivisionError
from .qpoly import ONE, QPoly, qpoly_gcd


class QFraction:
    """num/den with gcd(num, den) = 1 in Z[q] and positive leading coefficient in den."""

    __slots__ = ('num', 'den')

    def __init__(self, num=0, den=1, reduced=False):
        num = QPoly._coerce(num)
        den = QPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QFraction expects QPoly or int parts")
        if not den:
            raise DivisionByZeroError("zero denominator")
        if not num:
            num, den = QPoly(), ONE
        elif not reduced and den != ONE:
            g = qpoly_gcd(num, den)
            if den.leading < 0:
                g = -g
            if g != ONE:
                num, den = num.exact_div(g), den.exact_div(g)
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, QFraction):
            return other
        if isinstance(other, (QPoly, int)):
            return cls(other, reduced=True)
        return NotImplemented

    def is_integral(self) -> bool:
        return self.den == ONE

    def to_qpoly(self) -> QPoly:
        if not self.is_integral():
            raise InexactDivisionError(f"{self} is not in Z[q]")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = QFraction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __neg__(self):
        return QFraction(-self.num, self.den, reduced=True)

    def __add__(self, other):
        other = QFraction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return QFraction(self.num + other.num, reduced=True)
        if self.den == other.den:
            return QFraction(self.num + other.num, self.den)
        return QFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = QFraction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QFraction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return QFraction(self.num * other.num, reduced=True)
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> 'QFraction':
        if not self.num:
            raise DivisionByZeroError("reciprocal of zero")
        return QFraction(self.den, self.num)

    def __truediv__(self, other):
        other = QFraction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return QFraction._coerce(other) * self.reciprocal()

    def evaluate(self, q_value: int):
        return Fraction(self.num.evaluate(q_value), self.den.evaluate(q_value))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QFraction('{self}')"
