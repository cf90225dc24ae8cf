from ..errors import DivisionByZeroError
from .qfrac import QFraction
from .qpoly import ONE, QPoly, qpoly_gcd
from .upoly import UPoly, poly_gcd


def _canonical(num: UPoly, den: UPoly) -> tuple:
    if not den:
        raise DivisionByZeroError("rational function with zero denominator")
    if not num:
        return UPoly(), UPoly.one()
    g = poly_gcd(num, den)
    if not g.is_constant():
        num, den = num.exact_div(g), den.exact_div(g)
    c = qpoly_gcd(num.content(), den.content())
    if c != ONE:
        num, den = num.exact_div(c), den.exact_div(c)
    if den.leading.leading < 0:
        num, den = -num, -den
    return num, den


class RationalFn:
    """Reduced quotient num/den of polynomials in Z[q][u]."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        num = UPoly._coerce(num)
        den = UPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFn expects UPoly, QPoly or int parts")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (UPoly, QPoly, int)):
            return cls(other)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.den.is_constant() and self.den.coefficient(0) == ONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RationalFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __add__(self, other):
        other = RationalFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = RationalFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> 'RationalFn':
        if not self.num:
            raise DivisionByZeroError("reciprocal of the zero rational function")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        other = RationalFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return RationalFn._coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RationalFn(self.num ** exponent, self.den ** exponent)

    def value_at_zero(self) -> QFraction:
        """f(0) as an element of Q(q)."""
        return QFraction(self.num.coefficient(0), self.den.coefficient(0))

    def specialize(self, q_value: int) -> 'RationalFn':
        return RationalFn(self.num.specialize(q_value), self.den.specialize(q_value))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFn('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> 'RationalFn':
        return cls(UPoly.from_json(data["num"]), UPoly.from_json(data["den"]))


def ratfn_normalize(num: UPoly, den: UPoly) -> RationalFn:
    return RationalFn(num, den)


def poly_divrem(dividend: UPoly, divisor: UPoly) -> tuple:
    """
    Quotient and remainder of dividend by divisor over Q(q)

    Both parts are UPoly when they lie in Z[q][u]; otherwise both come back as
    RationalFn with a constant denominator in Z[q].

    Raises:
        DivisionByZeroError: if divisor is zero
    """
    quot, rem, multiplier = dividend.divrem(divisor)
    if multiplier == ONE:
        return quot, rem
    return RationalFn(quot, multiplier), RationalFn(rem, multiplier)
