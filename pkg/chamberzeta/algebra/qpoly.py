"""Polynomials in q with arbitrary-precision integer coefficients.

The polynomial a_0 + a_1 q + ... + a_n q^n corresponds to the tuple
(a_0, a_1, ..., a_n). The last element is nonzero, the zero polynomial
is the empty tuple.
"""

import math
from functools import reduce

from ..errors import DivisionByZeroError, GcdError, InexactDivisionError

VAR = 'q'


def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class QPoly:
    """Element of the ring Z[q]; immutable after construction."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = tuple(_trim([int(c) for c in coeffs]))

    @classmethod
    def constant(cls, value: int) -> 'QPoly':
        return cls((value,))

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> 'QPoly':
        return cls([0] * exponent + [coeff])

    @classmethod
    def q(cls) -> 'QPoly':
        return cls((0, 1))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return cls((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term)
        return hash(self.coeffs)

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return QPoly([c * a for a in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result, base = QPoly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def content(self) -> int:
        """Nonnegative gcd of the integer coefficients."""
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self) -> 'QPoly':
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return QPoly([a // c for a in self.coeffs])

    def pseudo_rem(self, other: 'QPoly') -> 'QPoly':
        if not other:
            raise DivisionByZeroError("pseudo-remainder by the zero polynomial")
        d, lc = other.degree, other.leading
        r = list(self.coeffs)
        while r and len(r) - 1 >= d:
            shift, lead = len(r) - 1 - d, r[-1]
            r = [lc * c for c in r]
            for i, c in enumerate(other.coeffs):
                r[i + shift] -= lead * c
            _trim(r)
        return QPoly(r)

    def exact_div(self, other) -> 'QPoly':
        """Quotient in Z[q]; raises InexactDivisionError if other does not divide self."""
        other = QPoly._coerce(other)
        if not other:
            raise DivisionByZeroError("division by the zero polynomial")
        if not self.coeffs:
            return self
        d, lc = other.degree, other.leading
        r = list(self.coeffs)
        if len(r) - 1 < d:
            raise InexactDivisionError(f"{other} does not divide {self}")
        quot = [0] * (len(r) - d)
        while r and len(r) - 1 >= d:
            shift = len(r) - 1 - d
            c, rem = divmod(r[-1], lc)
            if rem:
                raise InexactDivisionError(f"{other} does not divide {self}")
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                r[i + shift] -= c * oc
            _trim(r)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return QPoly(quot)

    def evaluate(self, q_value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * q_value + c
        return result

    def terms(self):
        """Nonzero (coefficient, exponent) pairs, highest exponent first."""
        return [(c, e) for e, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        if not self.coeffs:
            return '0'
        parts = []
        for c, e in self.terms():
            sign = '-' if c < 0 else '+'
            body = _monomial_text(abs(c), e)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"QPoly('{self}')"

    def to_json(self) -> dict:
        return {"var": VAR, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> 'QPoly':
        if data.get("var") != VAR:
            raise ValueError(f"expected a polynomial in {VAR}")
        return cls([int(c) for c in data["coeffs"]])


def _monomial_text(magnitude: int, exponent: int) -> str:
    if exponent == 0:
        return str(magnitude)
    power = VAR if exponent == 1 else f"{VAR}^{exponent}"
    return power if magnitude == 1 else f"{magnitude}{power}"


ZERO = QPoly()
ONE = QPoly.constant(1)


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """
    Greatest common divisor in Z[q]

    Args:
        a: first polynomial
        b: second polynomial

    Returns:
        gcd with positive leading coefficient

    Raises:
        GcdError: if both arguments are zero
    """
    if not a and not b:
        raise GcdError("gcd of two zero polynomials")
    if not a:
        return b if b.leading > 0 else -b
    if not b:
        return a if a.leading > 0 else -a
    c = math.gcd(a.content(), b.content())
    if a.is_constant() or b.is_constant():
        return QPoly.constant(c)
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, r.primitive_part()
    return a.primitive_part() * c


def qpoly_eval(p: QPoly, q_value: int) -> int:
    return p.evaluate(q_value)
