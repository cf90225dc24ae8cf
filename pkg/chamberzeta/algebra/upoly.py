"""Polynomials in u with coefficients in Z[q].

Coefficients are stored densely, index = exponent of u, so every object of
the determinant machinery (degree at most a few dozen) stays cache friendly.
"""

from ..errors import DivisionByZeroError, GcdError, InexactDivisionError
from .qfrac import QFraction
from .qpoly import ONE, ZERO, QPoly, qpoly_gcd

VAR = 'u'


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _as_qpoly(c):
    if isinstance(c, QPoly):
        return c
    if isinstance(c, int):
        return QPoly.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient in Z[q]")


class UPoly:
    """Element of Z[q][u]; immutable after construction."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, QPoly)):
            coeffs = (coeffs,)
        self.coeffs = tuple(_trim([_as_qpoly(c) for c in coeffs]))

    @classmethod
    def constant(cls, value) -> 'UPoly':
        return cls((value,))

    @classmethod
    def one(cls) -> 'UPoly':
        return cls((ONE,))

    @classmethod
    def u(cls) -> 'UPoly':
        return cls((ZERO, ONE))

    @classmethod
    def monomial(cls, coeff, exponent: int) -> 'UPoly':
        return cls([ZERO] * exponent + [_as_qpoly(coeff)])

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (QPoly, int)):
            return cls((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> QPoly:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coefficient(self, exponent: int) -> QPoly:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return ZERO

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = UPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(self.coeffs)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = UPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = UPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = UPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UPoly()
        if len(other.coeffs) == 1:
            return self.scale(other.coeffs[0])
        if len(self.coeffs) == 1:
            return other.scale(self.coeffs[0])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result, base = UPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor) -> 'UPoly':
        factor = _as_qpoly(factor)
        if not factor:
            return UPoly()
        return UPoly([c * factor for c in self.coeffs])

    def shift(self, places: int) -> 'UPoly':
        """Multiply by u**places."""
        if not self.coeffs:
            return self
        return UPoly([ZERO] * places + list(self.coeffs))

    def truncate(self, order: int) -> 'UPoly':
        """Drop every term of degree above order."""
        return UPoly(self.coeffs[:order + 1])

    def content(self) -> QPoly:
        """gcd in Z[q] of all coefficients, positive leading coefficient."""
        g = ZERO
        for c in self.coeffs:
            if c:
                g = qpoly_gcd(g, c)
                if g == ONE:
                    break
        return g

    def primitive_part(self) -> 'UPoly':
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading.leading < 0:
            c = -c
        if c == ONE:
            return self
        return UPoly([a.exact_div(c) for a in self.coeffs])

    def pseudo_rem(self, other: 'UPoly') -> 'UPoly':
        if not other:
            raise DivisionByZeroError("pseudo-remainder by the zero polynomial")
        d, lc = other.degree, other.leading
        r = list(self.coeffs)
        while r and len(r) - 1 >= d:
            shift, lead = len(r) - 1 - d, r[-1]
            r = [lc * c for c in r]
            for i, c in enumerate(other.coeffs):
                r[i + shift] = r[i + shift] - lead * c
            _trim(r)
        return UPoly(r)

    def exact_div(self, other) -> 'UPoly':
        """Quotient in Z[q][u]; raises InexactDivisionError when other does not divide self."""
        other = UPoly._coerce(other)
        if not other:
            raise DivisionByZeroError("division by the zero polynomial")
        if not self.coeffs:
            return self
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return UPoly([a.exact_div(c) for a in self.coeffs])
        d, lc = other.degree, other.leading
        r = list(self.coeffs)
        if len(r) - 1 < d:
            raise InexactDivisionError(f"{other} does not divide {self}")
        quot = [ZERO] * (len(r) - d)
        while r and len(r) - 1 >= d:
            shift = len(r) - 1 - d
            c = r[-1].exact_div(lc)
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                if oc:
                    r[i + shift] = r[i + shift] - c * oc
            _trim(r)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return UPoly(quot)

    def divrem(self, other) -> tuple:
        """
        Division with remainder over Q(q), cleared back to Z[q][u]

        Returns:
            Tuple of (quot, rem, multiplier) with multiplier * self = other * quot + rem,
            deg rem < deg other and multiplier the least common denominator in Z[q]
        """
        other = UPoly._coerce(other)
        if not other:
            raise DivisionByZeroError("division by the zero polynomial")
        d = other.degree
        lc = QFraction(other.leading)
        rem = [QFraction(c, reduced=True) for c in self.coeffs]
        top = len(rem) - 1 - d
        quot = [QFraction()] * max(top + 1, 0)
        for shift in range(top, -1, -1):
            c = rem[shift + d] / lc
            if not c:
                continue
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                if oc:
                    rem[i + shift] = rem[i + shift] - c * oc
        rem = rem[:d] if top >= 0 else rem

        multiplier = ONE
        for f in quot + rem:
            if f.den != ONE:
                multiplier = multiplier.exact_div(qpoly_gcd(multiplier, f.den)) * f.den
        return (UPoly([f.num * multiplier.exact_div(f.den) for f in quot]),
                UPoly([f.num * multiplier.exact_div(f.den) for f in rem]),
                multiplier)

    def specialize(self, q_value: int) -> 'UPoly':
        return UPoly([QPoly.constant(c.evaluate(q_value)) for c in self.coeffs])

    def derivative(self) -> 'UPoly':
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def series_inverse(self, order: int) -> 'UPoly':
        """Inverse modulo u**(order + 1); the constant term must be 1 or -1."""
        c0 = self.coefficient(0)
        if c0 not in (ONE, -ONE):
            raise InexactDivisionError(f"constant term {c0} is not a unit of Z[q]")
        inv = [c0]
        for k in range(1, order + 1):
            acc = ZERO
            for i in range(1, min(k, self.degree) + 1):
                acc = acc + self.coeffs[i] * inv[k - i]
            inv.append(-acc * c0)
        return UPoly(inv)

    def __str__(self):
        if not self.coeffs:
            return '0'
        text = ''
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            power = '' if e == 0 else (VAR if e == 1 else f"{VAR}^{e}")
            if c.is_monomial():
                (coef, qexp), = c.terms()
                sign = '-' if coef < 0 else '+'
                body = str(QPoly.monomial(abs(coef), qexp))
                if body == '1' and power:
                    body = ''
                term = body + power
            else:
                sign, term = '+', (f"({c}){power}" if power else str(c))
            if not text:
                text = term if sign == '+' else f"-{term}"
            else:
                text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"UPoly('{self}')"

    def to_json(self) -> dict:
        return {"var": VAR, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> 'UPoly':
        if data.get("var") != VAR:
            raise ValueError(f"expected a polynomial in {VAR}")
        return cls([QPoly.from_json(c) for c in data["coeffs"]])


def poly_arith(lhs: UPoly, rhs: UPoly, op: str) -> UPoly:
    if op == 'add':
        return lhs + rhs
    if op == 'sub':
        return lhs - rhs
    if op == 'mul':
        return lhs * rhs
    raise ValueError(f"unknown operation '{op}'")


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """
    Greatest common divisor over Q(q)[u]

    Args:
        a: first polynomial
        b: second polynomial

    Returns:
        gcd with unit content in Z[q] and positive leading integer coefficient

    Raises:
        GcdError: if both arguments are zero
    """
    if not a and not b:
        raise GcdError("gcd of two zero polynomials")
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, r.primitive_part()
    if a.is_constant():
        return UPoly.one()
    return a
