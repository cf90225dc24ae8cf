"""Closed forms: the zeta function, its reciprocal and the gallery counts."""

from .algebra.qmode import QMode, SYMBOLIC
from .algebra.qpoly import ZERO, QPoly
from .algebra.ratfn import RationalFn
from .algebra.upoly import UPoly


def one_minus(coeff: QPoly, exponent: int) -> UPoly:
    """1 - coeff * u^exponent"""
    return UPoly.one() - UPoly.monomial(coeff, exponent)


def zeta_closed_form(q_mode: QMode = SYMBOLIC) -> RationalFn:
    q = q_mode.q()
    num = one_minus(q ** 4, 6) * one_minus(q ** 2, 3)
    den = one_minus(q ** 3, 6) * one_minus(q ** 3, 3)
    return RationalFn(num, den)


def inverse_zeta(q_mode: QMode = SYMBOLIC) -> RationalFn:
    return zeta_closed_form(q_mode).reciprocal()


def closed_count(n: int, q_mode: QMode = SYMBOLIC) -> QPoly:
    """N_n: 3q^{3r} - 3q^{2r} for n = 3r with 6 not dividing n,
    3q^{6r} - 9q^{4r} + 6q^{3r} for n = 6r, and 0 otherwise."""
    if n < 1:
        raise ValueError("n must be at least 1")
    q = q_mode.q()
    if n % 6 == 0:
        r = n // 6
        return 3 * q ** (6 * r) - 9 * q ** (4 * r) + 6 * q ** (3 * r)
    if n % 3 == 0:
        r = n // 3
        return 3 * q ** (3 * r) - 3 * q ** (2 * r)
    return ZERO


def count_generating_function(q_mode: QMode = SYMBOLIC) -> RationalFn:
    """sum_n N_n u^n as a rational function; equals u Z'(u) / Z(u)."""
    q = q_mode.q()
    total = RationalFn(0)
    for coeff, exponent, multiplicity in ((q ** 3, 3, 3), (q ** 2, 3, -3),
                                          (q ** 3, 6, 6), (q ** 4, 6, -6)):
        total = total + RationalFn(UPoly.monomial(coeff * multiplicity, exponent),
                                   one_minus(coeff, exponent))
    return total
