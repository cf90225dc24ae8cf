"""Scalar Schur-complement recursion for M_{k,N} and the determinant of A_{k,0}.

Only the entries at (6s, 6t-1) change from level to level, so the
recursion runs on a k x k array of polynomials a_{(s,t)} instead of
inverting 6k x 6k block matrices.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..algebra.qmode import QMode, SYMBOLIC
from ..algebra.ratfn import RationalFn
from ..algebra.upoly import UPoly
from ..closed_form import zeta_closed_form
from ..errors import MismatchError
from .blocks import assemble_M

logger = logging.getLogger(__name__)


class ASource(Enum):
    LEVEL = 'level'
    LIMIT = 'limit'
    FIXED_POINT = 'fixed'


@dataclass(frozen=True)
class SchurState:
    k: int
    level: int
    a_coeffs: Tuple[Tuple[UPoly, ...], ...]

    def a(self, s: int, t: int) -> UPoly:
        """a_{k,(s,t),level}, 1-indexed."""
        return self.a_coeffs[s - 1][t - 1]


def _mono(q_mode: QMode, coeff, exponent: int) -> UPoly:
    """coeff(q) * u^exponent for coeff given as a function of q."""
    return UPoly.monomial(coeff(q_mode.q()), exponent)


def _base_state(k: int, q_mode: QMode) -> SchurState:
    diag = _mono(q_mode, lambda q: -(q - 1), 1)
    rows = tuple(tuple(diag if s == t else UPoly() for t in range(k)) for s in range(k))
    return SchurState(k, 1, rows)


def _step(state: SchurState, q_mode: QMode) -> SchurState:
    k = state.k
    diag = _mono(q_mode, lambda q: -(q - 1), 1)
    shift = _mono(q_mode, lambda q: q ** 3, 4)
    rows = []
    for s in range(1, k + 1):
        first = _mono(q_mode, lambda q: -(q ** 2) * (q - 1), 2 * s + 2)
        if s == 1:
            first = first + diag
        for j in range(1, k + 1):
            a = state.a(s, j)
            if a:
                first = first + a * _mono(q_mode, lambda q: q ** 3 * (q - 1), 2 * j + 4)
        row = [first]
        for t in range(2, k + 1):
            entry = shift * state.a(s, t - 1)
            if s == t:
                entry = entry + diag
            row.append(entry)
        rows.append(tuple(row))
    return SchurState(k, state.level + 1, tuple(rows))


def schur_iterate(k: int, levels: int, q_mode: QMode = SYMBOLIC) -> SchurState:
    if k < 1 or levels < 1:
        raise ValueError("k and levels must be at least 1")
    state = _base_state(k, q_mode)
    while state.level < levels:
        state = _step(state, q_mode)
    return state


def schur_matrix(k: int, N: int, q_mode: QMode = SYMBOLIC) -> List[List[UPoly]]:
    """A_{k,N}: A_k with its (6s, 6t-1) entries replaced by a_{k,(s,t),N}; det equals det M_{k,N}."""
    matrix = assemble_M(k, 1, q_mode).assembled
    state = schur_iterate(k, N, q_mode)
    for s in range(1, k + 1):
        for t in range(1, k + 1):
            matrix[6 * s - 1][6 * t - 2] = state.a(s, t)
    return matrix


def a_limits(s: int, q_mode: QMode = SYMBOLIC) -> RationalFn:
    """Limit of a_{k,(s,1)} as both the level and k tend to infinity."""
    if s < 1:
        raise ValueError("s must be at least 1")
    q = q_mode.q()
    one = UPoly.one()
    escape = one - UPoly.monomial(q ** 4, 6)
    back = one - UPoly.monomial(q ** 3, 6)
    if s == 1:
        head = UPoly.monomial(q - 1, 1) + UPoly.monomial(q ** 2 * (q - 1), 4)
        return RationalFn(-(back * head), escape)
    num = (-(UPoly.monomial(q ** 2 * (q - 1), 2 * s + 2) * back)
           - UPoly.monomial(q ** 3 * (q - 1) ** 2, 2 * s + 5))
    return RationalFn(num, escape)


def a_fixed_point(k: int, s: int, q_mode: QMode = SYMBOLIC) -> RationalFn:
    """Limit of a_{k,(s,1),level} as the level tends to infinity, k fixed."""
    if not 1 <= s <= k:
        raise ValueError("need 1 <= s <= k")
    q = q_mode.q()
    den = UPoly.one()
    for j in range(1, k + 1):
        den = den - UPoly.monomial(q ** (3 * j) * (q - 1), 6 * j)
    if s == 1:
        num = -(UPoly.monomial(q - 1, 1) + UPoly.monomial(q ** 2 * (q - 1), 4))
        return RationalFn(num, den)
    num = -UPoly.monomial(q ** 2 * (q - 1), 2 * s + 2)
    for j in range(s, k + 1):
        num = num - UPoly.monomial((q - 1) ** 2 * q ** (3 + 3 * (j - s)), 6 * j - 4 * s + 5)
    return RationalFn(num, den)


def _a_values(k: int, q_mode: QMode, a_source: ASource, levels: Optional[int]) -> List[RationalFn]:
    if a_source is ASource.LEVEL:
        if levels is None:
            raise ValueError("the level source needs a number of levels")
        state = schur_iterate(k, levels, q_mode)
        return [RationalFn(state.a(s, 1)) for s in range(1, k + 1)]
    if a_source is ASource.LIMIT:
        return [a_limits(s, q_mode) for s in range(1, k + 1)]
    return [a_fixed_point(k, s, q_mode) for s in range(1, k + 1)]


def _geometric_tail(first: RationalFn, second: RationalFn) -> RationalFn:
    """Sum of a geometric series given its first two terms."""
    return first / (1 - second / first)


def det_A_k0(k: Optional[int], q_mode: QMode = SYMBOLIC, a_source: ASource = ASource.LIMIT,
             levels: Optional[int] = None) -> RationalFn:
    """
    Determinant of A_{k,0} from the reduced 6x6 form

    Args:
        k: block order, or None for the limit k -> infinity
        q_mode: symbolic or numeric q
        a_source: where the a_{(s,1)} values come from
        levels: Schur level when a_source is LEVEL

    Returns:
        (1 - q^2(q-1)u^3)(1 + sum_i q^{4i-5}u^{4i-5}a_{(i,1)})
            + q^3u^3 a_{(1,1)} sum_i q^{2i-2}(q-1)u^{3i-1}

    Only the a_{(s,1)} values enter. With the LEVEL source this equals det M_{k,N}
    for k = 1 only: for k >= 2 the entries a_{(s,t)} with t >= 2 are dropped, and
    at k = 2, N = 1 the u^12 coefficient already differs. The FIXED_POINT source
    gives det(I - uT_k) of the full-width depth-k operator for every k.
    """
    q = q_mode.q()
    triangle = RationalFn(UPoly.one() - UPoly.monomial(q ** 2 * (q - 1), 3))
    corner = RationalFn(UPoly.monomial(q ** 3, 3))

    def deep(i: int, a: RationalFn) -> RationalFn:
        return a * UPoly.monomial(q ** (4 * i - 5), 4 * i - 5)

    def chain(i: int) -> RationalFn:
        return RationalFn(UPoly.monomial(q ** (2 * i - 2) * (q - 1), 3 * i - 1))

    if k is None:
        if a_source is not ASource.LIMIT:
            raise ValueError("k = infinity needs the limit source")
        deep_sum = _geometric_tail(deep(2, a_limits(2, q_mode)), deep(3, a_limits(3, q_mode)))
        chain_sum = _geometric_tail(chain(1), chain(2))
        a11 = a_limits(1, q_mode)
    else:
        if k < 1:
            raise ValueError("k must be at least 1")
        values = _a_values(k, q_mode, a_source, levels)
        deep_sum = RationalFn(0)
        for i in range(2, k + 1):
            deep_sum = deep_sum + deep(i, values[i - 1])
        chain_sum = RationalFn(0)
        for i in range(1, 2 * k):
            chain_sum = chain_sum + chain(i)
        a11 = values[0]

    return triangle * (1 + deep_sum) + corner * a11 * chain_sum


def det_of_IminusuT(q_mode: QMode = SYMBOLIC) -> RationalFn:
    """det(I - uT) from the limit pipeline, checked against 1/Z."""
    pipeline = det_A_k0(None, q_mode, ASource.LIMIT)
    expected = zeta_closed_form(q_mode).reciprocal()
    if pipeline != expected:
        raise MismatchError(f"limit pipeline gives {pipeline}, closed form gives {expected}")
    logger.info(f"det(I - uT) at {q_mode} = {pipeline}")
    return pipeline
