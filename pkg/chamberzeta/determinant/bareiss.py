"""Exact determinants of matrices over Z[q][u]."""

import logging
from typing import Dict, List

from ..algebra.qpoly import ONE
from ..algebra.upoly import UPoly
from ..errors import InexactDivisionError

logger = logging.getLogger(__name__)


def _sparse_rows(matrix: List[List[UPoly]]) -> List[Dict[int, UPoly]]:
    size = len(matrix)
    rows = []
    for row in matrix:
        if len(row) != size:
            raise ValueError("determinant of a non-square matrix")
        rows.append({j: x for j, x in enumerate(row) if x})
    return rows


def _find_pivot(rows, k, accept) -> int:
    for i in range(k, len(rows)):
        x = rows[i].get(k)
        if x is not None and accept(x):
            return i
    return -1


def det_exact(matrix: List[List[UPoly]]) -> UPoly:
    """
    Determinant by fraction-free (Bareiss) elimination

    Args:
        matrix: square list of rows with UPoly entries

    Returns:
        det(matrix) in Z[q][u]

    Raises:
        InexactDivisionError: if an elimination step leaves the ring
    """
    n = len(matrix)
    if n == 0:
        return UPoly.one()
    rows = _sparse_rows(matrix)
    sign, prev = 1, UPoly.one()

    for k in range(n):
        p = _find_pivot(rows, k, bool)
        if p < 0:
            return UPoly()
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pivot_row = rows[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = rows[i]
            factor = row.pop(k, None)
            if factor is None:
                if pivot == prev:
                    continue
                rows[i] = {j: (x * pivot).exact_div(prev) for j, x in row.items()}
                continue
            updated = {}
            for j in set(row) | set(pivot_row):
                if j <= k:
                    continue
                elt = row.get(j, UPoly()) * pivot - factor * pivot_row.get(j, UPoly())
                if elt:
                    updated[j] = elt.exact_div(prev)
            rows[i] = updated
        prev = pivot

    det = prev if sign > 0 else -prev
    logger.debug(f"det of {n}x{n} matrix has degree {det.degree}")
    return det


def _is_unit(x: UPoly) -> bool:
    c0 = x.coefficient(0)
    return c0 == ONE or c0 == -ONE


def det_series(matrix: List[List[UPoly]], order: int) -> UPoly:
    """det(matrix) modulo u^(order+1), eliminating with pivots whose constant term is +-1."""
    n = len(matrix)
    if order < 0:
        raise ValueError("order must be nonnegative")
    rows = [{j: x.truncate(order) for j, x in row.items()} for row in _sparse_rows(matrix)]
    rows = [{j: x for j, x in row.items() if x} for row in rows]
    det = UPoly.one()

    for k in range(n):
        p = _find_pivot(rows, k, _is_unit)
        if p < 0:
            raise InexactDivisionError(f"no unit pivot in column {k}")
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        pivot_row = rows[k]
        pivot = pivot_row[k]
        inverse = pivot.series_inverse(order)
        det = (det * pivot).truncate(order)
        for i in range(k + 1, n):
            factor = rows[i].pop(k, None)
            if factor is None:
                continue
            factor = (factor * inverse).truncate(order)
            row = rows[i]
            for j, x in pivot_row.items():
                if j <= k:
                    continue
                elt = (row.get(j, UPoly()) - factor * x).truncate(order)
                if elt:
                    row[j] = elt
                else:
                    row.pop(j, None)
    return det
