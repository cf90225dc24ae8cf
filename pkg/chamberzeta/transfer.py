"""Truncated transfer operators T_{k,N} as sparse matrices over Z[q], and traces of their powers."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from .algebra.qmode import QMode, SYMBOLIC
from .algebra.qpoly import ONE, ZERO, QPoly
from .parallel import map_chunks
from .quotient import Box, PointedChamber, enumerate_box, out_transitions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncationParams:
    """Keep chambers with n <= depth_k - 1 and m - n <= width_N - 1."""
    depth_k: int
    width_N: int

    def __post_init__(self):
        if self.depth_k < 1 or self.width_N < 1:
            raise ValueError("depth_k and width_N must be at least 1")

    @property
    def box(self) -> Box:
        return Box(self.depth_k - 1, self.width_N - 1)


def stabilization_params(n: int) -> TruncationParams:
    """Box that holds every closed gallery of length n."""
    return TruncationParams(n + 1, 2 * n + 2)


class SparseOperator:
    """Matrix of a truncated transfer operator, one sparse row per source chamber."""

    def __init__(self, index: List[PointedChamber], rows: List[List[Tuple[int, QPoly]]], q_mode: QMode):
        self.index = tuple(index)
        self.rows = tuple(tuple(row) for row in rows)
        self.q_mode = q_mode
        self.position = {c: i for i, c in enumerate(self.index)}
        self.labels = tuple(c.label for c in self.index)

    def __len__(self):
        return len(self.index)

    def entry(self, src: PointedChamber, dst: PointedChamber) -> QPoly:
        i, j = self.position[src], self.position[dst]
        for col, w in self.rows[i]:
            if col == j:
                return w
        return ZERO

    def row_sum(self, i: int) -> QPoly:
        total = ZERO
        for _, w in self.rows[i]:
            total = total + w
        return total

    def to_json(self) -> dict:
        return {
            "q": self.q_mode.label,
            "rows": {
                str(c): [[str(self.index[j]), w.to_json()] for j, w in row]
                for c, row in zip(self.index, self.rows)
            },
        }


def assemble(params: TruncationParams, q_mode: QMode = SYMBOLIC) -> SparseOperator:
    box = params.box
    index = enumerate_box(box)
    position = {c: i for i, c in enumerate(index)}
    rows = []
    for c in index:
        row = []
        for target, w in out_transitions(c):
            j = position.get(target)
            if j is not None:
                row.append((j, q_mode.specialize(w)))
        rows.append(row)
    logger.debug(f"Assembled operator on {len(index)} chambers for {params}")
    return SparseOperator(index, rows, q_mode)


def _chebyshev(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def closed_walk_weight(op: SparseOperator, start: int, n: int) -> QPoly:
    """Weighted number of closed walks of length n at one basis chamber.

    A step moves the chamber label (m, n) by at most one in each coordinate,
    so walks farther from the start than the remaining steps are dropped.
    """
    home = op.labels[start]
    frontier = {start: ONE}
    for step in range(n):
        remaining = n - step - 1
        nxt = {}
        for i, acc in frontier.items():
            for j, w in op.rows[i]:
                if _chebyshev(op.labels[j], home) > remaining:
                    continue
                nxt[j] = nxt.get(j, ZERO) + acc * w
        frontier = {j: v for j, v in nxt.items() if v}
        if not frontier:
            return ZERO
    return frontier.get(start, ZERO)


def _trace_chunk(starts: List[int], op: SparseOperator, n: int) -> QPoly:
    total = ZERO
    for i in starts:
        total = total + closed_walk_weight(op, i, n)
    return total


def trace_power(op: SparseOperator, n: int, workers: int = 1) -> QPoly:
    """
    Trace of the n-th power without forming the power

    Args:
        op: assembled operator
        n: positive power
        workers: process pool size; 1 runs in-process

    Returns:
        Tr(op^n) in Z[q] (a constant in numeric mode)
    """
    if n < 1:
        raise ValueError("trace_power needs n >= 1")
    total = ZERO
    for part in map_chunks(_trace_chunk, range(len(op)), workers, op, n):
        total = total + part
    return total


def trace_stabilized(n: int, q_mode: QMode = SYMBOLIC, workers: int = 1) -> QPoly:
    params = stabilization_params(n)
    op = assemble(params, q_mode)
    value = trace_power(op, n, workers)
    logger.debug(f"Tr(T^{n}) at {q_mode} = {value}")
    return value
