"""6x6 building blocks, the block-tridiagonal matrix M_{k,N} and the direct
matrix I - u T_{k,N} in the same basis."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..algebra.qmode import QMode, SYMBOLIC
from ..algebra.upoly import UPoly
from ..quotient import Family, PointedChamber
from ..transfer import TruncationParams, assemble

logger = logging.getLogger(__name__)

Matrix = List[List[UPoly]]

SLOTS = ((Family.DELTA, 1), (Family.DELTA, 2), (Family.DELTA, 3),
         (Family.NABLA, 1), (Family.NABLA, 2), (Family.NABLA, 3))


def _identity6() -> Dict[Tuple[int, int], UPoly]:
    return {(i, i): UPoly.one() for i in range(1, 7)}


def _dense(entries: Dict[Tuple[int, int], UPoly]) -> Matrix:
    block = [[UPoly() for _ in range(6)] for _ in range(6)]
    for (i, j), value in entries.items():
        block[i - 1][j - 1] = value
    return block


@dataclass(frozen=True)
class BlockSpec:
    """The eight 6x6 blocks; `entry` indexes from 1, the dense lists from 0."""
    a1: Matrix
    a2: Matrix
    a3: Matrix
    a4: Matrix
    b: Matrix
    c: Matrix
    d: Matrix
    e: Matrix

    def entry(self, name: str, i: int, j: int) -> UPoly:
        return getattr(self, name)[i - 1][j - 1]


def block_matrices(q_mode: QMode = SYMBOLIC) -> BlockSpec:
    q = q_mode.q()
    u = UPoly.u()
    qu = u.scale(q)
    q1u = u.scale(q - 1)

    a4 = _identity6()
    a4[(4, 1)] = -u
    for pos in ((2, 1), (5, 4), (6, 5)):
        a4[pos] = -q1u
    a4[(2, 6)] = -qu

    a2 = dict(a4)
    a2[(1, 3)] = -qu
    a3 = dict(a4)
    a3[(3, 2)] = -qu
    a1 = dict(a3)
    a1[(1, 3)] = -qu

    return BlockSpec(
        a1=_dense(a1), a2=_dense(a2), a3=_dense(a3), a4=_dense(a4),
        b=_dense({(5, 3): -qu}),
        c=_dense({(1, 4): -u}),
        d=_dense({(6, 2): -qu}),
        e=_dense({(3, 5): -u}),
    )


@dataclass
class BlockTridiagonal:
    """M_{k,N}: N x N outer blocks, each a k x k inner block matrix of 6x6 blocks."""
    k: int
    N: int
    assembled: Matrix

    @property
    def size(self) -> int:
        return 6 * self.k * self.N

    def nonzero_count(self) -> int:
        return sum(1 for row in self.assembled for x in row if x)


def _place(target: Matrix, block: Matrix, row0: int, col0: int):
    for i in range(6):
        for j in range(6):
            if block[i][j]:
                target[row0 + i][col0 + j] = block[i][j]


def _offset(k: int, outer: int, inner: int) -> int:
    return 6 * (outer * k + inner)


def assemble_M(k: int, N: int, q_mode: QMode = SYMBOLIC) -> BlockTridiagonal:
    """
    Assemble M_{k,N}.

    The outer slot m-n = 0 carries a1 at n = 0 and a3 below it; the other
    outer slots carry a2 at n = 0 and a4 below it. Inner neighbours are
    coupled by b (above) and c (below); outer neighbours by d (above) and
    e (below) on the inner diagonal.
    """
    if k < 1 or N < 1:
        raise ValueError("k and N must be at least 1")
    table = block_matrices(q_mode)
    size = 6 * k * N
    m = [[UPoly() for _ in range(size)] for _ in range(size)]
    for outer in range(N):
        for inner in range(k):
            if outer == 0:
                diag = table.a1 if inner == 0 else table.a3
            else:
                diag = table.a2 if inner == 0 else table.a4
            at = _offset(k, outer, inner)
            _place(m, diag, at, at)
            if inner + 1 < k:
                _place(m, table.b, at, _offset(k, outer, inner + 1))
                _place(m, table.c, _offset(k, outer, inner + 1), at)
            if outer + 1 < N:
                _place(m, table.d, at, _offset(k, outer + 1, inner))
                _place(m, table.e, _offset(k, outer + 1, inner), at)
    logger.debug(f"Assembled M_{{{k},{N}}} of size {size} at {q_mode}")
    return BlockTridiagonal(k, N, m)


def block_basis(k: int, N: int) -> List[PointedChamber]:
    """Chambers in matrix order: outer index m-n, inner index n, then the six slots."""
    basis = []
    for outer in range(N):
        for n in range(k):
            for family, corner in SLOTS:
                basis.append(PointedChamber(family, n + outer, n, corner))
    return basis


def direct_matrix(k: int, N: int, q_mode: QMode = SYMBOLIC) -> Matrix:
    """I - u T_{k,N} with entry (row, col) = delta - u * w(col -> row)."""
    op = assemble(TruncationParams(k, N), q_mode)
    basis = block_basis(k, N)
    position = {c: i for i, c in enumerate(basis)}
    size = len(basis)
    m = [[UPoly() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        m[i][i] = UPoly.one()
    for src, row in zip(op.index, op.rows):
        col = position[src]
        for j, w in row:
            target = position[op.index[j]]
            m[target][col] = m[target][col] - UPoly.monomial(w, 1)
    return m
