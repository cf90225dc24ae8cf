"""Fundamental domain of the quotient: sector vertices, type-1 pointed chambers
and the weights of one-step gallery transitions between them."""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .algebra.qpoly import ONE, ZERO, QPoly
from .errors import ChamberError, InvalidGalleryError

logger = logging.getLogger(__name__)

CHAMBER_PATTERN = re.compile(r'^\s*([cd])\s*:\s*(\d+)\s*,\s*(\d+)\s*,\s*([123])\s*$')


class Family(Enum):
    DELTA = 'c'
    NABLA = 'd'


@dataclass(frozen=True)
class Vertex:
    """Grid vertex x_{m,n} of the sector m >= n >= 0."""
    m: int
    n: int

    def __post_init__(self):
        if not self.m >= self.n >= 0:
            raise ChamberError(f"vertex ({self.m},{self.n}) lies outside the sector m >= n >= 0")

    def __str__(self):
        return f"x{self.m},{self.n}"


@dataclass(frozen=True)
class PointedChamber:
    """Chamber c_{m,n,i} (DELTA) or d_{m,n,i} (NABLA) with corner i in 1..3."""
    family: Family
    m: int
    n: int
    corner: int

    def __post_init__(self):
        if not self.m >= self.n >= 0:
            raise ChamberError(f"chamber label ({self.m},{self.n}) lies outside the sector")
        if self.corner not in (1, 2, 3):
            raise ChamberError(f"corner must be 1, 2 or 3, got {self.corner}")

    @property
    def label(self) -> Tuple[int, int]:
        return self.m, self.n

    def sort_key(self) -> tuple:
        return self.n, self.m, 0 if self.family is Family.DELTA else 1, self.corner

    def __str__(self):
        return f"{self.family.value}:{self.m},{self.n},{self.corner}"

    @classmethod
    def parse(cls, text: str) -> 'PointedChamber':
        match = CHAMBER_PATTERN.match(text)
        if not match:
            raise ChamberError(f"cannot parse chamber '{text}', expected e.g. 'c:2,1,3'")
        family, m, n, corner = match.groups()
        return cls(Family(family), int(m), int(n), int(corner))


def delta(m: int, n: int, corner: int) -> PointedChamber:
    return PointedChamber(Family.DELTA, m, n, corner)


def nabla(m: int, n: int, corner: int) -> PointedChamber:
    return PointedChamber(Family.NABLA, m, n, corner)


def vertex_type(v: Vertex) -> int:
    return (v.m + v.n) % 3


def chamber_vertices(c: PointedChamber) -> Tuple[Vertex, Vertex, Vertex]:
    m, n = c.m, c.n
    if c.family is Family.DELTA:
        base = (Vertex(m, n), Vertex(m + 1, n), Vertex(m + 1, n + 1))
    else:
        base = (Vertex(m + 1, n), Vertex(m + 1, n + 1), Vertex(m + 2, n + 1))
    shift = c.corner - 1
    return base[shift:] + base[:shift]


def _neighbours(v: Vertex) -> List[Tuple[int, int]]:
    m, n = v.m, v.n
    if m > n > 0:
        return [(m + 1, n), (m - 1, n), (m, n + 1), (m, n - 1), (m + 1, n + 1), (m - 1, n - 1)]
    if m > n == 0:
        return [(m + 1, n), (m - 1, n), (m, n + 1), (m + 1, n + 1)]
    if m == n > 0:
        return [(m + 1, n), (m, n - 1), (m + 1, n + 1), (m - 1, n - 1)]
    return [(1, 0), (1, 1)]


def vertices_adjacent(v: Vertex, w: Vertex) -> bool:
    return (w.m, w.n) in _neighbours(v)


def _listed_transitions(src: PointedChamber) -> List[Tuple[PointedChamber, QPoly]]:
    """Every adjacency of the weight table leaving src, the zero-weight one included."""
    m, n, q = src.m, src.n, QPoly.q()
    if src.family is Family.DELTA:
        if src.corner == 1:
            return [(delta(m, n, 2), q - 1), (nabla(m, n, 1), ONE)]
        if src.corner == 2:
            return [(delta(m, n, 3), q)] if m == n else [(nabla(m - 1, n, 3), q)]
        return [(delta(m, n, 1), q)] if n == 0 else [(nabla(m - 1, n - 1, 2), q)]
    if src.corner == 1:
        return [(delta(m + 1, n + 1, 1), ONE), (nabla(m, n, 2), q - 1)]
    if src.corner == 2:
        return [(delta(m + 1, n, 3), ONE), (nabla(m, n, 3), q - 1)]
    # no lift of d_{m,n,3} -> d_{m,n,1} is tailless
    return [(delta(m, n, 2), q), (nabla(m, n, 1), ZERO)]


def weight(src: PointedChamber, dst: PointedChamber) -> QPoly:
    for target, w in _listed_transitions(src):
        if target == dst:
            return w
    return ZERO


def out_transitions(src: PointedChamber) -> List[Tuple[PointedChamber, QPoly]]:
    return [(target, w) for target, w in _listed_transitions(src) if w]


def out_weight(src: PointedChamber) -> QPoly:
    total = ZERO
    for _, w in out_transitions(src):
        total = total + w
    return total


@dataclass(frozen=True)
class Box:
    """Chambers with n <= depth and m - n <= width, both families, all corners."""
    depth: int
    width: int

    def __post_init__(self):
        if self.depth < 0 or self.width < 0:
            raise ValueError("box bounds must be nonnegative")

    def contains(self, c: PointedChamber) -> bool:
        return c.n <= self.depth and c.m - c.n <= self.width

    @property
    def size(self) -> int:
        return 6 * (self.depth + 1) * (self.width + 1)


def enumerate_box(box: Box) -> List[PointedChamber]:
    chambers = []
    for n in range(box.depth + 1):
        for m in range(n, n + box.width + 1):
            for family in (Family.DELTA, Family.NABLA):
                for corner in (1, 2, 3):
                    chambers.append(PointedChamber(family, m, n, corner))
    return chambers


def is_type_one(c: PointedChamber) -> bool:
    types = [vertex_type(v) for v in chamber_vertices(c)]
    return types[1] == (types[0] + 1) % 3 and types[2] == (types[1] + 1) % 3


def steps_coherent(src: PointedChamber, dst: PointedChamber) -> bool:
    """The second and third vertices of src are the first and second of dst."""
    a, b = chamber_vertices(src), chamber_vertices(dst)
    return a[1] == b[0] and a[2] == b[1]


def gallery_panel_types(gallery: List[PointedChamber]) -> List[int]:
    """
    Types of the vertices replaced along a gallery

    Args:
        gallery: consecutive pointed chambers

    Returns:
        vertex_type of the first vertex of every chamber but the last

    Raises:
        InvalidGalleryError: if a step has weight zero
    """
    types = []
    for src, dst in zip(gallery, gallery[1:]):
        if not weight(src, dst):
            raise InvalidGalleryError(f"step {src} -> {dst} has weight zero")
        types.append(vertex_type(chamber_vertices(src)[0]))
    return types
