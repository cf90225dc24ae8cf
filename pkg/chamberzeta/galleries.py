"""Brute-force enumeration of closed type-1 galleries, their shift classes,
weighted counts and truncated Euler products."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra.qfrac import QFraction
from .algebra.qmode import QMode, SYMBOLIC
from .algebra.qpoly import ONE, ZERO, QPoly
from .algebra.series import Series
from .errors import SeriesError
from .parallel import map_chunks
from .quotient import Box, PointedChamber, enumerate_box, out_transitions, weight
from .transfer import stabilization_params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedWalk:
    """Cyclic chamber sequence; the step from the last chamber back to the first is included."""
    chambers: Tuple[PointedChamber, ...]

    @property
    def length(self) -> int:
        return len(self.chambers)

    def weight(self) -> QPoly:
        total = ONE
        for j, c in enumerate(self.chambers):
            total = total * weight(c, self.chambers[(j + 1) % self.length])
        return total

    def rotate(self, k: int) -> 'ClosedWalk':
        k %= self.length
        return ClosedWalk(self.chambers[k:] + self.chambers[:k])

    def __str__(self):
        return '>'.join(str(c) for c in self.chambers)


@dataclass(frozen=True)
class GalleryClass:
    canonical: Tuple[PointedChamber, ...]
    length: int
    period: int
    weight: QPoly

    @property
    def is_primitive(self) -> bool:
        return self.period == self.length

    @property
    def cycle(self) -> str:
        return '>'.join(str(c) for c in self.canonical)

    def describe(self) -> str:
        return f"len={self.length} period={self.period} weight={self.weight} cycle={self.cycle}"

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "period": self.period,
            "weight": self.weight.to_json(),
            "cycle": [str(c) for c in self.canonical],
        }


def _walks_from(starts: List[PointedChamber], n: int, box: Box) -> List[Tuple[PointedChamber, ...]]:
    found = []

    def extend(path):
        if len(path) == n:
            if weight(path[-1], path[0]):
                found.append(tuple(path))
            return
        home = path[0].label
        remaining = n - len(path)
        for target, _ in out_transitions(path[-1]):
            if not box.contains(target):
                continue
            if max(abs(target.m - home[0]), abs(target.n - home[1])) > remaining:
                continue
            path.append(target)
            extend(path)
            path.pop()

    for start in starts:
        extend([start])
    return found


def enumerate_closed(n: int, workers: int = 1) -> List[ClosedWalk]:
    """All closed walks of length n inside the stabilization box, in DFS order per start chamber."""
    if n < 1:
        raise ValueError("walk length must be at least 1")
    box = stabilization_params(n).box
    starts = enumerate_box(box)
    walks = []
    for part in map_chunks(_walks_from, starts, workers, n, box):
        walks.extend(ClosedWalk(w) for w in part)
    logger.debug(f"Found {len(walks)} closed walks of length {n}")
    return walks


def _canonical(chambers: Tuple[PointedChamber, ...]) -> Tuple[PointedChamber, ...]:
    length = len(chambers)
    rotations = [chambers[k:] + chambers[:k] for k in range(length)]
    return min(rotations, key=lambda seq: [str(c) for c in seq])


def _period(chambers: Tuple[PointedChamber, ...]) -> int:
    length = len(chambers)
    for k in range(1, length + 1):
        if length % k == 0 and chambers[k:] + chambers[:k] == chambers:
            return k
    return length


def classify(walks: List[ClosedWalk], q_mode: QMode = SYMBOLIC) -> List[GalleryClass]:
    lengths = {w.length for w in walks}
    if len(lengths) > 1:
        raise ValueError("classify expects walks of a single length")
    classes: Dict[Tuple[PointedChamber, ...], GalleryClass] = {}
    for walk in walks:
        key = _canonical(walk.chambers)
        if key in classes:
            continue
        classes[key] = GalleryClass(
            canonical=key,
            length=walk.length,
            period=_period(key),
            weight=q_mode.specialize(ClosedWalk(key).weight()),
        )
    return sorted(classes.values(), key=lambda c: c.cycle)


def weighted_count(n: int, q_mode: QMode = SYMBOLIC, workers: int = 1) -> QPoly:
    """N_n: sum over length-n classes of weight times primitive length."""
    total = ZERO
    for cls in classify(enumerate_closed(n, workers), q_mode):
        total = total + cls.weight * cls.period
    return total


def primitive_classes_up_to(max_length: int, q_mode: QMode = SYMBOLIC, workers: int = 1) -> List[GalleryClass]:
    if max_length < 1:
        raise ValueError("maximum length must be at least 1")
    primitive = []
    for length in range(1, max_length + 1):
        primitive.extend(c for c in classify(enumerate_closed(length, workers), q_mode)
                         if c.is_primitive and c.weight)
    return primitive


def euler_product_series(max_length: int, q_mode: QMode = SYMBOLIC, order: int = None,
                         workers: int = 1) -> Series:
    """
    Truncated Euler product over primitive classes

    Args:
        max_length: longest primitive class included
        q_mode: symbolic or numeric q
        order: truncation order, at most max_length (defaults to max_length)
        workers: process pool size for the enumeration

    Returns:
        prod (1 - w u^l)^(-1) as a Series of the given order

    Raises:
        SeriesError: if order exceeds max_length
    """
    order = max_length if order is None else order
    if order > max_length:
        raise SeriesError(f"order {order} exceeds the enumerated length {max_length}")
    product = Series.one(order)
    if order == 0:
        return product
    for cls in primitive_classes_up_to(order, q_mode, workers):
        geometric = [QFraction()] * (order + 1)
        power = ONE
        for j in range(0, order // cls.length + 1):
            geometric[j * cls.length] = QFraction(power)
            power = power * cls.weight
        product = product * Series(geometric, order)
    return product
