"""Seeded random and exhaustive case generation."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Iterator

from ..cantor import DIGITS, BasicSet, CantorPoint, Tail, grid_points
from ..group import Cover, GroupElement
from ..retraction import retract
from .models import TestCampaign


class CaseGenerator:
    """Random points, elements and covers drawn from one seeded RNG.

    Word lengths are uniform in [0, max_word_length] with uniform digits and
    a zero tail, so generated points lie on the enumeration grid.
    """

    def __init__(self, campaign: TestCampaign, rng: random.Random):
        self.campaign = campaign
        self.rng = rng

    def word(self, max_length: int) -> str:
        length = self.rng.randint(0, max_length)
        return "".join(self.rng.choice(DIGITS) for _ in range(length))

    def point(self, any_tail: bool = False) -> CantorPoint:
        tail = self.rng.choice(list(Tail)) if any_tail else Tail.ZEROS
        return CantorPoint(self.word(self.campaign.max_word_length), tail)

    def point_in(self, u: BasicSet) -> CantorPoint:
        """A random point of u, with either tail."""
        extension = self.word(self.campaign.max_word_length)
        return CantorPoint(u.prefix + extension, self.rng.choice(list(Tail)))

    def basic_set(self, max_length: int | None = None) -> BasicSet:
        return BasicSet(self.word(self.campaign.max_word_length if max_length is None else max_length))

    def element(self, size: int) -> GroupElement:
        size = min(size, 2**self.campaign.max_word_length)
        points: set[CantorPoint] = set()
        while len(points) < size:
            points.add(self.point())
        return GroupElement(tuple(points))

    def odd_element(self) -> GroupElement:
        return self.element(self.rng.choice(odd_sizes(self._size_bound())))

    def even_element(self) -> GroupElement:
        return self.element(self.rng.choice(even_sizes(self._size_bound())))

    def any_element(self) -> GroupElement:
        return self.element(self.rng.randint(0, self._size_bound()))

    def nonempty_element(self) -> GroupElement:
        return self.element(self.rng.randint(1, self._size_bound()))

    def cover(self, max_parts: int = 8) -> Cover:
        """Split random parts of the trivial cover until a random part count is reached."""
        max_depth = self.campaign.max_word_length
        parts = [BasicSet.whole()]
        target = self.rng.randint(1, max_parts)
        while len(parts) < target:
            splittable = [p for p in parts if p.depth < max_depth]
            if not splittable:
                break
            chosen = self.rng.choice(splittable)
            parts.remove(chosen)
            parts.extend(chosen.children())
        return Cover(tuple(parts))

    def _size_bound(self) -> int:
        return min(self.campaign.max_set_size, 2**self.campaign.max_word_length)


def odd_sizes(bound: int) -> list[int]:
    return list(range(1, bound + 1, 2))


def even_sizes(bound: int) -> list[int]:
    return list(range(0, bound + 1, 2))


def grid_elements(depth: int, sizes: Iterable[int]) -> Iterator[GroupElement]:
    """Every element of the given sizes supported on the depth grid."""
    grid = grid_points(depth)
    for size in sizes:
        for points in combinations(grid, size):
            yield GroupElement(points)


def neighborhoods(x: CantorPoint, max_length: int) -> list[BasicSet]:
    """The basic neighborhoods of x with prefix length 0..max_length."""
    return [BasicSet(x.expansion(length)) for length in range(max_length + 1)]


def witness_cases(campaign: TestCampaign) -> Iterator[tuple[GroupElement, BasicSet]]:
    """Odd F on the grid with every basic neighborhood u of r(F) up to the neighborhood depth."""
    for f in grid_elements(campaign.grid_depth, odd_sizes(campaign.max_set_size)):
        for u in neighborhoods(retract(f), campaign.neighborhood_depth):
            yield f, u

