"""The Boolean group B(C), parity classes, covers and the subgroups H_Γ.

An element of B(C) is a finite set of Cantor points; the group operation
is symmetric difference. A cover is a finite complete antichain of basic
sets, and H_Γ is the subgroup of elements meeting every part of Γ in an
even number of points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Optional

from loguru import logger

from .cantor import (
    BasicSet,
    CantorError,
    CantorPoint,
    ParseError,
    PrefixRelation,
    contains,
    format_basic_sets,
    grid_points,
    parse_basic_set,
    parse_point,
    prefix_relation,
    split_braced,
)


class InvalidCover(CantorError):
    """Raised when a family of basic sets is not a disjoint cover of C."""

    def __init__(self, condition: str, detail: str):
        super().__init__(f"invalid cover ({condition}): {detail}")
        self.condition = condition


class NotDisjoint(CantorError):
    """Raised when basic sets that must be pairwise disjoint overlap."""


class DepthBelowCover(CantorError):
    """Raised when an enumeration depth cannot resolve every part of a cover."""


class Classification(str, Enum):
    VOID = "void"
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class GroupElement:
    """A finite subset of C, stored ascending without duplicates."""

    points: tuple[CantorPoint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(sorted(set(self.points))))

    @classmethod
    def of(cls, *points: str | CantorPoint) -> GroupElement:
        """Build an element from points or their textual forms."""
        return cls(tuple(p if isinstance(p, CantorPoint) else parse_point(p) for p in points))

    @classmethod
    def identity(cls) -> GroupElement:
        return cls(())

    @property
    def parity(self) -> int:
        return len(self.points) % 2

    @property
    def is_odd(self) -> bool:
        return self.parity == 1

    def separation_depth(self) -> int:
        """Least length at which all points have pairwise distinct prefixes."""
        if len(self.points) < 2:
            return 0
        length = 0
        while len({p.expansion(length) for p in self.points}) < len(self.points):
            length += 1
        return length

    def __xor__(self, other: GroupElement) -> GroupElement:
        return symmetric_difference(self, other)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[CantorPoint]:
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.points) + "}"


@dataclass(frozen=True)
class Cover:
    """A finite partition of C into basic sets, listed left to right.

    Construction fails with InvalidCover unless the parts are pairwise
    disjoint and together cover every word of the maximal part length.
    """

    parts: tuple[BasicSet, ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted(set(self.parts)))
        for u, v in combinations(parts, 2):
            if prefix_relation(u, v) is not PrefixRelation.DISJOINT:
                raise InvalidCover("disjoint", f"parts {u} and {v} overlap")
        depth = max((u.depth for u in parts), default=0)
        # disjoint parts cover C iff their measures add up to 1
        measure = sum(2 ** (depth - u.depth) for u in parts)
        if measure != 2**depth:
            raise InvalidCover("incomplete", f"{format_basic_sets(parts)} leaves part of C uncovered")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def trivial(cls) -> Cover:
        return cls((BasicSet.whole(),))

    @property
    def depth(self) -> int:
        return max(u.depth for u in self.parts)

    def part_containing(self, point: CantorPoint) -> BasicSet:
        for part in self.parts:
            if contains(part, point):
                return part
        raise InvalidCover("incomplete", f"no part contains {point}")  # pragma: no cover

    def __iter__(self) -> Iterator[BasicSet]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __contains__(self, part: object) -> bool:
        return part in self.parts

    def __str__(self) -> str:
        return format_basic_sets(self.parts)


def symmetric_difference(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(tuple(set(a.points).symmetric_difference(b.points)))


def count_in(u: BasicSet, f: GroupElement) -> int:
    return sum(1 for p in f.points if contains(u, p))


def classify_count(count: int) -> Classification:
    if count == 0:
        return Classification.VOID
    return Classification.ODD if count % 2 else Classification.EVEN


def classify(u: BasicSet, f: GroupElement) -> Classification:
    """Whether u is f-void, f-even or f-odd."""
    return classify_count(count_in(u, f))


def in_subgroup(gamma: Cover, f: GroupElement) -> bool:
    """Membership of f in H_Γ: every part of Γ holds an even number of points of f."""
    counts = Counter(gamma.part_containing(p) for p in f.points)
    return all(n % 2 == 0 for n in counts.values())


def refine_to_cover(special: Iterable[BasicSet]) -> Cover:
    """Complete pairwise disjoint basic sets into a cover at their maximal depth.

    The result holds every special part plus each word of length L (the
    maximal special length) lying outside all special parts.
    """
    parts = sorted(set(special))
    for u, v in combinations(parts, 2):
        if prefix_relation(u, v) is not PrefixRelation.DISJOINT:
            raise NotDisjoint(f"basic sets {u} and {v} overlap")
    depth = max((u.depth for u in parts), default=0)
    filler = [
        BasicSet(p.expansion(depth))
        for p in grid_points(depth)
        if not any(contains(u, p) for u in parts)
    ]
    cover = Cover(tuple(parts + filler))
    logger.debug(f"refined {format_basic_sets(parts)} to {cover}")
    return cover


def iter_covers(max_depth: int) -> Iterator[Cover]:
    """Every cover of C whose parts have length <= max_depth."""
    for parts in _covers_below(BasicSet.whole(), max_depth):
        yield Cover(parts)


def _covers_below(node: BasicSet, max_depth: int) -> Iterator[tuple[BasicSet, ...]]:
    yield (node,)
    if node.depth >= max_depth:
        return
    left, right = node.children()
    for lhs in _covers_below(left, max_depth):
        for rhs in _covers_below(right, max_depth):
            yield lhs + rhs


# -- enumeration ----------------------------------------------------------


def iter_subgroup(gamma: Cover, depth: int) -> Iterator[GroupElement]:
    """All elements of H_Γ supported on the depth grid, by size then point order.

    A depth-first walk over the grid in ascending order, pruned whenever the
    parts still holding an odd count cannot all be fixed by the remaining
    grid points.
    """
    grid = grid_points(depth)
    labels = [gamma.part_containing(p) for p in grid]
    # remaining[i][part]: grid points at index >= i lying in part
    remaining: list[Counter[BasicSet]] = [Counter() for _ in range(len(grid) + 1)]
    for index in range(len(grid) - 1, -1, -1):
        remaining[index] = remaining[index + 1].copy()
        remaining[index][labels[index]] += 1

    chosen: list[CantorPoint] = []
    counts: Counter[BasicSet] = Counter()

    def extend(start: int, slots: int) -> Iterator[GroupElement]:
        odd = [part for part, n in counts.items() if n % 2]
        if slots == 0:
            if not odd:
                yield GroupElement(tuple(chosen))
            return
        if len(odd) > slots or len(grid) - start < slots:
            return
        if any(remaining[start][part] == 0 for part in odd):
            return
        for index in range(start, len(grid) - slots + 1):
            chosen.append(grid[index])
            counts[labels[index]] += 1
            yield from extend(index + 1, slots - 1)
            counts[labels[index]] -= 1
            chosen.pop()

    for size in range(0, len(grid) + 1, 2):
        yield from extend(0, size)


@dataclass
class SubgroupEnumeration:
    """A bounded, re-iterable enumeration of H_Γ on the depth grid.

    After an iteration stops at the cap, `truncated` reports whether more
    elements existed (the CapExceeded signal).
    """

    gamma: Cover
    depth: int
    cap: int
    truncated: bool = field(default=False, init=False)
    emitted: int = field(default=0, init=False)

    def __post_init__(self) -> None:
        if self.depth < 1 or self.cap < 1:
            raise CantorError("enumeration depth and cap must be positive")
        if self.depth < self.gamma.depth:
            raise DepthBelowCover(
                f"depth {self.depth} is below the cover depth {self.gamma.depth} of {self.gamma}"
            )

    def __iter__(self) -> Iterator[GroupElement]:
        self.truncated = False
        self.emitted = 0
        for element in iter_subgroup(self.gamma, self.depth):
            if self.emitted == self.cap:
                self.truncated = True
                logger.debug(
                    f"enumeration of H_Γ for {self.gamma} at depth {self.depth} "
                    f"stopped at cap {self.cap}"
                )
                return
            self.emitted += 1
            yield element

    @property
    def warning(self) -> Optional[str]:
        if not self.truncated:
            return None
        return f"cap exceeded: enumeration stopped after {self.cap} elements"


def enumerate_subgroup(gamma: Cover, depth: int, cap: int) -> SubgroupEnumeration:
    return SubgroupEnumeration(gamma, depth, cap)


# -- text -----------------------------------------------------------------


def parse_element(text: str) -> GroupElement:
    """Parse "{p1, p2, ...}"; repeated points are rejected."""
    points: list[CantorPoint] = []
    for chunk, offset in split_braced(text):
        point = parse_point(chunk, offset)
        if point in points:
            lead = offset + (len(chunk) - len(chunk.lstrip()))
            raise ParseError(f"point {point} listed twice", lead)
        points.append(point)
    return GroupElement(tuple(points))


def parse_cover(text: str) -> Cover:
    return Cover(parse_basic_sets(text))


def parse_basic_sets(text: str) -> tuple[BasicSet, ...]:
    return tuple(parse_basic_set(chunk, offset) for chunk, offset in split_braced(text))
