"""The retraction r of the odd elements of B(C) onto C, and its extension r̂.

r(F) is the leftmost point of F outside every inclusion-maximal F-even
basic set. Those maximal sets are found by a single walk down the prefix
tree of F's expansions.
"""

from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from .cantor import (
    BasicSet,
    CantorError,
    CantorPoint,
    contains,
    format_basic_sets,
    is_subset,
    iter_basic_sets,
)
from .group import Classification, GroupElement, classify


class EmptyElement(CantorError):
    """Raised when an operation needs a nonempty element."""


class EvenCardinality(CantorError):
    """Raised when r is applied outside the odd coset B_*(C)."""


class DepthTooSmall(CantorError):
    """Raised when a prefix depth does not separate the points of an element."""


@dataclass(frozen=True)
class EvenDecomposition:
    """Maximal even parts V_1..V_m of an element and the points outside them."""

    maximal_even: tuple[BasicSet, ...]
    residue: GroupElement

    def covered(self, point: CantorPoint) -> bool:
        return any(contains(part, point) for part in self.maximal_even)

    def __str__(self) -> str:
        return f"maximal_even = {format_basic_sets(self.maximal_even)}; residue = {self.residue}"


def maximal_even_prefixes(f: GroupElement) -> EvenDecomposition:
    """Walk the prefix tree of f, emitting each even node and not descending below it.

    Odd nodes with at least three points are split into their two children;
    nodes with a single point end the walk and keep that point as residue.
    """
    if not f:
        raise EmptyElement("the empty element has no even decomposition")
    parts: list[BasicSet] = []
    residue: list[CantorPoint] = []
    stack: list[tuple[str, tuple[CantorPoint, ...]]] = [("", f.points)]
    while stack:
        prefix, points = stack.pop()
        if len(points) % 2 == 0:
            parts.append(BasicSet(prefix))
        elif len(points) == 1:
            residue.extend(points)
        else:
            depth = len(prefix)
            # right child first so the left subtree is walked first
            for digit in "20":
                child = tuple(p for p in points if p.digit(depth) == digit)
                if child:
                    stack.append((prefix + digit, child))
    decomposition = EvenDecomposition(tuple(parts), GroupElement(tuple(residue)))
    logger.debug(f"decomposed {f}: {decomposition}")
    return decomposition


def _require_odd(f: GroupElement) -> None:
    if not f.is_odd:
        raise EvenCardinality(f"even cardinality: r is defined only for odd elements, |{f}| = {len(f)}")


def retract(f: GroupElement) -> CantorPoint:
    """r(F): the least point of F not covered by a maximal F-even basic set."""
    _require_odd(f)
    return min(maximal_even_prefixes(f).residue)


def retract_extended(f: GroupElement) -> CantorPoint:
    """r̂(F): r(F) on odd elements and the point 0 on even ones."""
    if f.is_odd:
        return retract(f)
    return CantorPoint.zero()


def even_prefixes(f: GroupElement, depth: int) -> list[BasicSet]:
    """Every basic set of prefix length <= depth that is f-even."""
    return [u for u in iter_basic_sets(depth) if classify(u, f) is Classification.EVEN]


def brute_force_retract(f: GroupElement, depth: int) -> CantorPoint:
    """r(F) computed straight from its definition by classifying every short prefix.

    Independent of the tree walk in maximal_even_prefixes and used as its
    oracle. `depth` must separate the points of f.
    """
    _require_odd(f)
    needed = f.separation_depth()
    if depth < needed:
        raise DepthTooSmall(f"depth {depth} does not separate {f}; need {needed}")
    evens = even_prefixes(f, depth)
    remaining = [p for p in f if not any(contains(u, p) for u in evens)]
    return min(remaining)


def maximal_parts_cover(decomposition: EvenDecomposition, prefix: BasicSet) -> bool:
    """True when `prefix` lies inside one of the maximal even parts."""
    return any(is_subset(prefix, part) for part in decomposition.maximal_even)
