"""Greedy shrinking of failing group elements."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator, Optional

from ..config import settings
from ..group import GroupElement


def _smaller(f: GroupElement) -> Iterator[GroupElement]:
    """Single-point removals first, then pair removals (which keep the parity)."""
    points = f.points
    for index in range(len(points)):
        yield GroupElement(points[:index] + points[index + 1 :])
    for i, j in combinations(range(len(points)), 2):
        yield GroupElement(tuple(p for k, p in enumerate(points) if k not in (i, j)))


def shrink_element(
    f: GroupElement,
    still_fails: Callable[[GroupElement], bool],
    max_rounds: Optional[int] = None,
) -> GroupElement:
    """Remove points from f while `still_fails` holds; return the smallest failing element found.

    Each round takes the first smaller candidate that still fails, so the
    result is 1-minimal for single and pair removals unless the round bound
    is hit first.
    """
    rounds = settings.max_shrink_rounds if max_rounds is None else max_rounds
    current = f
    for _ in range(rounds):
        smaller = next((g for g in _smaller(current) if still_fails(g)), None)
        if smaller is None:
            break
        current = smaller
    return current
