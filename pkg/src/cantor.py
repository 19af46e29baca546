"""Exact points and basic clopen sets of the Cantor set.

A point of C is stored as a finite ternary word over {0, 2} followed by an
infinite constant tail (all 0s or all 2s). Every point the retraction
machinery ever touches has this shape, so order, membership and prefix
relations are decided by finite string comparisons.

Textual forms:
  point      "022"    -> 0.022000...
             "0~2"    -> 0.0222...
             "0", ""  -> the point 0
  basic set  "02"     -> all points whose expansion begins 0.02
             "*"      -> the whole Cantor set
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import Iterable, Iterator

DIGITS = "02"
WHOLE_SPACE = "*"

_POINT_RE = re.compile(r"([02]*)(?:~([02]))?")


class CantorError(ValueError):
    """Base class for every domain error raised by this package."""


class ParseError(CantorError):
    """Raised when a textual point, basic set, element or cover is malformed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Tail(str, Enum):
    """The constant tail following a point's finite word."""

    ZEROS = "0"
    TWOS = "2"


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class PrefixRelation(str, Enum):
    """How two basic sets sit relative to each other in the prefix tree."""

    U_CONTAINS_V = "u_contains_v"
    V_CONTAINS_U = "v_contains_u"
    EQUAL = "equal"
    DISJOINT = "disjoint"


def _check_word(word: str, what: str) -> None:
    for position, digit in enumerate(word):
        if digit not in DIGITS:
            raise ParseError(f"{what} digit {digit!r} is not 0 or 2", position)


@total_ordering
@dataclass(frozen=True)
class CantorPoint:
    """A point of C with an eventually constant ternary expansion.

    The word is kept canonical: it never ends with the tail digit, so two
    points are equal exactly when their fields are equal.
    """

    word: str = ""
    tail: Tail = Tail.ZEROS

    def __post_init__(self) -> None:
        _check_word(self.word, "point")
        tail = Tail(self.tail)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "word", self.word.rstrip(tail.value))

    @classmethod
    def zero(cls) -> CantorPoint:
        return cls("", Tail.ZEROS)

    def digit(self, index: int) -> str:
        """Ternary digit at 0-based position `index` of the full expansion."""
        if index < len(self.word):
            return self.word[index]
        return self.tail.value

    def expansion(self, length: int) -> str:
        """The first `length` digits of the full expansion."""
        if length <= len(self.word):
            return self.word[:length]
        return self.word + self.tail.value * (length - len(self.word))

    def value(self) -> Fraction:
        """Exact real value of the point as a fraction in [0, 1]."""
        total = sum(
            (Fraction(int(d), 3 ** (i + 1)) for i, d in enumerate(self.word)),
            Fraction(0),
        )
        if self.tail is Tail.TWOS:
            # 0.00..0222... contributes exactly 3^-len(word)
            total += Fraction(1, 3 ** len(self.word))
        return total

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, CantorPoint):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __str__(self) -> str:
        return format_point(self)


@dataclass(frozen=True, order=True)
class BasicSet:
    """The clopen set U_w of points whose expansion begins with `prefix`.

    Ordering is lexicographic on the prefix, which lists pairwise disjoint
    sets from left to right.
    """

    prefix: str = ""

    def __post_init__(self) -> None:
        _check_word(self.prefix, "prefix")

    @classmethod
    def whole(cls) -> BasicSet:
        return cls("")

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def children(self) -> tuple[BasicSet, BasicSet]:
        return BasicSet(self.prefix + "0"), BasicSet(self.prefix + "2")

    def ancestors(self) -> Iterator[BasicSet]:
        """Proper ancestors, nearest first."""
        for length in range(len(self.prefix) - 1, -1, -1):
            yield BasicSet(self.prefix[:length])

    def __contains__(self, point: object) -> bool:
        return isinstance(point, CantorPoint) and contains(self, point)

    def __str__(self) -> str:
        return format_basic_set(self)


def compare(a: CantorPoint, b: CantorPoint) -> Ordering:
    """Order of the real numbers denoted by `a` and `b`.

    Digits beyond both words are constant tails, so max(len) + 1 digits
    decide the comparison.
    """
    length = max(len(a.word), len(b.word)) + 1
    ea, eb = a.expansion(length), b.expansion(length)
    if ea == eb:
        return Ordering.EQUAL
    return Ordering.LESS if ea < eb else Ordering.GREATER


def contains(u: BasicSet, p: CantorPoint) -> bool:
    return p.expansion(len(u.prefix)) == u.prefix


def prefix_relation(u: BasicSet, v: BasicSet) -> PrefixRelation:
    if u.prefix == v.prefix:
        return PrefixRelation.EQUAL
    if v.prefix.startswith(u.prefix):
        return PrefixRelation.U_CONTAINS_V
    if u.prefix.startswith(v.prefix):
        return PrefixRelation.V_CONTAINS_U
    return PrefixRelation.DISJOINT


def is_subset(u: BasicSet, v: BasicSet) -> bool:
    """True when u is contained in v (equality included)."""
    return u.prefix.startswith(v.prefix)


def left_endpoint(u: BasicSet) -> CantorPoint:
    return CantorPoint(u.prefix, Tail.ZEROS)


def right_endpoint(u: BasicSet) -> CantorPoint:
    return CantorPoint(u.prefix, Tail.TWOS)


def is_left_of(u: BasicSet, v: BasicSet) -> bool:
    """For disjoint u and v, whether u lies entirely to the left of v."""
    return compare(right_endpoint(u), left_endpoint(v)) is Ordering.LESS


def iter_words(max_length: int) -> Iterator[str]:
    """All words over {0, 2} of length 0..max_length, shortest first."""
    for length in range(max_length + 1):
        for letters in product(DIGITS, repeat=length):
            yield "".join(letters)


def iter_basic_sets(max_length: int) -> Iterator[BasicSet]:
    for word in iter_words(max_length):
        yield BasicSet(word)


def grid_points(depth: int) -> tuple[CantorPoint, ...]:
    """The 2**depth tail-zero points whose words have length <= depth, ascending.

    Words shorter than `depth` are the same points as their zero padding,
    so it suffices to take the words of length exactly `depth`.
    """
    return tuple(CantorPoint("".join(w)) for w in product(DIGITS, repeat=depth))


# -- text -----------------------------------------------------------------


def format_point(p: CantorPoint) -> str:
    if p.tail is Tail.TWOS:
        return f"{p.word}~2"
    return p.word or "0"


def format_basic_set(u: BasicSet) -> str:
    return u.prefix or WHOLE_SPACE


def format_basic_sets(parts: Iterable[BasicSet]) -> str:
    return "{" + ", ".join(format_basic_set(u) for u in sorted(parts)) + "}"


def parse_point(text: str, offset: int = 0) -> CantorPoint:
    """Parse a point; `offset` shifts reported error positions."""
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    match = _POINT_RE.fullmatch(stripped)
    if match is None:
        raise ParseError(f"invalid point {stripped!r}", lead + _bad_point_position(stripped))
    word, tail = match.group(1), match.group(2)
    return CantorPoint(word, Tail(tail) if tail else Tail.ZEROS)


def _bad_point_position(text: str) -> int:
    position = 0
    while position < len(text) and text[position] in DIGITS:
        position += 1
    if position < len(text) and text[position] == "~":
        position += 1
        if position < len(text) and text[position] in DIGITS:
            position += 1
    return position


def parse_basic_set(text: str, offset: int = 0) -> BasicSet:
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if stripped == WHOLE_SPACE:
        return BasicSet.whole()
    if not stripped:
        raise ParseError("empty prefix (use '*' for the whole space)", lead)
    for position, digit in enumerate(stripped):
        if digit not in DIGITS:
            raise ParseError(f"invalid prefix digit {digit!r}", lead + position)
    return BasicSet(stripped)


def split_braced(text: str) -> list[tuple[str, int]]:
    """Split "{a, b, c}" into its items, each with its offset in `text`."""
    start = len(text) - len(text.lstrip())
    end = len(text.rstrip())
    if start >= end or text[start] != "{":
        raise ParseError("expected '{'", start)
    if text[end - 1] != "}" or end - 1 == start:
        raise ParseError("expected '}'", end)
    inner_start, inner_end = start + 1, end - 1
    inner = text[inner_start:inner_end]
    if not inner.strip():
        return []
    items: list[tuple[str, int]] = []
    cursor = inner_start
    for chunk in inner.split(","):
        if not chunk.strip():
            raise ParseError("empty item", cursor)
        items.append((chunk, cursor))
        cursor += len(chunk) + 1
    return items
