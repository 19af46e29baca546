"""Continuity witnesses for the retraction in the topology generated by the H_Γ.

Given an odd F and a basic neighborhood U of x = r(F), build_witness picks
a basic set V_x around x and a cover Γ such that r(F + H) stays in
V_x ⊆ U for every H in H_Γ. verify_witness checks that claim by bounded
brute force over H_Γ on a finite grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from loguru import logger

from .cantor import (
    BasicSet,
    CantorError,
    CantorPoint,
    PrefixRelation,
    contains,
    format_basic_sets,
    is_subset,
    left_endpoint,
    prefix_relation,
)
from .config import settings
from .group import (
    Classification,
    Cover,
    DepthBelowCover,
    GroupElement,
    classify,
    count_in,
    enumerate_subgroup,
    refine_to_cover,
)
from .retraction import maximal_even_prefixes, retract, retract_extended


class NotNeighborhood(CantorError):
    """Raised when the target basic set does not contain the retracted point."""

    def __init__(self, point: CantorPoint, neighborhood: BasicSet):
        super().__init__(f"{neighborhood} is not a neighborhood of r(F) = {point}")
        self.point = point
        self.neighborhood = neighborhood


class NoOddPart(CantorError):
    """Raised when no part of a cover is odd for the given element."""


@dataclass(frozen=True)
class WitnessReport:
    """x = r(F), the chosen V_x, the maximal even parts and the cover Γ."""

    x: CantorPoint
    v_x: BasicSet
    maximal_even: tuple[BasicSet, ...]
    gamma: Cover
    target: BasicSet

    def violations(self, f: GroupElement) -> list[str]:
        """Broken structural invariants of this report for f (empty when sound)."""
        problems = []
        if not is_subset(self.v_x, self.target):
            problems.append(f"v_x {self.v_x} is not inside target {self.target}")
        if not contains(self.v_x, self.x) or count_in(self.v_x, f) != 1:
            problems.append(f"v_x {self.v_x} does not meet F exactly in x = {self.x}")
        for part in self.maximal_even:
            if prefix_relation(part, self.v_x) is not PrefixRelation.DISJOINT:
                problems.append(f"v_x {self.v_x} meets maximal even part {part}")
            if part not in self.gamma:
                problems.append(f"maximal even part {part} is not a part of gamma")
        if self.v_x not in self.gamma:
            problems.append(f"v_x {self.v_x} is not a part of gamma")
        return problems

    def render(self) -> str:
        return "\n".join(
            [
                f"x = {self.x}",
                f"target = {self.target}",
                f"v_x = {self.v_x}",
                f"maximal_even = {format_basic_sets(self.maximal_even)}",
                f"gamma = {self.gamma}",
            ]
        )


@dataclass
class VerificationResult:
    """Outcome of a bounded check over H_Γ: pass, or the first counterexample."""

    checked: int
    counterexample: Optional[GroupElement] = None
    image: Optional[CantorPoint] = None
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def render(self) -> str:
        lines = [f"checked = {self.checked}", f"result = {'pass' if self.passed else 'counterexample'}"]
        if self.counterexample is not None:
            lines.append(f"counterexample = {self.counterexample}")
            lines.append(f"image = {self.image}")
        lines.extend(f"warning = {w}" for w in self.warnings)
        return "\n".join(lines)


def build_witness(f: GroupElement, u: BasicSet) -> WitnessReport:
    """Choose V_x and Γ with r(F + H_Γ) ⊆ V_x ⊆ u.

    V_x is the shortest prefix of x's expansion that lies in u, meets F
    only in x, and misses every maximal F-even part.
    """
    x = retract(f)
    if not contains(u, x):
        raise NotNeighborhood(x, u)
    decomposition = maximal_even_prefixes(f)
    length = u.depth
    while True:
        candidate = BasicSet(x.expansion(length))
        if count_in(candidate, f) == 1 and all(
            prefix_relation(part, candidate) is PrefixRelation.DISJOINT
            for part in decomposition.maximal_even
        ):
            break
        length += 1
    gamma = refine_to_cover(decomposition.maximal_even + (candidate,))
    report = WitnessReport(
        x=x,
        v_x=candidate,
        maximal_even=decomposition.maximal_even,
        gamma=gamma,
        target=u,
    )
    logger.debug(f"witness for {f} in {u}: v_x = {candidate}, gamma = {gamma}")
    return report


def build_extended_witness(f: GroupElement, u: BasicSet) -> WitnessReport:
    """Witness for r̂, which also covers even elements.

    Every H in any H_Γ is even, so an even F never leaves the even coset,
    where r̂ is constantly 0; the trivial cover is then enough.
    """
    if f.is_odd:
        return build_witness(f, u)
    zero = CantorPoint.zero()
    if not contains(u, zero):
        raise NotNeighborhood(zero, u)
    return WitnessReport(x=zero, v_x=u, maximal_even=(), gamma=Cover.trivial(), target=u)


def leftmost_odd_part(gamma: Cover, f: GroupElement) -> BasicSet:
    odd = [part for part in gamma if classify(part, f) is Classification.ODD]
    if not odd:
        raise NoOddPart(f"no part of {gamma} is odd for {f}")
    return min(odd, key=left_endpoint)


def _resolve_bounds(gamma: Cover, depth: Optional[int], cap: Optional[int]) -> tuple[int, int]:
    if depth is None:
        depth = gamma.depth + settings.depth_margin
    if cap is None:
        cap = settings.default_enum_cap
    if depth < gamma.depth:
        raise DepthBelowCover(f"depth {depth} is below the cover depth {gamma.depth} of {gamma}")
    return depth, cap


def verify_witness(
    report: WitnessReport,
    f: GroupElement,
    depth: Optional[int] = None,
    cap: Optional[int] = None,
) -> VerificationResult:
    """Check r̂(F △ H) ∈ V_x for every enumerated H in H_Γ.

    The report is not validated, so deliberately broken reports can be
    checked too. The first counterexample in enumeration order is returned.
    """
    depth, cap = _resolve_bounds(report.gamma, depth, cap)
    enumeration = enumerate_subgroup(report.gamma, depth, cap)
    checked = 0
    for h in enumeration:
        checked += 1
        image = retract_extended(f ^ h)
        if not contains(report.v_x, image):
            logger.warning(f"counterexample for {f}: H = {h} sends r to {image} outside {report.v_x}")
            return VerificationResult(checked, counterexample=h, image=image)
    warnings = [enumeration.warning] if enumeration.warning else []
    return VerificationResult(checked, warnings=warnings)


def check_subspace_embedding(
    x: CantorPoint,
    v_x: BasicSet,
    gamma: Cover,
    depth: Optional[int] = None,
    cap: Optional[int] = None,
) -> VerificationResult:
    """Check (x + H_Γ) ∩ C ⊆ v_x on the depth grid.

    Whenever {x} △ H is a single point y, y must lie in v_x.
    """
    depth, cap = _resolve_bounds(gamma, depth, cap)
    if v_x not in gamma:
        logger.debug(f"{v_x} is not a part of {gamma}; checking anyway")
    enumeration = enumerate_subgroup(gamma, depth, cap)
    singleton = GroupElement((x,))
    checked = 0
    for h in enumeration:
        checked += 1
        moved = singleton ^ h
        if len(moved) == 1 and not contains(v_x, moved.points[0]):
            return VerificationResult(checked, counterexample=h, image=moved.points[0])
    warnings = [enumeration.warning] if enumeration.warning else []
    return VerificationResult(checked, warnings=warnings)


def even_cover_of_vx(report: WitnessReport, g: GroupElement) -> Optional[BasicSet]:
    """A maximal g-even basic set containing V_x, if one exists.

    For g = F △ H with H in H_Γ there is none: such a set would be a union
    of parts of Γ, even for H and therefore even for F, yet it contains
    x = r(F).
    """
    if not g:
        return None
    for part in maximal_even_prefixes(g).maximal_even:
        if is_subset(report.v_x, part):
            return part
    return None
