"""Negative control: covers not built by build_witness fail to control r."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from loguru import logger

from ..cantor import BasicSet, CantorPoint, contains
from ..group import Cover, GroupElement, enumerate_subgroup
from ..retraction import retract
from ..witness import WitnessReport, build_witness
from .generators import witness_cases
from .models import TestCampaign


@dataclass(frozen=True)
class NegativeControl:
    """An H in H_Γ for a bad Γ that moves r(F △ H) out of u."""

    f: GroupElement
    u: BasicSet
    bad_gamma: Cover
    h: GroupElement
    image: CantorPoint

    def render(self) -> str:
        return (
            f"f = {self.f}; u = {self.u}; bad_gamma = {self.bad_gamma}; "
            f"h = {self.h}; r(f △ h) = {self.image}"
        )


def bad_covers(report: WitnessReport) -> list[Cover]:
    """The trivial cover, plus the witness cover with one maximal even part split in two."""
    covers = [Cover.trivial()]
    for part in report.maximal_even:
        rest = tuple(p for p in report.gamma if p != part)
        covers.append(Cover(rest + part.children()))
    return [c for c in covers if c != report.gamma]


def search_negative_control(
    bound: TestCampaign,
    cases: Optional[Iterable[tuple[GroupElement, BasicSet]]] = None,
    covers: Optional[Iterable[Cover]] = None,
) -> Optional[NegativeControl]:
    """First (f, u, bad Γ, H) with H in H_Γ and r(f △ H) outside u, or None.

    By default every witness case of the campaign is tried against
    bad_covers of its witness; `covers` replaces those with a fixed list.
    H is enumerated on the grid of depth max(grid_depth, depth of Γ).
    """
    fixed = list(covers) if covers is not None else None
    for f, u in cases if cases is not None else witness_cases(bound):
        candidates = fixed if fixed is not None else bad_covers(build_witness(f, u))
        for gamma in candidates:
            depth = max(bound.grid_depth, gamma.depth)
            for h in enumerate_subgroup(gamma, depth, bound.enum_cap):
                image = retract(f ^ h)
                if not contains(u, image):
                    found = NegativeControl(f, u, gamma, h, image)
                    logger.info(f"negative control found: {found.render()}")
                    return found
    return None
