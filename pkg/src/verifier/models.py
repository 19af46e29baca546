"""Campaign parameters and campaign results."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, ClassVar, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, field_validator

from ..config import settings
from .suite_catalog import SUITE_IDS, get_suite


class TestCampaign(BaseModel):
    """Bounds and suite selection of one verification campaign.

    The seed fully determines every generated case.
    """

    __test__: ClassVar[bool] = False

    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = Field(default_factory=lambda: settings.default_seed)
    max_set_size: PositiveInt = 7
    max_word_length: PositiveInt = 4
    enum_depth: PositiveInt = 5
    enum_cap: PositiveInt = 300
    # random cases per suite
    cases: PositiveInt = 200
    # random covers per subgroup suite, and (F, H, part) triples per cover
    covers: PositiveInt = 50
    triples_per_cover: PositiveInt = 500
    # depth of the grid used by the exhaustive suites
    grid_depth: PositiveInt = 3
    neighborhood_depth: NonNegativeInt = 3
    suites: tuple[str, ...] = SUITE_IDS

    @field_validator("suites", mode="before")
    @classmethod
    def _split_suites(cls, value: Any) -> Any:
        if isinstance(value, str):
            return tuple(s for s in re.split(r"[\s,]+", value) if s)
        return value

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        unknown = [s for s in value if s not in SUITE_IDS]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        return tuple(sorted(set(value)))

    def describe(self) -> str:
        return (
            f"seed={self.seed} max_set_size={self.max_set_size} "
            f"max_word_length={self.max_word_length} enum_depth={self.enum_depth} "
            f"enum_cap={self.enum_cap} cases={self.cases} covers={self.covers} "
            f"triples_per_cover={self.triples_per_cover} grid_depth={self.grid_depth} "
            f"neighborhood_depth={self.neighborhood_depth}"
        )


@dataclass
class Counterexample:
    """A confirmed failing case with everything needed to replay it."""

    suite: str
    case: str
    message: str
    inputs: dict[str, str] = field(default_factory=dict)
    shrunk: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "message": self.message,
            "inputs": dict(self.inputs),
            "shrunk": self.shrunk,
        }


@dataclass
class SuiteResult:
    suite_id: str
    passed: int = 0
    failed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class CampaignReport:
    campaign: TestCampaign
    results: dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(r.ok for r in self.results.values())

    @property
    def total_failed(self) -> int:
        return sum(r.failed for r in self.results.values())

    def ordered(self) -> list[SuiteResult]:
        return [self.results[k] for k in sorted(self.results)]

    def render_lines(self) -> str:
        """Machine format: one "suite-id pass-count fail-count" line per suite."""
        return "\n".join(f"{r.suite_id} {r.passed} {r.failed}" for r in self.ordered())

    def render_text(self) -> str:
        out: list[str] = []
        out.append(f"campaign {self.campaign.describe()}")
        passed_suites = sum(1 for r in self.results.values() if r.ok)
        out.append(f"suites: {len(self.results)} run, {passed_suites} passed")
        out.append("")
        for r in self.ordered():
            status = "PASS" if r.ok else "FAIL"
            out.append(f"{status} {r.suite_id}: {r.passed} passed, {r.failed} failed ({r.elapsed:.2f}s)")
            for w in r.warnings:
                out.append(f"  warning: {w}")
            for c in r.counterexamples:
                out.append(f"  counterexample {c.case}: {c.message}")
                for key, value in c.inputs.items():
                    out.append(f"    {key} = {value}")
                if c.shrunk is not None:
                    out.append(f"    shrunk = {c.shrunk}")
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign.model_dump(mode="json"),
            "all_passed": self.all_passed,
            "suites": {
                r.suite_id: {
                    **get_suite(r.suite_id).to_dict(),
                    "passed": r.passed,
                    "failed": r.failed,
                    "elapsed": r.elapsed,
                    "warnings": list(r.warnings),
                    "counterexamples": [c.to_dict() for c in r.counterexamples],
                }
                for r in self.ordered()
            },
        }
