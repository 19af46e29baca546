"""Campaign runner.

Runs the selected suites in suite-id order, each with its own RNG derived
from the campaign seed, so a suite's cases do not depend on which other
suites were selected. A failing case is re-checked once, then shrunk and
recorded as a counterexample. Warnings raised by passing cases (the
enumeration cap) are counted and reported once per distinct text.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from typing import Optional

from loguru import logger

from ..group import DepthBelowCover, GroupElement
from .generators import CaseGenerator
from .models import CampaignReport, Counterexample, SuiteResult, TestCampaign
from .shrink import shrink_element
from .suite_catalog import SUITE_IDS
from .suites import SUITES, Case, Outcome, SuiteContext

_unimplemented = set(SUITE_IDS) - set(SUITES)
if _unimplemented:  # pragma: no cover
    raise RuntimeError(f"suites without an implementation: {sorted(_unimplemented)}")


def _evaluate(case: Case, subject: Optional[GroupElement]) -> Outcome:
    """Run a case's check and normalize its verdict.

    Exceptions raised by the code under test are failures; a cover deeper
    than the campaign's enumeration depth is a parameter error and aborts.
    """
    try:
        verdict = case.check(subject)
    except DepthBelowCover:
        raise
    except Exception as e:
        return Outcome(f"{type(e).__name__}: {e}")
    return verdict if isinstance(verdict, Outcome) else Outcome(verdict)


def _outcome(case: Case, subject: Optional[GroupElement]) -> Optional[str]:
    """The failure message of a case, or None when it passes."""
    return _evaluate(case, subject).message


def _kind(message: str) -> str:
    return message.split(":", 1)[0]


def _shrink(case: Case, message: str) -> Optional[GroupElement]:
    if case.subject is None:
        return None
    kind = _kind(message)

    def still_fails(candidate: GroupElement) -> bool:
        again = _outcome(case, candidate)
        return again is not None and _kind(again) == kind

    shrunk = shrink_element(case.subject, still_fails)
    return shrunk if shrunk != case.subject else None


def run_suite(suite_id: str, campaign: TestCampaign) -> SuiteResult:
    rng = random.Random(f"{campaign.seed}:{suite_id}")
    context = SuiteContext(campaign, rng, CaseGenerator(campaign, rng))
    result = SuiteResult(suite_id)
    case_warnings: Counter[str] = Counter()
    started = time.perf_counter()
    for case in SUITES[suite_id](context):
        outcome = _evaluate(case, case.subject)
        message = outcome.message
        if message is not None and _outcome(case, case.subject) is None:
            result.warnings.append(f"{case.label}: failure did not reproduce")
            message = None
        case_warnings.update(set(outcome.warnings))
        if message is None:
            result.passed += 1
            continue
        result.failed += 1
        shrunk = _shrink(case, message)
        logger.warning(f"{suite_id}: {case.label}: {message}")
        result.counterexamples.append(
            Counterexample(
                suite=suite_id,
                case=case.label,
                message=message,
                inputs=dict(case.inputs),
                shrunk=str(shrunk) if shrunk is not None else None,
            )
        )
    for text, count in sorted(case_warnings.items()):
        summary = f"{text} in {count} case(s)"
        logger.warning(f"suite {suite_id}: {summary}")
        result.warnings.append(summary)
    result.elapsed = time.perf_counter() - started
    logger.info(
        f"suite {suite_id}: {result.passed} passed, {result.failed} failed "
        f"in {result.elapsed:.2f}s"
    )
    return result


def run_campaign(campaign: TestCampaign) -> CampaignReport:
    logger.info(f"running {len(campaign.suites)} suite(s): {campaign.describe()}")
    report = CampaignReport(campaign)
    for suite_id in sorted(campaign.suites):
        report.results[suite_id] = run_suite(suite_id, campaign)
    return report
