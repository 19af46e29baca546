"""Tests for campaigns, suites, shrinking and the negative control."""

import random
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.cantor import BasicSet, CantorPoint
from src.group import Cover, DepthBelowCover, GroupElement, in_subgroup, parse_element
from src.retraction import retract
from src.verifier.campaign import run_campaign, run_suite
from src.verifier.campaign_config import CampaignConfigError, load_campaign
from src.verifier.generators import CaseGenerator, grid_elements, neighborhoods, odd_sizes, witness_cases
from src.verifier.models import CampaignReport, Counterexample, SuiteResult, TestCampaign
from src.verifier.negative_control import bad_covers, search_negative_control
from src.verifier.shrink import shrink_element
from src.verifier.suite_catalog import CATALOG, SUITE_IDS, get_suite
from src.verifier.suites import SUITES, Case, Outcome, SuiteContext
from src.witness import build_witness

CAMPAIGNS = Path(__file__).resolve().parent.parent / "campaigns"


def _inputs(campaign, suite_id):
    rng = random.Random(f"{campaign.seed}:{suite_id}")
    context = SuiteContext(campaign, rng, CaseGenerator(campaign, rng))
    return [case.inputs for case in SUITES[suite_id](context)]


class TestCatalog:
    """Tests for the suite catalog."""

    def test_every_suite_implemented(self):
        """Test that each catalog id has a registered suite."""
        assert set(SUITE_IDS) == set(SUITES)

    def test_ids_unique(self):
        """Test that suite ids do not repeat."""
        assert len(SUITE_IDS) == len(set(SUITE_IDS))

    def test_get_suite(self):
        """Test lookup by id."""
        assert get_suite("main-theorem").module == "topology-witness"
        assert get_suite("group-laws").to_dict()["module"] == "boolean-group"
        with pytest.raises(KeyError):
            get_suite("no-such-suite")

    def test_catalog_covers_all_modules(self):
        """Test that every module contributes suites."""
        assert {s.module for s in CATALOG} == {"cantor-core", "boolean-group", "retraction", "topology-witness"}


class TestTestCampaign:
    """Tests for campaign parameter validation."""

    def test_defaults_select_every_suite(self):
        """Test the default suite selection."""
        assert TestCampaign().suites == tuple(sorted(SUITE_IDS))

    def test_suites_from_string(self):
        """Test comma and blank separated suite lists."""
        campaign = TestCampaign(suites="maximality, group-laws")
        assert campaign.suites == ("group-laws", "maximality")

    def test_unknown_suite(self):
        """Test that unknown suites are rejected."""
        with pytest.raises(ValidationError, match="unknown suite"):
            TestCampaign(suites=("group-laws", "bogus"))

    def test_unknown_field(self):
        """Test that unknown parameters are rejected."""
        with pytest.raises(ValidationError):
            TestCampaign(depth=3)

    def test_positive_bounds(self):
        """Test that bounds must be positive."""
        with pytest.raises(ValidationError):
            TestCampaign(enum_depth=0)


class TestGenerators:
    """Tests for case generation."""

    def test_element_size_clamped_to_grid(self, small_campaign):
        """Test that requested sizes beyond the grid are clamped."""
        gen = CaseGenerator(small_campaign, random.Random(1))
        assert len(gen.element(50)) == 8

    def test_odd_element_is_odd(self, small_campaign):
        """Test odd element generation."""
        gen = CaseGenerator(small_campaign, random.Random(2))
        assert all(gen.odd_element().is_odd for _ in range(50))

    def test_covers_within_word_length(self, small_campaign):
        """Test that random covers are valid and shallow enough."""
        gen = CaseGenerator(small_campaign, random.Random(3))
        for _ in range(50):
            gamma = gen.cover()
            assert isinstance(gamma, Cover)
            assert gamma.depth <= small_campaign.max_word_length

    def test_point_in(self, small_campaign):
        """Test sampling inside a basic set."""
        gen = CaseGenerator(small_campaign, random.Random(4))
        u = BasicSet("02")
        assert all(gen.point_in(u) in u for _ in range(50))

    def test_witness_cases(self, small_campaign):
        """Test the exhaustive witness cases on the depth-2 grid."""
        cases = list(witness_cases(small_campaign))
        assert len(cases) == 8 * 3
        assert all(retract(f) in u for f, u in cases)

    def test_grid_elements(self):
        """Test exhaustive element generation."""
        assert len(list(grid_elements(3, odd_sizes(5)))) == 8 + 56 + 56
        assert neighborhoods(CantorPoint("02"), 2) == [BasicSet(""), BasicSet("0"), BasicSet("02")]

    def test_same_seed_same_cases(self, small_campaign):
        """Test that a suite's cases depend only on the seed."""
        assert _inputs(small_campaign, "group-laws") == _inputs(small_campaign, "group-laws")
        other = small_campaign.model_copy(update={"seed": 12})
        assert _inputs(small_campaign, "group-laws") != _inputs(other, "group-laws")


class TestShrink:
    """Tests for greedy point removal."""

    def test_shrinks_to_minimal(self):
        """Test shrinking to the single point that matters."""
        f = GroupElement.of("0", "02", "2", "22")
        assert shrink_element(f, lambda g: CantorPoint("2") in g) == GroupElement.of("2")

    def test_round_bound(self):
        """Test that max_rounds limits the removals."""
        f = GroupElement.of("0", "02", "2", "22")
        assert len(shrink_element(f, lambda g: CantorPoint("2") in g, max_rounds=1)) == 3

    def test_pair_removal_keeps_parity(self):
        """Test that pair removals shrink failures that need odd size."""
        f = GroupElement.of("0", "02", "2", "22", "222")
        shrunk = shrink_element(f, lambda g: g.is_odd)
        assert len(shrunk) == 1

    def test_nothing_smaller_fails(self):
        """Test that a minimal failure is returned unchanged."""
        f = GroupElement.of("0")
        assert shrink_element(f, lambda g: len(g) == 1) == f


def _fails_when_large(g):
    if len(g) >= 2:
        return f"size: {len(g)} points"
    return None


class TestRunSuite:
    """Tests for running suites and recording failures."""

    def test_counterexample_is_shrunk(self, small_campaign, monkeypatch):
        """Test that a failing case is recorded with a shrunk subject."""
        subject = GroupElement.of("0", "02", "2", "22")

        def suite(ctx):
            yield Case("big", _fails_when_large, subject=subject, inputs={"f": str(subject)})
            yield Case("small", _fails_when_large, subject=GroupElement.of("0"))

        monkeypatch.setitem(SUITES, "group-laws", suite)
        result = run_suite("group-laws", small_campaign)
        assert (result.passed, result.failed) == (1, 1)
        counterexample = result.counterexamples[0]
        assert counterexample.message == "size: 4 points"
        assert counterexample.inputs == {"f": "{0, 02, 2, 22}"}
        assert len(parse_element(counterexample.shrunk)) == 2

    def test_exception_is_a_failure(self, small_campaign, monkeypatch):
        """Test that errors raised by a check count as failures."""

        def suite(ctx):
            yield Case("boom", lambda _: str(1 // 0))

        monkeypatch.setitem(SUITES, "group-laws", suite)
        result = run_suite("group-laws", small_campaign)
        assert result.failed == 1
        assert result.counterexamples[0].message.startswith("ZeroDivisionError")
        assert result.counterexamples[0].shrunk is None

    def test_flaky_failure_becomes_warning(self, small_campaign, monkeypatch):
        """Test that a failure that does not reproduce is not counted."""
        calls = []

        def flaky(_):
            calls.append(1)
            return "flaky: first call" if len(calls) == 1 else None

        def suite(ctx):
            yield Case("flaky", flaky)

        monkeypatch.setitem(SUITES, "group-laws", suite)
        result = run_suite("group-laws", small_campaign)
        assert (result.passed, result.failed) == (1, 0)
        assert result.warnings == ["flaky: failure did not reproduce"]

    def test_case_warnings_are_counted(self, small_campaign, monkeypatch):
        """Test that warnings from passing cases are summarized once per suite."""
        capped = Outcome(warnings=["cap exceeded: enumeration stopped after 40 elements"])

        def suite(ctx):
            yield Case("first", lambda _: capped)
            yield Case("second", lambda _: capped)
            yield Case("third", lambda _: None)

        monkeypatch.setitem(SUITES, "group-laws", suite)
        result = run_suite("group-laws", small_campaign)
        assert (result.passed, result.failed) == (3, 0)
        assert result.warnings == ["cap exceeded: enumeration stopped after 40 elements in 2 case(s)"]

    def test_capped_main_theorem_reports_truncation(self, small_campaign):
        """Test that witness checks stopped at the cap show up in the suite warnings."""
        campaign = small_campaign.model_copy(update={"enum_cap": 2, "suites": ("main-theorem",)})
        result = run_suite("main-theorem", campaign)
        assert result.failed == 0
        assert len(result.warnings) == 1
        summary = result.warnings[0]
        assert summary.startswith("cap exceeded: enumeration stopped after 2 elements in ")
        truncated = int(summary.rsplit(" in ", 1)[1].split()[0])
        assert 0 < truncated <= result.passed
        report = run_campaign(campaign)
        assert f"  warning: {summary}" in report.render_text()
        assert report.to_dict()["suites"]["main-theorem"]["warnings"] == [summary]

    @pytest.mark.parametrize(
        "suite_id", ["leftmost-odd-stability", "vx-parity", "no-even-landing", "extended-continuity"]
    )
    def test_capped_enumerations_report_truncation(self, small_campaign, suite_id):
        """Test that every suite walking H_Γ reports the cap."""
        campaign = small_campaign.model_copy(update={"enum_cap": 2})
        result = run_suite(suite_id, campaign)
        assert result.failed == 0
        assert [w.split(" in ")[0] for w in result.warnings] == [
            "cap exceeded: enumeration stopped after 2 elements"
        ]

    def test_complete_enumeration_has_no_warnings(self, small_campaign):
        """Test that a suite whose enumerations finish reports nothing."""
        assert run_suite("enumeration-oracle", small_campaign).warnings == []

    def test_depth_below_cover_aborts(self, small_campaign):
        """Test that an enumeration depth below a witness cover is a parameter error."""
        campaign = small_campaign.model_copy(update={"enum_depth": 1, "suites": ("main-theorem",)})
        with pytest.raises(DepthBelowCover):
            run_campaign(campaign)


class TestCampaignRun:
    """Tests for whole campaigns."""

    def test_small_campaign_passes(self, small_campaign):
        """Test that every suite passes at small bounds."""
        report = run_campaign(small_campaign)
        assert set(report.results) == set(SUITE_IDS)
        failures = [c.to_dict() for r in report.ordered() for c in r.counterexamples]
        assert report.all_passed, failures
        assert report.total_failed == 0

    def test_deterministic_lines(self, small_campaign):
        """Test that the machine format is identical across runs."""
        first = run_campaign(small_campaign).render_lines()
        second = run_campaign(small_campaign).render_lines()
        assert first == second
        assert len(first.splitlines()) == len(SUITE_IDS)

    def test_selected_suites_only(self, small_campaign):
        """Test running a subset of suites."""
        campaign = small_campaign.model_copy(update={"suites": ("group-laws", "maximality")})
        report = run_campaign(campaign)
        assert [r.suite_id for r in report.ordered()] == ["group-laws", "maximality"]
        assert report.results["group-laws"].passed == small_campaign.cases

    @pytest.mark.slow
    def test_default_campaign_passes(self):
        """Test the shipped default campaign."""
        report = run_campaign(load_campaign(CAMPAIGNS / "default.cfg"))
        assert report.all_passed, report.render_text()

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "name", ["retraction.cfg", "subgroup-laws.cfg", "acceptance.cfg", "main-theorem.cfg"]
    )
    def test_acceptance_campaigns_pass(self, name):
        """Test the shipped campaigns that encode the acceptance bounds."""
        report = run_campaign(load_campaign(CAMPAIGNS / name))
        assert report.all_passed, report.render_text()


class TestAcceptanceBounds:
    """Tests that the shipped campaign files encode the intended bounds."""

    def test_retraction(self):
        """Test 2000 odd F with |F| <= 9 and words up to length 6."""
        campaign = load_campaign(CAMPAIGNS / "retraction.cfg")
        assert (campaign.cases, campaign.max_set_size, campaign.max_word_length) == (2000, 9, 6)
        assert "retraction-oracle" in campaign.suites

    def test_subgroup_laws(self):
        """Test 50 covers with 500 parity-transfer triples each."""
        campaign = load_campaign(CAMPAIGNS / "subgroup-laws.cfg")
        assert (campaign.covers, campaign.triples_per_cover) == (50, 500)
        assert campaign.suites == ("even-cardinality", "parity-transfer", "subgroup-closure")
        inputs = _inputs(campaign, "parity-transfer")
        assert len(inputs) == 50 * 500

    def test_witness_checks(self):
        """Test |F| in {1, 3, 5} on the depth-3 grid, |u| <= 3 and depth 5."""
        campaign = load_campaign(CAMPAIGNS / "acceptance.cfg")
        assert (campaign.grid_depth, campaign.neighborhood_depth, campaign.enum_depth) == (3, 3, 5)
        assert campaign.enum_cap == 2000
        assert len(list(witness_cases(campaign))) == 120 * 4

    def test_main_theorem(self):
        """Test |F| <= 7 with words up to length 4, |u| <= 4 and depth 6."""
        campaign = load_campaign(CAMPAIGNS / "main-theorem.cfg")
        assert (campaign.max_set_size, campaign.grid_depth) == (7, 4)
        assert (campaign.neighborhood_depth, campaign.enum_depth) == (4, 6)
        assert campaign.suites == ("main-theorem",)
        sizes = odd_sizes(campaign.max_set_size)
        assert sum(1 for _ in grid_elements(campaign.grid_depth, sizes)) == 16 + 560 + 4368 + 11440


class TestReport:
    """Tests for report rendering."""

    @pytest.fixture
    def report(self, small_campaign):
        failing = SuiteResult(
            "maximality",
            passed=3,
            failed=1,
            counterexamples=[
                Counterexample("maximality", "element #2", "evenness: bad", {"f": "{0}"}, shrunk="{0}")
            ],
            elapsed=0.5,
        )
        return CampaignReport(
            small_campaign,
            {"maximality": failing, "group-laws": SuiteResult("group-laws", passed=4, warnings=["w"])},
        )

    def test_lines_sorted_by_suite(self, report):
        """Test the machine format."""
        assert report.render_lines() == "group-laws 4 0\nmaximality 3 1"

    def test_text(self, report):
        """Test the human format."""
        text = report.render_text()
        assert text.startswith("campaign seed=11 ")
        assert "suites: 2 run, 1 passed" in text
        assert "PASS group-laws: 4 passed, 0 failed (0.00s)" in text
        assert "  warning: w" in text
        assert "FAIL maximality: 3 passed, 1 failed (0.50s)" in text
        assert "  counterexample element #2: evenness: bad" in text
        assert "    f = {0}" in text
        assert "    shrunk = {0}" in text

    def test_to_dict(self, report):
        """Test the JSON structure."""
        data = report.to_dict()
        assert data["all_passed"] is False
        assert data["campaign"]["seed"] == 11
        assert data["suites"]["maximality"]["counterexamples"][0]["shrunk"] == "{0}"
        assert data["suites"]["maximality"]["module"] == "retraction"
        assert data["suites"]["group-laws"]["label"] == get_suite("group-laws").label
        assert report.total_failed == 1


class TestNegativeControl:
    """Tests for the search with covers not built by build_witness."""

    def test_trivial_cover_fails(self, small_campaign, three_points):
        """Test that H = {0, 2} moves r({0, 2, 22}) out of U_0."""
        found = search_negative_control(
            small_campaign,
            cases=[(three_points, BasicSet("0"))],
            covers=[Cover.trivial()],
        )
        assert found is not None
        assert found.h == GroupElement.of("0", "2")
        assert found.image == CantorPoint("22")
        assert in_subgroup(found.bad_gamma, found.h)
        assert "r(f △ h) = 22" in found.render()

    def test_witness_cover_has_no_negative(self, small_campaign, three_points):
        """Test that the witness cover itself never moves r out of U."""
        u = BasicSet("0")
        gamma = build_witness(three_points, u).gamma
        assert search_negative_control(small_campaign, cases=[(three_points, u)], covers=[gamma]) is None

    def test_default_search_finds_one(self, small_campaign):
        """Test the search over the campaign's witness cases."""
        found = search_negative_control(small_campaign)
        assert found is not None
        assert retract(found.f ^ found.h) not in found.u

    def test_empty_search(self, small_campaign):
        """Test that no cases give no result."""
        assert search_negative_control(small_campaign, cases=[]) is None

    def test_bad_covers(self, three_points):
        """Test the trivial and split covers."""
        report = build_witness(three_points, BasicSet.whole())
        assert [str(c) for c in bad_covers(report)] == ["{*}", "{0, 20, 22}"]


class TestCampaignConfig:
    """Tests for campaign files."""

    def test_load_file(self, tmp_path):
        """Test reading a key = value file."""
        path = tmp_path / "c.cfg"
        path.write_text("# comment\nseed = 7\nmax_set_size = 5\nsuites = group-laws, maximality\n")
        campaign = load_campaign(path)
        assert campaign.seed == 7
        assert campaign.max_set_size == 5
        assert campaign.suites == ("group-laws", "maximality")

    def test_overrides_win(self, tmp_path):
        """Test that explicit overrides replace file values."""
        path = tmp_path / "c.cfg"
        path.write_text("seed = 7\n")
        assert load_campaign(path, seed=99, enum_cap=None).seed == 99
        assert load_campaign(None, suites=("maximality",)).suites == ("maximality",)

    def test_unknown_key_line(self, tmp_path):
        """Test that an unknown key is reported with its line."""
        path = tmp_path / "c.cfg"
        path.write_text("seed = 7\n\ndepht = 3\n")
        with pytest.raises(CampaignConfigError) as excinfo:
            load_campaign(path)
        assert excinfo.value.line == 3
        assert str(excinfo.value).startswith("line 3: unknown key 'depht'")

    def test_missing_equals(self, tmp_path):
        """Test a line that is not key = value."""
        path = tmp_path / "c.cfg"
        path.write_text("seed 7\n")
        with pytest.raises(CampaignConfigError, match="line 1"):
            load_campaign(path)

    def test_invalid_value_line(self, tmp_path):
        """Test that a bad value is reported at its key's line."""
        path = tmp_path / "c.cfg"
        path.write_text("seed = 1\nmax_set_size = zero\n")
        with pytest.raises(CampaignConfigError) as excinfo:
            load_campaign(path)
        assert excinfo.value.line == 2
        assert "max_set_size" in str(excinfo.value)

    def test_invalid_override_has_no_line(self, tmp_path):
        """Test that errors in overrides are not blamed on the file."""
        path = tmp_path / "c.cfg"
        path.write_text("seed = 1\n")
        with pytest.raises(CampaignConfigError) as excinfo:
            load_campaign(path, enum_cap=0)
        assert excinfo.value.line is None

    def test_missing_file(self, tmp_path):
        """Test a nonexistent campaign file."""
        with pytest.raises(CampaignConfigError, match="not found"):
            load_campaign(tmp_path / "missing.cfg")

    @pytest.mark.parametrize(
        "name",
        [
            "default.cfg",
            "group-laws.cfg",
            "retraction.cfg",
            "subgroup-laws.cfg",
            "acceptance.cfg",
            "main-theorem.cfg",
        ],
    )
    def test_shipped_campaigns_load(self, name):
        """Test that the shipped campaign files are valid."""
        assert isinstance(load_campaign(CAMPAIGNS / name), TestCampaign)
