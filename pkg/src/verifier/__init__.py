"""Property-test campaigns for the retraction construction.

Every invariant of the point, group, retraction and witness modules is a
suite in `suite_catalog.CATALOG`; `campaign.run_campaign` executes a
seeded selection of suites and aggregates pass/fail counts and
counterexamples into a `CampaignReport`. Failures are data, never
exceptions; only precondition errors caused by the campaign parameters
abort a run.
"""
