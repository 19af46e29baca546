"""Suite catalog for verification campaigns.

Single source of truth mapping each checked invariant to a suite id.
Consumed by:
  - `models.py`: to validate the suite selection of a TestCampaign.
  - `suites.py`: every id here has exactly one registered implementation.
  - `cli.py`: for `--suite` choices.
  - `CampaignReport.to_dict`: each suite's label, module and invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

Module = Literal["cantor-core", "boolean-group", "retraction", "topology-witness"]


@dataclass(frozen=True)
class Suite:
    id: str
    label: str
    module: Module
    invariant: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "module": self.module,
            "invariant": self.invariant,
        }


CATALOG: tuple[Suite, ...] = (
    # cantor-core
    Suite(
        "canonical-idempotent",
        "Canonical form",
        "cantor-core",
        "canonicalizing a canonical point changes nothing; words never end in the tail digit",
    ),
    Suite(
        "order-total",
        "Total order",
        "cantor-core",
        "compare is antisymmetric, transitive and agrees with the exact real values",
    ),
    Suite(
        "tree-property",
        "Prefix tree",
        "cantor-core",
        "prefix_relation is consistent and u_contains_v implies pointwise containment",
    ),
    Suite(
        "endpoint-consistency",
        "Endpoints",
        "cantor-core",
        "every basic set contains both endpoints; disjoint sets are ordered by endpoints",
    ),
    # boolean-group
    Suite(
        "group-laws",
        "Group laws",
        "boolean-group",
        "symmetric difference is associative, commutative, self-inverse with identity {}",
    ),
    Suite(
        "subgroup-closure",
        "Subgroup closure",
        "boolean-group",
        "H1 △ H2 stays in H_Γ for enumerated H1, H2",
    ),
    Suite(
        "even-cardinality",
        "Even cardinality",
        "boolean-group",
        "every element of H_Γ is even, so F △ H keeps the parity of F",
    ),
    Suite(
        "parity-transfer",
        "Parity transfer",
        "boolean-group",
        "a part of Γ is (F △ H)-odd iff it is F-odd",
    ),
    Suite(
        "cover-completeness",
        "Cover completeness",
        "boolean-group",
        "every word of the cover depth extends exactly one part",
    ),
    Suite(
        "enumeration-oracle",
        "Enumeration oracle",
        "boolean-group",
        "enumerate_subgroup equals the filtered power set of the grid at depth <= 2",
    ),
    # retraction
    Suite(
        "retraction-identity",
        "Retraction law",
        "retraction",
        "retract({x}) = x",
    ),
    Suite(
        "retraction-membership",
        "Membership",
        "retraction",
        "retract(F) is a point of F",
    ),
    Suite(
        "odd-residue",
        "Odd residue",
        "retraction",
        "the residue of an odd element is odd",
    ),
    Suite(
        "retraction-oracle",
        "Oracle equivalence",
        "retraction",
        "retract agrees with brute_force_retract",
    ),
    Suite(
        "maximality",
        "Maximality",
        "retraction",
        "maximal even parts are even, pairwise disjoint and have no even ancestor",
    ),
    Suite(
        "union-property",
        "Union property",
        "retraction",
        "every even prefix lies inside some maximal even part",
    ),
    Suite(
        "maximal-even-union",
        "Even union",
        "retraction",
        "the union of the maximal even parts is itself even",
    ),
    Suite(
        "subgroup-restriction",
        "Generated subgroup",
        "retraction",
        "odd subsets of S retract into S, so r̂ maps the subgroup generated by S onto S ∪ {0}",
    ),
    # topology-witness
    Suite(
        "main-theorem",
        "Main theorem",
        "topology-witness",
        "r(F △ H) ∈ V_x for every enumerated H in H_Γ",
    ),
    Suite(
        "leftmost-odd-stability",
        "Leftmost odd part",
        "topology-witness",
        "the leftmost (F △ H)-odd part of Γ is V_x",
    ),
    Suite(
        "vx-parity",
        "Parity of V_x",
        "topology-witness",
        "V_x is (F △ H)-odd",
    ),
    Suite(
        "no-even-landing",
        "No even landing",
        "topology-witness",
        "r(F △ H) never lies in an (F △ H)-even part, and no maximal (F △ H)-even set contains V_x",
    ),
    Suite(
        "subspace-embedding",
        "Subspace embedding",
        "topology-witness",
        "(x + H_Γ) ∩ C ⊆ V_x",
    ),
    Suite(
        "extended-continuity",
        "Extended retraction",
        "topology-witness",
        "r̂(F △ H) ∈ V for witnesses of even elements",
    ),
    Suite(
        "negative-control",
        "Negative control",
        "topology-witness",
        "covers not built by build_witness admit an H sending r outside the neighborhood",
    ),
)

SUITE_IDS: tuple[str, ...] = tuple(s.id for s in CATALOG)


def get_suite(suite_id: str) -> Suite:
    for suite in CATALOG:
        if suite.id == suite_id:
            return suite
    raise KeyError(suite_id)
