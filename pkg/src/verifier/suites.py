"""Suite implementations.

Each suite is a generator of Case objects registered under its catalog id.
A case's check returns None on success or a "kind: detail" message on
failure. When a case has a subject element, the check is called with it
(or with a shrunk version of it) so failures can be minimized. Checks that
enumerate H_Γ return an Outcome instead, carrying the cap warning.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, product
from typing import Callable, Iterator, Optional, Union

from ..cantor import (
    DIGITS,
    BasicSet,
    CantorPoint,
    Ordering,
    PrefixRelation,
    Tail,
    compare,
    contains,
    grid_points,
    is_left_of,
    left_endpoint,
    prefix_relation,
    right_endpoint,
)
from ..group import (
    Classification,
    Cover,
    GroupElement,
    SubgroupEnumeration,
    classify,
    enumerate_subgroup,
    in_subgroup,
    iter_covers,
    refine_to_cover,
)
from ..retraction import (
    brute_force_retract,
    even_prefixes,
    maximal_even_prefixes,
    maximal_parts_cover,
    retract,
    retract_extended,
)
from ..witness import (
    build_extended_witness,
    build_witness,
    check_subspace_embedding,
    even_cover_of_vx,
    leftmost_odd_part,
    verify_witness,
)
from .generators import (
    CaseGenerator,
    even_sizes,
    grid_elements,
    neighborhoods,
    witness_cases,
)
from .models import TestCampaign
from .negative_control import search_negative_control


@dataclass
class Outcome:
    """A check's failure message (None on success) and the warnings it raised."""

    message: Optional[str] = None
    warnings: list[str] = field(default_factory=list)


Check = Callable[[Optional[GroupElement]], Union[Optional[str], Outcome]]


@dataclass
class Case:
    label: str
    check: Check
    subject: Optional[GroupElement] = None
    inputs: dict[str, str] = field(default_factory=dict)


@dataclass
class SuiteContext:
    campaign: TestCampaign
    rng: random.Random
    gen: CaseGenerator


SuiteBody = Callable[[SuiteContext], Iterator[Case]]

SUITES: dict[str, SuiteBody] = {}


def register(suite_id: str) -> Callable[[SuiteBody], SuiteBody]:
    def decorator(body: SuiteBody) -> SuiteBody:
        SUITES[suite_id] = body
        return body

    return decorator


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


# -- cantor-core ----------------------------------------------------------


def _check_canonical(word: str, tail: Tail, _: Optional[GroupElement] = None) -> Optional[str]:
    p = CantorPoint(word, tail)
    again = CantorPoint(p.word, p.tail)
    if again != p:
        return f"not idempotent: {p} became {again}"
    if p.word.endswith(tail.value):
        return f"not canonical: word {p.word!r} ends with its tail digit"
    return None


@register("canonical-idempotent")
def _canonical_idempotent(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        tail = ctx.rng.choice(list(Tail))
        word = ctx.gen.word(ctx.campaign.max_word_length) + tail.value * ctx.rng.randint(0, 3)
        yield Case(
            f"point #{index}",
            partial(_check_canonical, word, tail),
            inputs={"word": word, "tail": tail.value},
        )


def _check_order(a: CantorPoint, b: CantorPoint, c: CantorPoint, _=None) -> Optional[str]:
    for x, y in ((a, b), (b, c), (a, c)):
        forward, backward = compare(x, y), compare(y, x)
        if forward != -backward:
            return f"not antisymmetric: compare({x}, {y}) = {forward.name}, reverse {backward.name}"
        exact = _sign((x.value() - y.value()).numerator)
        if forward != exact:
            return f"disagrees with real order: compare({x}, {y}) = {forward.name}"
    if compare(a, b) <= 0 and compare(b, c) <= 0 and compare(a, c) > 0:
        return f"not transitive: {a} <= {b} <= {c} but {a} > {c}"
    return None


@register("order-total")
def _order_total(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        a, b, c = (ctx.gen.point(any_tail=True) for _ in range(3))
        yield Case(
            f"triple #{index}",
            partial(_check_order, a, b, c),
            inputs={"a": str(a), "b": str(b), "c": str(c)},
        )


_MIRROR = {
    PrefixRelation.U_CONTAINS_V: PrefixRelation.V_CONTAINS_U,
    PrefixRelation.V_CONTAINS_U: PrefixRelation.U_CONTAINS_V,
    PrefixRelation.EQUAL: PrefixRelation.EQUAL,
    PrefixRelation.DISJOINT: PrefixRelation.DISJOINT,
}


def _check_tree(
    u: BasicSet, v: BasicSet, samples: tuple[CantorPoint, ...], _=None
) -> Optional[str]:
    relation = prefix_relation(u, v)
    if prefix_relation(v, u) is not _MIRROR[relation]:
        return f"inconsistent: {u} vs {v} is {relation.value}, reverse {prefix_relation(v, u).value}"
    if (relation is PrefixRelation.EQUAL) != (u == v):
        return f"equality mismatch for {u} and {v}"
    for p in samples:
        if not contains(v, p):
            return f"sampler: {p} not in {v}"
        if relation in (PrefixRelation.U_CONTAINS_V, PrefixRelation.EQUAL) and not contains(u, p):
            return f"containment: {u} contains {v} but not its point {p}"
        if relation is PrefixRelation.DISJOINT and contains(u, p):
            return f"disjointness: {u} and {v} share the point {p}"
    return None


@register("tree-property")
def _tree_property(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        u = ctx.gen.basic_set()
        # bias towards related pairs: half of the v are extensions of u
        if ctx.rng.random() < 0.5:
            v = BasicSet(u.prefix + ctx.gen.word(2))
        else:
            v = ctx.gen.basic_set()
        samples = tuple(ctx.gen.point_in(v) for _ in range(4))
        yield Case(
            f"pair #{index}",
            partial(_check_tree, u, v, samples),
            inputs={"u": str(u), "v": str(v)},
        )


def _check_endpoints(u: BasicSet, _=None) -> Optional[str]:
    left, right = left_endpoint(u), right_endpoint(u)
    if not contains(u, left) or not contains(u, right):
        return f"endpoint: {u} misses {left} or {right}"
    if compare(left, right) is Ordering.GREATER:
        return f"endpoint order: {left} > {right}"
    lhs, rhs = u.children()
    if not is_left_of(lhs, rhs) or is_left_of(rhs, lhs):
        return f"sibling order: {lhs} and {rhs} are misordered"
    return None


@register("endpoint-consistency")
def _endpoint_consistency(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        u = ctx.gen.basic_set()
        yield Case(f"set #{index}", partial(_check_endpoints, u), inputs={"u": str(u)})


# -- boolean-group --------------------------------------------------------


def _check_group_laws(b: GroupElement, c: GroupElement, a: Optional[GroupElement]) -> Optional[str]:
    assert a is not None
    identity = GroupElement.identity()
    if (a ^ b) ^ c != a ^ (b ^ c):
        return "associativity: (a △ b) △ c != a △ (b △ c)"
    if a ^ b != b ^ a:
        return "commutativity: a △ b != b △ a"
    if a ^ identity != a:
        return "identity: a △ {} != a"
    if a ^ a != identity:
        return "self-inverse: a △ a != {}"
    return None


@register("group-laws")
def _group_laws(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        a, b, c = (ctx.gen.any_element() for _ in range(3))
        yield Case(
            f"triple #{index}",
            partial(_check_group_laws, b, c),
            subject=a,
            inputs={"a": str(a), "b": str(b), "c": str(c)},
        )


def _subgroup_sample(ctx: SuiteContext, gamma: Cover) -> list[GroupElement]:
    return list(enumerate_subgroup(gamma, gamma.depth + 1, ctx.campaign.enum_cap))


def _check_closure(gamma: Cover, h1: GroupElement, h2: GroupElement, _=None) -> Optional[str]:
    if not in_subgroup(gamma, h1) or not in_subgroup(gamma, h2):
        return f"enumeration: emitted element outside H_Γ for {gamma}"
    if not in_subgroup(gamma, h1 ^ h2):
        return f"closure: {h1} △ {h2} leaves H_Γ for {gamma}"
    return None


@register("subgroup-closure")
def _subgroup_closure(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.covers):
        gamma = ctx.gen.cover()
        elements = _subgroup_sample(ctx, gamma)
        for pair in range(10):
            h1, h2 = ctx.rng.choice(elements), ctx.rng.choice(elements)
            yield Case(
                f"cover #{index} pair #{pair}",
                partial(_check_closure, gamma, h1, h2),
                inputs={"gamma": str(gamma), "h1": str(h1), "h2": str(h2)},
            )


def _check_even(gamma: Cover, h: GroupElement, f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    if len(h) % 2:
        return f"odd element: {h} in H_Γ for {gamma}"
    if (f ^ h).parity != f.parity:
        return f"parity: F △ H has parity {(f ^ h).parity}, F has {f.parity}"
    return None


@register("even-cardinality")
def _even_cardinality(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.covers):
        gamma = ctx.gen.cover()
        for position, h in enumerate(_subgroup_sample(ctx, gamma)):
            f = ctx.gen.odd_element()
            yield Case(
                f"cover #{index} element #{position}",
                partial(_check_even, gamma, h),
                subject=f,
                inputs={"gamma": str(gamma), "h": str(h), "f": str(f)},
            )


def _check_parity_transfer(
    part: BasicSet, h: GroupElement, f: Optional[GroupElement]
) -> Optional[str]:
    assert f is not None
    before = classify(part, f) is Classification.ODD
    after = classify(part, f ^ h) is Classification.ODD
    if before != after:
        return f"parity transfer: {part} is F-odd={before} but (F △ H)-odd={after}"
    return None


@register("parity-transfer")
def _parity_transfer(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.covers):
        gamma = ctx.gen.cover()
        elements = _subgroup_sample(ctx, gamma)
        for triple in range(ctx.campaign.triples_per_cover):
            f = ctx.gen.any_element()
            h = ctx.rng.choice(elements)
            part = ctx.rng.choice(gamma.parts)
            yield Case(
                f"cover #{index} triple #{triple}",
                partial(_check_parity_transfer, part, h),
                subject=f,
                inputs={"gamma": str(gamma), "part": str(part), "h": str(h), "f": str(f)},
            )


def _check_cover_complete(gamma: Cover, special: tuple[BasicSet, ...], _=None) -> Optional[str]:
    depth = gamma.depth
    for letters in product(DIGITS, repeat=depth):
        word = "".join(letters)
        owners = [part for part in gamma if word.startswith(part.prefix)]
        if len(owners) != 1:
            return f"completeness: word {word} extends {len(owners)} parts of {gamma}"
    for part in gamma:
        if part in special:
            continue
        if any(prefix_relation(part, s) is not PrefixRelation.DISJOINT for s in special):
            return f"refinement: filler part {part} meets a special part"
    missing = [s for s in special if s not in gamma]
    if missing:
        return f"refinement: special parts {missing} dropped"
    return None


@register("cover-completeness")
def _cover_completeness(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.covers):
        base = ctx.gen.cover()
        yield Case(
            f"random cover #{index}",
            partial(_check_cover_complete, base, ()),
            inputs={"gamma": str(base)},
        )
        special = tuple(p for p in base if ctx.rng.random() < 0.5)
        refined = refine_to_cover(special)
        yield Case(
            f"refined cover #{index}",
            partial(_check_cover_complete, refined, special),
            inputs={"special": str(special), "gamma": str(refined)},
        )


def _check_enumeration_oracle(gamma: Cover, depth: int, _=None) -> Optional[str]:
    grid = grid_points(depth)
    oracle = [
        GroupElement(points)
        for size in range(len(grid) + 1)
        for points in combinations(grid, size)
        if in_subgroup(gamma, GroupElement(points))
    ]
    emitted = list(enumerate_subgroup(gamma, depth, 2 ** len(grid)))
    if emitted != oracle:
        return f"oracle: enumeration of {gamma} at depth {depth} differs from the filtered power set"
    return None


@register("enumeration-oracle")
def _enumeration_oracle(ctx: SuiteContext) -> Iterator[Case]:
    for gamma in iter_covers(2):
        for depth in range(max(1, gamma.depth), 3):
            yield Case(
                f"{gamma} depth {depth}",
                partial(_check_enumeration_oracle, gamma, depth),
                inputs={"gamma": str(gamma), "depth": str(depth)},
            )


# -- retraction -----------------------------------------------------------


def _check_identity(x: CantorPoint, _=None) -> Optional[str]:
    image = retract(GroupElement((x,)))
    if image != x:
        return f"identity: retract({{{x}}}) = {image}"
    return None


@register("retraction-identity")
def _retraction_identity(ctx: SuiteContext) -> Iterator[Case]:
    for x in grid_points(ctx.campaign.max_word_length):
        for tail in Tail:
            point = CantorPoint(x.expansion(ctx.campaign.max_word_length), tail)
            yield Case(f"{point}", partial(_check_identity, point), inputs={"x": str(point)})


def _check_membership(f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    image = retract(f)
    if image not in f:
        return f"membership: retract({f}) = {image} is not a point of F"
    return None


@register("retraction-membership")
def _retraction_membership(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        f = ctx.gen.odd_element()
        yield Case(f"element #{index}", _check_membership, subject=f, inputs={"f": str(f)})


def _check_odd_residue(f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    if not f.is_odd:
        return None
    residue = maximal_even_prefixes(f).residue
    if not residue.is_odd:
        return f"residue: {residue} of {f} is even"
    return None


@register("odd-residue")
def _odd_residue(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        f = ctx.gen.odd_element()
        yield Case(f"element #{index}", _check_odd_residue, subject=f, inputs={"f": str(f)})


def _check_oracle(max_word_length: int, f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    depth = max(f.separation_depth(), max_word_length + 2)
    fast, slow = retract(f), brute_force_retract(f, depth)
    if fast != slow:
        return f"oracle: retract({f}) = {fast} but brute force at depth {depth} gives {slow}"
    return None


@register("retraction-oracle")
def _retraction_oracle(ctx: SuiteContext) -> Iterator[Case]:
    check = partial(_check_oracle, ctx.campaign.max_word_length)
    for index in range(ctx.campaign.cases):
        f = ctx.gen.odd_element()
        yield Case(f"random #{index}", check, subject=f, inputs={"f": str(f)})
    sizes = [s for s in (1, 3, 5) if s <= ctx.campaign.max_set_size]
    for f in grid_elements(ctx.campaign.grid_depth, sizes):
        yield Case(f"grid {f}", check, subject=f, inputs={"f": str(f)})


def _check_maximality(f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    if not f:
        return None
    parts = maximal_even_prefixes(f).maximal_even
    for u, v in combinations(parts, 2):
        if prefix_relation(u, v) is not PrefixRelation.DISJOINT:
            return f"disjointness: maximal parts {u} and {v} of {f} overlap"
    for part in parts:
        if classify(part, f) is not Classification.EVEN:
            return f"evenness: part {part} of {f} is {classify(part, f).value}"
        for ancestor in part.ancestors():
            if classify(ancestor, f) is Classification.EVEN:
                return f"maximality: {part} has the even ancestor {ancestor} for {f}"
    return None


@register("maximality")
def _maximality(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        f = ctx.gen.nonempty_element()
        yield Case(f"element #{index}", _check_maximality, subject=f, inputs={"f": str(f)})


def _check_union(f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    if not f:
        return None
    decomposition = maximal_even_prefixes(f)
    for u in even_prefixes(f, f.separation_depth()):
        if not maximal_parts_cover(decomposition, u):
            return f"union: even prefix {u} of {f} lies outside every maximal part"
    return None


@register("union-property")
def _union_property(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        f = ctx.gen.nonempty_element()
        yield Case(f"element #{index}", _check_union, subject=f, inputs={"f": str(f)})


def _check_even_union(f: Optional[GroupElement]) -> Optional[str]:
    assert f is not None
    if not f:
        return None
    decomposition = maximal_even_prefixes(f)
    covered = [p for p in f if decomposition.covered(p)]
    if len(covered) % 2:
        return f"union parity: maximal parts of {f} cover {len(covered)} points"
    evens = even_prefixes(f, f.separation_depth())
    by_all = [p for p in f if any(contains(u, p) for u in evens)]
    if by_all != covered:
        return f"union: even prefixes of {f} cover {by_all}, maximal parts cover {covered}"
    return None


@register("maximal-even-union")
def _maximal_even_union(ctx: SuiteContext) -> Iterator[Case]:
    for index in range(ctx.campaign.cases):
        f = ctx.gen.nonempty_element()
        yield Case(f"element #{index}", _check_even_union, subject=f, inputs={"f": str(f)})


def _check_restriction(s: Optional[GroupElement]) -> Optional[str]:
    assert s is not None
    allowed = set(s.points) | {CantorPoint.zero()}
    for size in range(len(s) + 1):
        for points in combinations(s.points, size):
            f = GroupElement(points)
            image = retract_extended(f)
            if image not in allowed:
                return f"restriction: r̂({f}) = {image} leaves the generators {s}"
    return None


@register("subgroup-restriction")
def _subgroup_restriction(ctx: SuiteContext) -> Iterator[Case]:
    size = min(ctx.campaign.max_set_size, 7)
    for index in range(max(1, ctx.campaign.cases // 10)):
        s = ctx.gen.element(size)
        yield Case(f"generators #{index}", _check_restriction, subject=s, inputs={"s": str(s)})


# -- topology-witness -----------------------------------------------------


def _witness_inputs(f: GroupElement, u: BasicSet) -> dict[str, str]:
    return {"f": str(f), "u": str(u)}


def _capped(enumeration: SubgroupEnumeration) -> Outcome:
    return Outcome(warnings=[enumeration.warning] if enumeration.warning else [])


def _check_main_theorem(
    u: BasicSet, depth: int, cap: int, f: Optional[GroupElement]
) -> Union[str, Outcome]:
    assert f is not None
    report = build_witness(f, u)
    problems = report.violations(f)
    if problems:
        return f"witness: {problems[0]}"
    result = verify_witness(report, f, depth, cap)
    if not result.passed:
        return (
            f"continuity: H = {result.counterexample} sends r(F △ H) to {result.image} "
            f"outside v_x = {report.v_x}"
        )
    return Outcome(warnings=result.warnings)


@register("main-theorem")
def _main_theorem(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    for f, u in witness_cases(c):
        yield Case(
            f"{f} in {u}",
            partial(_check_main_theorem, u, c.enum_depth, c.enum_cap),
            subject=f,
            inputs=_witness_inputs(f, u),
        )


def _check_leftmost(
    u: BasicSet, depth: int, cap: int, f: Optional[GroupElement]
) -> Union[str, Outcome]:
    assert f is not None
    report = build_witness(f, u)
    if leftmost_odd_part(report.gamma, f) != report.v_x:
        return f"leftmost: leftmost F-odd part is not v_x = {report.v_x}"
    enumeration = enumerate_subgroup(report.gamma, max(depth, report.gamma.depth), cap)
    for h in enumeration:
        part = leftmost_odd_part(report.gamma, f ^ h)
        if part != report.v_x:
            return f"leftmost: for H = {h} the leftmost odd part is {part}, not {report.v_x}"
    return _capped(enumeration)


@register("leftmost-odd-stability")
def _leftmost_odd_stability(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    for f, u in witness_cases(c):
        yield Case(
            f"{f} in {u}",
            partial(_check_leftmost, u, c.enum_depth, c.enum_cap),
            subject=f,
            inputs=_witness_inputs(f, u),
        )


def _check_vx_parity(
    u: BasicSet, depth: int, cap: int, f: Optional[GroupElement]
) -> Union[str, Outcome]:
    assert f is not None
    report = build_witness(f, u)
    enumeration = enumerate_subgroup(report.gamma, max(depth, report.gamma.depth), cap)
    for h in enumeration:
        if classify(report.v_x, f ^ h) is not Classification.ODD:
            return f"v_x parity: v_x = {report.v_x} is not odd for H = {h}"
    return _capped(enumeration)


@register("vx-parity")
def _vx_parity(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    for f, u in witness_cases(c):
        yield Case(
            f"{f} in {u}",
            partial(_check_vx_parity, u, c.enum_depth, c.enum_cap),
            subject=f,
            inputs=_witness_inputs(f, u),
        )


def _check_no_even_landing(
    u: BasicSet, depth: int, cap: int, f: Optional[GroupElement]
) -> Union[str, Outcome]:
    assert f is not None
    report = build_witness(f, u)
    enumeration = enumerate_subgroup(report.gamma, max(depth, report.gamma.depth), cap)
    for h in enumeration:
        g = f ^ h
        landing = report.gamma.part_containing(retract(g))
        if classify(landing, g) is Classification.EVEN:
            return f"even landing: r(F △ H) lies in the (F △ H)-even part {landing} for H = {h}"
        cover = even_cover_of_vx(report, g)
        if cover is not None:
            return f"even cover: {cover} is (F △ H)-even and contains v_x for H = {h}"
    return _capped(enumeration)


@register("no-even-landing")
def _no_even_landing(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    for f, u in witness_cases(c):
        yield Case(
            f"{f} in {u}",
            partial(_check_no_even_landing, u, c.enum_depth, c.enum_cap),
            subject=f,
            inputs=_witness_inputs(f, u),
        )


def _check_embedding(
    x: CantorPoint, v_x: BasicSet, gamma: Cover, depth: int, cap: int, _=None
) -> Union[str, Outcome]:
    result = check_subspace_embedding(x, v_x, gamma, max(depth, gamma.depth), cap)
    if not result.passed:
        return f"embedding: {{{x}}} △ {result.counterexample} = {{{result.image}}} leaves {v_x}"
    return Outcome(warnings=result.warnings)


@register("subspace-embedding")
def _subspace_embedding(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    seen: set[tuple[BasicSet, Cover]] = set()
    for f, u in witness_cases(c):
        report = build_witness(f, u)
        key = (report.v_x, report.gamma)
        if key in seen:
            continue
        seen.add(key)
        for x in grid_points(c.grid_depth):
            if not contains(report.v_x, x):
                continue
            yield Case(
                f"{x} in {report.v_x} under {report.gamma}",
                partial(_check_embedding, x, report.v_x, report.gamma, c.enum_depth, c.enum_cap),
                inputs={"x": str(x), "v_x": str(report.v_x), "gamma": str(report.gamma)},
            )


def _check_extended(
    u: BasicSet, depth: int, cap: int, f: Optional[GroupElement]
) -> Union[Optional[str], Outcome]:
    assert f is not None
    if f.is_odd:
        if build_extended_witness(f, u) != build_witness(f, u):
            return "extended: odd witness differs from build_witness"
    elif not contains(u, CantorPoint.zero()):
        return None
    report = build_extended_witness(f, u)
    result = verify_witness(report, f, max(depth, report.gamma.depth), cap)
    if not result.passed:
        return f"extended: H = {result.counterexample} sends r̂ to {result.image} outside {report.v_x}"
    return Outcome(warnings=result.warnings)


@register("extended-continuity")
def _extended_continuity(ctx: SuiteContext) -> Iterator[Case]:
    c = ctx.campaign
    zero_neighborhoods = neighborhoods(CantorPoint.zero(), c.neighborhood_depth)
    for f in grid_elements(c.grid_depth, even_sizes(min(c.max_set_size, 4))):
        for u in zero_neighborhoods:
            yield Case(
                f"{f} in {u}",
                partial(_check_extended, u, c.enum_depth, c.enum_cap),
                subject=f,
                inputs=_witness_inputs(f, u),
            )
    for index in range(ctx.campaign.cases // 10):
        f = ctx.gen.odd_element()
        u = ctx.rng.choice(neighborhoods(retract(f), c.neighborhood_depth))
        yield Case(
            f"odd #{index}",
            partial(_check_extended, u, c.enum_depth, c.enum_cap),
            subject=f,
            inputs=_witness_inputs(f, u),
        )


def _check_negative_control(campaign: TestCampaign, _=None) -> Optional[str]:
    found = search_negative_control(campaign)
    if found is None:
        return "negative control: no bad cover moved r outside its neighborhood"
    if not in_subgroup(found.bad_gamma, found.h):
        return f"negative control: {found.h} is not in H_Γ for {found.bad_gamma}"
    if found.bad_gamma == build_witness(found.f, found.u).gamma:
        return "negative control: the bad cover is the witness cover"
    if contains(found.u, retract(found.f ^ found.h)):
        return f"negative control: {found.render()} does not reproduce"
    return None


@register("negative-control")
def _negative_control(ctx: SuiteContext) -> Iterator[Case]:
    yield Case(
        "search",
        partial(_check_negative_control, ctx.campaign),
        inputs={"grid_depth": str(ctx.campaign.grid_depth)},
    )
