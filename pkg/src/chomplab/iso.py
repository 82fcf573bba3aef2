"""Bounded rule comparison: fingerprints, minimal counterexamples, reduction
of rules that never use their top scores, standardness tests, and the
adjacent-score swap checker.

Two rules are isomorphic when their ordinal maps coincide on every position.
Everything here is a semi-decision: agreement is only ever certified up to a
stated volume frontier, and every report carries that bound.  Disagreement,
on the other hand, is exact - the first differing position in canonical
order is a minimal-volume counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

from .positions import Position, enumerate_positions, moves
from .rules import NormalizedRule, normalize, standard_rule
from .solver import ordinal_table

# Separates every non-isomorphic pair of rules with at most four players,
# with headroom, while staying cheap enough for CI.
DEFAULT_BOUND = 12


def signature(rule: NormalizedRule, max_volume: int) -> tuple[int, ...]:
    """Ordinals in canonical enumeration order.  Equal signatures are exactly
    agreement of the two ordinal maps on every position up to the bound."""
    table = ordinal_table(rule, max_volume)
    return tuple(table.entries[p] for p in enumerate_positions(max_volume))


@dataclass(frozen=True)
class IsoVerdict:
    outcome: str  # "agrees_up_to" | "counterexample"
    bound: int
    witness: Position | None = None
    ordinals: tuple[int, int] | None = None  # witness ordinal under f, under g

    @property
    def agrees(self) -> bool:
        return self.outcome == "agrees_up_to"

    @property
    def min_volume(self) -> int | None:
        """Volume of the minimal distinguishing position, if any."""
        return None if self.witness is None else sum(self.witness)

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness": None if self.witness is None else list(self.witness),
            "minVolume": self.min_volume,
            "bound": self.bound,
        }


def iso_check(f: NormalizedRule, g: NormalizedRule, max_volume: int) -> IsoVerdict:
    """Compare two rules position by position up to the bound.  The rules
    need not have the same number of players; each table is built with its
    own top-ordinal exclusion."""
    tf = ordinal_table(f, max_volume)
    tg = ordinal_table(g, max_volume)
    for p in enumerate_positions(max_volume):
        a, b = tf.entries[p], tg.entries[p]
        if a != b:
            return IsoVerdict("counterexample", max_volume, p, (a, b))
    return IsoVerdict("agrees_up_to", max_volume)


def thin_iso(f: NormalizedRule, g: NormalizedRule) -> bool:
    """Exact isomorphism test restricted to single-row and single-column
    positions: those ordinals are min(k, descent), so the two rules agree on
    all of them iff their descent indices match.  No volume bound needed."""
    return f.descent_index == g.descent_index


def max_ordinal_witness(rule: NormalizedRule,
                        max_volume: int) -> tuple[int, Position]:
    """Largest ordinal seen up to the bound and the first position (in
    canonical order) attaining it.  A witness at the player count certifies
    the rule actually uses its full score range; absence is only evidence up
    to the bound."""
    table = ordinal_table(rule, max_volume)
    best = 0
    witness: Position = ()
    for p in enumerate_positions(max_volume):
        if table.entries[p] > best:
            best = table.entries[p]
            witness = p
    return best, witness


@dataclass(frozen=True)
class ReductionResult:
    rule: NormalizedRule
    simple: bool  # True: the input reaches its full player count
    bound: int
    max_ordinal: int
    witness: Position


def reduce_rule(rule: NormalizedRule, max_volume: int) -> ReductionResult:
    """Cut a rule that never reaches its own player count (up to the bound)
    down to the scores it actually pays out, re-ranked.  The truncated rule
    has the same ordinal map as the original."""
    if max_volume < 1:
        raise ValueError("need a volume bound >= 1 to observe any ordinal")
    top, witness = max_ordinal_witness(rule, max_volume)
    if top == rule.players:
        return ReductionResult(rule, True, max_volume, top, witness)
    truncated = normalize(rule.perm[:top])
    return ReductionResult(truncated, False, max_volume, top, witness)


@dataclass(frozen=True)
class StandardnessReport:
    """Is the rule isomorphic to the ascending rule on its descent index?

    That candidate is the only possible match (isomorphs share descent
    indices).  A non-point position of ordinal 1 is an exact certificate of
    standardness; a counterexample against the candidate is an exact
    refutation; otherwise the question stays open at this bound.
    """

    outcome: str  # "standard" | "non_standard" | "undecided"
    candidate_players: int
    iso: IsoVerdict
    witness: Position | None  # a position != (1) with ordinal 1, if found
    bound: int


def is_standard(rule: NormalizedRule, max_volume: int) -> StandardnessReport:
    k = rule.descent_index
    verdict = iso_check(rule, standard_rule(k), max_volume)
    table = ordinal_table(rule, max_volume)
    witness = next(
        (p for p in enumerate_positions(max_volume)
         if p != (1,) and table.entries[p] == 1),
        None,
    )
    if witness is not None:
        outcome = "standard"
    elif not verdict.agrees:
        outcome = "non_standard"
    else:
        outcome = "undecided"
    return StandardnessReport(outcome, k, verdict, witness, max_volume)


@dataclass(frozen=True)
class ExchangeReport:
    swapped_rule: NormalizedRule
    precondition: str  # "verified_up_to" | "violated"
    bound: int
    witness: Position | None  # bites into both affected ordinal classes

    @property
    def verified(self) -> bool:
        return self.precondition == "verified_up_to"


def exchange_swap(rule: NormalizedRule, i: int, j: int,
                  max_volume: int) -> ExchangeReport:
    """Swap the scores of payout seats i and j (values must differ by exactly
    1) and check, exhaustively up to the bound, that no position can bite
    into both affected ordinal classes.  A verified precondition means the
    swap provably cannot change any ordinal decision within the bound."""
    n = rule.players
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"seat indices must be distinct values in 1..{n}")
    if abs(rule.perm[i - 1] - rule.perm[j - 1]) != 1:
        raise ValueError("the swapped scores must differ by exactly 1")
    swapped = list(rule.perm)
    swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
    g = NormalizedRule(tuple(swapped))
    table = ordinal_table(rule, max_volume)
    a, b = i - 1, j - 1
    for p in enumerate_positions(max_volume):
        if not p:
            continue
        landed = {table.entries[q] for q in moves(p)}
        if a in landed and b in landed:
            return ExchangeReport(g, "violated", max_volume, p)
    return ExchangeReport(g, "verified_up_to", max_volume, None)


@dataclass(frozen=True)
class SeparationSurvey:
    """How much volume it takes to tell rules apart.

    Covers every pair of normalized rules with at most `players` players.
    For pairs distinguished within the cap, the minimal distinguishing
    volume is exact; their maximum is a lower bound for the worst case over
    all non-isomorphic pairs.  Pairs still agreeing at the cap are listed.
    """

    players: int
    cap: int
    rule_count: int
    pair_count: int
    distinguished: int
    max_min_volume: int | None
    extremal_pairs: tuple[tuple[NormalizedRule, NormalizedRule, Position], ...]
    undistinguished: tuple[tuple[NormalizedRule, NormalizedRule], ...]


def separation_survey(players: int, cap: int) -> SeparationSurvey:
    if players < 2:
        raise ValueError("survey needs at least two players")
    from .classify import enumerate_rules  # local import avoids a cycle

    rules: list[NormalizedRule] = []
    for n in range(1, players + 1):
        rules.extend(enumerate_rules(n))
    index = list(enumerate_positions(cap))
    sigs = [signature(r, cap) for r in rules]

    distinguished = 0
    best: int | None = None
    extremal: list[tuple[NormalizedRule, NormalizedRule, Position]] = []
    open_pairs: list[tuple[NormalizedRule, NormalizedRule]] = []
    for a in range(len(rules)):
        for b in range(a + 1, len(rules)):
            where = next(
                (t for t in range(len(index)) if sigs[a][t] != sigs[b][t]), None)
            if where is None:
                open_pairs.append((rules[a], rules[b]))
                continue
            distinguished += 1
            vol = sum(index[where])
            if best is None or vol > best:
                best = vol
                extremal = [(rules[a], rules[b], index[where])]
            elif vol == best:
                extremal.append((rules[a], rules[b], index[where]))
    return SeparationSurvey(
        players=players,
        cap=cap,
        rule_count=len(rules),
        pair_count=len(rules) * (len(rules) - 1) // 2,
        distinguished=distinguished,
        max_min_volume=best,
        extremal_pairs=tuple(extremal),
        undistinguished=tuple(open_pairs),
    )
