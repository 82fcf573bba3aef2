"""Exact position ordinals by volume-layered backward induction.

The ordinal of a position is the 1-based index of the score the mover can
secure there with optimal play; the finished board has ordinal 0.  It obeys
a one-step recurrence over the move set: landing on a position of ordinal q
pays the mover the score of payout seat q+1, except that successors already
at the maximal ordinal n are worthless - biting straight to the empty board
(always legal, ordinal 0) pays the same first score and is what a rational
mover is required to do instead.

Tables are filled volume layer by volume layer, so every lookup hits a layer
that is already final: stored values are exact, never approximate, and the
result does not depend on evaluation order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .positions import (
    EMPTY,
    Position,
    canonical_sort_key,
    enumerate_positions,
    format_position,
    moves,
    partitions_of,
    volume,
)
from .rules import NormalizedRule


class BudgetExceededError(RuntimeError):
    """A table build hit its position budget.  Carries the last fully
    completed frontier and the partial (still exact) table."""

    def __init__(self, message: str, frontier_reached: int, partial: "OrdinalTable"):
        super().__init__(message)
        self.frontier_reached = frontier_reached
        self.partial = partial


@dataclass
class OrdinalTable:
    """Exact map position -> ordinal, complete for volume <= frontier.

    Built once, then treated as immutable; safe to share between threads.
    """

    rule: NormalizedRule
    frontier: int
    entries: dict[Position, int]

    def ordinal(self, p: Position) -> int:
        if sum(p) > self.frontier:
            raise ValueError(f"volume {sum(p)} beyond table frontier {self.frontier}")
        return self.entries[p]


def _position_ordinal(parts: Position, lookup: dict[Position, int],
                      gain: list[int], top: int) -> int:
    """One recurrence step: the best payable score over all bites of `parts`.

    gain[q] is the mover's score for landing on ordinal q, with gain[n] = -1
    as the excluded-successor sentinel; it can never win because the empty
    board (ordinal 0, score >= 0) is always reachable.  Bails out as soon as
    the globally best score `top` is secured.
    """
    best = -1
    best_q = 0
    k = len(parts)
    for xi in range(k - 1, -1, -1):
        prefix = parts[:xi]
        j = xi
        # h is the height the bitten rows are capped at; descending h lets
        # the cap boundary pointer j advance monotonically across the row.
        for h in range(parts[xi] - 1, 0, -1):
            while j < k and parts[j] > h:
                j += 1
            q = lookup[prefix + (h,) * (j - xi) + parts[j:]]
            s = gain[q]
            if s > best:
                if s == top:
                    return q + 1
                best = s
                best_q = q
        q = lookup[prefix]  # h == 0: the bite wipes row xi and everything below
        s = gain[q]
        if s > best:
            if s == top:
                return q + 1
            best = s
            best_q = q
    return best_q + 1


def ordinal_table(rule: NormalizedRule, max_volume: int, *,
                  max_positions: int | None = None) -> OrdinalTable:
    """Complete exact table for every position with volume <= max_volume."""
    if max_volume < 0:
        raise ValueError("volume bound must be >= 0")
    gain = list(rule.perm) + [-1]
    top = rule.players - 1
    entries: dict[Position, int] = {EMPTY: 0}
    for v in range(1, max_volume + 1):
        layer = list(partitions_of(v))
        if max_positions is not None and len(entries) + len(layer) > max_positions:
            partial = OrdinalTable(rule, v - 1, entries)
            raise BudgetExceededError(
                f"position budget {max_positions} hit while filling volume {v}"
                f" (complete through volume {v - 1})",
                v - 1,
                partial,
            )
        for parts in layer:
            entries[parts] = _position_ordinal(parts, entries, gain, top)
    return OrdinalTable(rule, max_volume, entries)


def ordinal(rule: NormalizedRule, p: Position, table: OrdinalTable) -> int:
    """Ordinal of p, reading the table (which may stop one volume short)."""
    if rule != table.rule:
        raise ValueError("table was built for a different rule")
    if not p:
        return 0
    v = volume(p)
    if v <= table.frontier:
        return table.entries[p]
    if v == table.frontier + 1:
        gain = list(rule.perm) + [-1]
        return _position_ordinal(p, table.entries, gain, rule.players - 1)
    raise ValueError(
        f"table frontier {table.frontier} misses volumes below {v}")


def solutions(rule: NormalizedRule, p: Position, table: OrdinalTable) -> set[Position]:
    """The score-maximising bites from p: exactly the moves landing one
    ordinal below p's own.  When that class is ordinal 0 the set is the
    forced bite to the empty board, which is the no-long-rally preference."""
    if not p:
        raise ValueError("the finished board has no moves")
    want = ordinal(rule, p, table) - 1
    return {q for q in moves(p) if table.entries[q] == want}


def resolvent(rule: NormalizedRule, p: Position, index: int,
              table: OrdinalTable) -> set[Position]:
    """Moves of p landing exactly on ordinal index - 1."""
    if index < 1:
        raise ValueError("resolvent index must be >= 1")
    if not p:
        raise ValueError("the finished board has no moves")
    ordinal(rule, p, table)  # validates coverage for p's move set
    return {q for q in moves(p) if table.entries[q] == index - 1}


def solution_representative(rule: NormalizedRule, p: Position,
                            table: OrdinalTable) -> Position:
    """Deterministic pick among the solutions: smallest volume first, then
    first in canonical enumeration order."""
    return min(solutions(rule, p, table), key=canonical_sort_key)


@dataclass(frozen=True)
class SolutionChain:
    """An optimal line of play down to the empty board.  Ordinals descend by
    exactly one along it, so its length equals the start's ordinal."""

    positions: tuple[Position, ...]

    @property
    def length(self) -> int:
        return len(self.positions) - 1


def solution_chain(rule: NormalizedRule, p: Position,
                   table: OrdinalTable) -> SolutionChain:
    seq = [p]
    cur = p
    while cur:
        cur = solution_representative(rule, cur, table)
        seq.append(cur)
    return SolutionChain(tuple(seq))


def reverse_solutions_within(rule: NormalizedRule, p: Position, max_volume: int,
                             table: OrdinalTable) -> set[Position]:
    """All positions up to the bound whose solution set contains p."""
    if table.frontier < max_volume:
        raise ValueError("table frontier is below the requested bound")
    want = ordinal(rule, p, table) + 1
    if want > rule.players:
        return set()  # nothing can sit one ordinal above the maximum
    vol = volume(p)
    found = set()
    for q in enumerate_positions(max_volume):
        if sum(q) > vol and table.entries[q] == want and p in moves(q):
            found.add(q)
    return found


def thin_ordinals(rule: NormalizedRule, max_len: int) -> dict[Position, int]:
    """Ordinals of every single-row and single-column position up to the
    given length, via the same recurrence; that family is closed under
    bites, so the restricted table is exact."""
    gain = list(rule.perm) + [-1]
    top = rule.players - 1
    entries: dict[Position, int] = {EMPTY: 0}
    for k in range(1, max_len + 1):
        row = (k,)
        entries[row] = _position_ordinal(row, entries, gain, top)
        if k >= 2:
            column = (1,) * k
            entries[column] = _position_ordinal(column, entries, gain, top)
    return entries


def table_to_json(table: OrdinalTable) -> str:
    doc = {
        "rule": list(table.rule.perm),
        "frontier": table.frontier,
        "entries": [
            {"position": list(p), "ordinal": table.entries[p]}
            for p in enumerate_positions(table.frontier)
        ],
    }
    return json.dumps(doc)


def table_from_json(text: str) -> OrdinalTable:
    doc = json.loads(text)
    rule = NormalizedRule(tuple(doc["rule"]))
    entries = {tuple(e["position"]): int(e["ordinal"]) for e in doc["entries"]}
    return OrdinalTable(rule, int(doc["frontier"]), entries)


def table_to_csv(table: OrdinalTable) -> str:
    lines = ["position;ordinal"]
    for p in enumerate_positions(table.frontier):
        lines.append(f"{format_position(p)};{table.entries[p]}")
    return "\n".join(lines) + "\n"
