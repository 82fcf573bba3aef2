"""Executable property suites: every structural law the solver and the rule
analysis rely on, checked exhaustively at desk scale.

Each check scans all positions up to a volume bound, usually for every
normalized rule up to a player count, and reports how many instances it
looked at and which ones (if any) failed.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass

from .classify import enumerate_rules
from .iso import is_standard, iso_check, reduce_rule, signature
from .positions import (
    EMPTY,
    Position,
    ShapeTag,
    enumerate_positions,
    format_position,
    moves,
    shape_class,
    transpose,
    volume,
)
from .rules import NormalizedRule, line_ordinal, normalize
from .solver import OrdinalTable, ordinal_table, resolvent, solution_chain, solutions


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerifyReport:
    volume: int
    players: int
    results: tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


class _Context:
    """Shared per-run cache: one table per rule, one reverse-move map."""

    def __init__(self, max_volume: int, players: int):
        self.volume = max_volume
        self.players = players
        self.rules: list[NormalizedRule] = []
        for n in range(1, players + 1):
            self.rules.extend(enumerate_rules(n))
        self.positions = list(enumerate_positions(max_volume))
        self._tables: dict[NormalizedRule, OrdinalTable] = {}
        self._reverse: dict[Position, set[Position]] | None = None

    def table(self, rule: NormalizedRule) -> OrdinalTable:
        if rule not in self._tables:
            self._tables[rule] = ordinal_table(rule, self.volume)
        return self._tables[rule]

    @property
    def reverse_moves(self) -> dict[Position, set[Position]]:
        if self._reverse is None:
            rev: dict[Position, set[Position]] = {p: set() for p in self.positions}
            for p in self.positions:
                for q in moves(p):
                    rev[q].add(p)
            self._reverse = rev
        return self._reverse


def _fmt(p: Position) -> str:
    return format_position(p)


# ---------------------------------------------------------------------------
# position laws


def _check_move_count(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        checked += 1
        if len(moves(p)) != volume(p):
            bad.append(f"{_fmt(p)}: {len(moves(p))} moves != volume {volume(p)}")
        if p and EMPTY not in moves(p):
            bad.append(f"{_fmt(p)}: cannot bite straight to the empty board")
    return PropertyResult("move-count", checked, tuple(bad))


def _check_volume_drop(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        for q in moves(p):
            checked += 1
            if volume(q) >= volume(p):
                bad.append(f"{_fmt(p)} -> {_fmt(q)}")
    return PropertyResult("move-volume-drop", checked, tuple(bad))


def _check_transpose_moves(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        checked += 1
        if transpose(transpose(p)) != p:
            bad.append(f"transpose not involutive at {_fmt(p)}")
            continue
        if {transpose(q) for q in moves(p)} != moves(transpose(p)):
            bad.append(f"moves do not commute with transpose at {_fmt(p)}")
    return PropertyResult("transpose-commutes-with-moves", checked, tuple(bad))


def _check_band_monotone(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        if not p:
            continue
        band = shape_class(p).band
        for q in moves(p):
            if not q:
                continue
            checked += 1
            if shape_class(q).band > band:
                bad.append(f"{_fmt(p)} -> {_fmt(q)} raises the band")
    return PropertyResult("band-monotone", checked, tuple(bad))


def _check_point_reach(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        if not p:
            continue
        checked += 1
        if (1,) in moves(p) and shape_class(p).tag is ShapeTag.PLANE:
            bad.append(f"{_fmt(p)} is plane yet bites down to the point")
    return PropertyResult("point-unreachable-from-plane", checked, tuple(bad))


def _check_thin_closure(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for p in ctx.positions:
        if not p or shape_class(p).band != 1:
            continue
        for q in moves(p):
            checked += 1
            if q and shape_class(q).band != 1:
                bad.append(f"{_fmt(p)} -> {_fmt(q)} leaves band 1")
    return PropertyResult("band1-closed-under-moves", checked, tuple(bad))


def _check_enumeration_closure(ctx: _Context) -> PropertyResult:
    emitted = set(ctx.positions)
    checked, bad = 0, []
    for p in ctx.positions:
        for q in moves(p):
            checked += 1
            if q not in emitted:
                bad.append(f"{_fmt(q)} missing from the enumeration")
    if len(emitted) != len(ctx.positions):
        bad.append("enumeration emitted duplicates")
    return PropertyResult("enumeration-downward-closed", checked, tuple(bad))


# ---------------------------------------------------------------------------
# solver laws


def _check_ordinal_totality(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            checked += 1
            o = table.entries[p]
            if p == EMPTY:
                if o != 0:
                    bad.append(f"{rule}: empty board has ordinal {o}")
            elif not 1 <= o <= rule.players:
                bad.append(f"{rule}: {_fmt(p)} has ordinal {o} out of range")
    return PropertyResult("ordinal-total-and-in-range", checked, tuple(bad))


def _check_solution_increment(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p:
                continue
            sols = solutions(rule, p, table)
            if not sols:
                bad.append(f"{rule}: {_fmt(p)} has no solutions")
                continue
            for q in sols:
                checked += 1
                if table.entries[q] > rule.players - 1:
                    bad.append(f"{rule}: solution {_fmt(q)} at the top ordinal")
                if table.entries[p] != table.entries[q] + 1:
                    bad.append(f"{rule}: {_fmt(p)} -> {_fmt(q)} not a +1 step")
    return PropertyResult("solution-move-increments-ordinal", checked, tuple(bad))


def _check_preference(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p:
                continue
            checked += 1
            sols = solutions(rule, p, table)
            if (table.entries[p] == 1) != (sols == {EMPTY}):
                bad.append(f"{rule}: preference law broken at {_fmt(p)}")
    return PropertyResult("ordinal1-means-forced-finish", checked, tuple(bad))


def _check_resolvent_law(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p:
                continue
            checked += 1
            o = table.entries[p]
            if resolvent(rule, p, o, table) != solutions(rule, p, table):
                bad.append(f"{rule}: resolvent({o}) != solutions at {_fmt(p)}")
            seen: set[Position] = set()
            for i in range(1, rule.players + 2):
                r = resolvent(rule, p, i, table)
                if not r.issubset(moves(p)) or r & seen:
                    bad.append(f"{rule}: resolvents overlap at {_fmt(p)}")
                seen |= r
    return PropertyResult("resolvents-partition-solutions", checked, tuple(bad))


def _check_point_resolvents(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        checked += 1
        if resolvent(rule, (1,), 1, table) != {EMPTY}:
            bad.append(f"{rule}: the point does not resolve to the empty board")
        for i in range(2, rule.players + 2):
            if resolvent(rule, (1,), i, table):
                bad.append(f"{rule}: the point has a nonempty resolvent {i}")
    return PropertyResult("point-resolvents", checked, tuple(bad))


def _check_chain_law(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p:
                continue
            checked += 1
            chain = solution_chain(rule, p, table)
            o = table.entries[p]
            if chain.length != o or o > rule.players:
                bad.append(f"{rule}: chain length {chain.length} != ordinal {o}"
                           f" at {_fmt(p)}")
                continue
            for a, b in zip(chain.positions, chain.positions[1:]):
                if b not in solutions(rule, a, table):
                    bad.append(f"{rule}: chain step {_fmt(a)} -> {_fmt(b)}"
                               f" is not a solution move")
    return PropertyResult("chain-descends-to-empty", checked, tuple(bad))


def _check_top_ordinal_never_chosen(ctx: _Context) -> PropertyResult:
    # A position at the top ordinal is never anyone's solution.
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p:
                continue
            for q in solutions(rule, p, table):
                checked += 1
                if table.entries[q] == rule.players:
                    bad.append(f"{rule}: {_fmt(p)} solves into top-ordinal"
                               f" {_fmt(q)}")
    return PropertyResult("top-ordinal-has-no-takers", checked, tuple(bad))


def _check_transpose_ordinals(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for p in ctx.positions:
            if not p or volume(p) > ctx.volume:
                continue
            checked += 1
            pt = transpose(p)
            if table.entries[pt] != table.entries[p]:
                bad.append(f"{rule}: ordinal changes under transpose at {_fmt(p)}")
                continue
            if {transpose(q) for q in solutions(rule, p, table)} != \
                    solutions(rule, pt, table):
                bad.append(f"{rule}: solutions do not transpose at {_fmt(p)}")
    return PropertyResult("transpose-preserves-ordinals", checked, tuple(bad))


def _check_line_formula(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        table = ctx.table(rule)
        for k in range(1, ctx.volume + 1):
            checked += 1
            want = line_ordinal(rule, k)
            if table.entries[(k,)] != want:
                bad.append(f"{rule}: row {k} has ordinal {table.entries[(k,)]}"
                           f" != {want}")
            if table.entries[(1,) * k] != want:
                bad.append(f"{rule}: column {k} disagrees with row {k}")
    return PropertyResult("thin-ordinal-closed-form", checked, tuple(bad))


def _check_ordinal_solution_equivalence(ctx: _Context) -> PropertyResult:
    # Ordinal maps agree on the whole bounded universe iff solution maps do.
    checked, bad = 0, []
    rules = [r for r in ctx.rules if r.players >= 2][:12]
    for a in range(len(rules)):
        for b in range(a + 1, len(rules)):
            f, g = rules[a], rules[b]
            tf, tg = ctx.table(f), ctx.table(g)
            ords_agree = all(tf.entries[p] == tg.entries[p] for p in ctx.positions)
            sols_agree = all(
                solutions(f, p, tf) == solutions(g, p, tg)
                for p in ctx.positions if p)
            checked += 1
            if ords_agree != sols_agree:
                bad.append(f"{f} vs {g}: ordinal/solution agreement differs")
    return PropertyResult("ordinal-agreement-iff-solution-agreement",
                          checked, tuple(bad))


def _check_normalization_invariance(ctx: _Context) -> PropertyResult:
    # Raw real-valued rules behave exactly like their rank form.
    rng = random.Random(20260810)
    checked, bad = 0, []
    for n in range(2, ctx.players + 1):
        for _ in range(3):
            raw = []
            while len(raw) < n:
                x = round(rng.uniform(-50, 50), 3)
                if x not in raw:
                    raw.append(x)
            ranked = normalize(raw)
            table = ctx.table(ranked)
            order = sorted(range(n), key=lambda idx: raw[idx])
            checked += 1
            if tuple(ranked.perm[i] for i in order) != tuple(range(n)):
                bad.append(f"rank transform broke the order of {raw}")
            # pairwise sign preservation
            for i in range(n):
                for j in range(i + 1, n):
                    if (raw[i] - raw[j]) * (ranked.perm[i] - ranked.perm[j]) <= 0:
                        bad.append(f"sign not preserved for {raw}")
            if table.entries[(min(n, 3),)] != line_ordinal(ranked, min(n, 3)):
                bad.append(f"normalized rule disagrees on a row for {raw}")
    return PropertyResult("normalization-preserves-order", checked, tuple(bad))


# ---------------------------------------------------------------------------
# isomorphism laws


def _check_reduction_agreement(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        red = reduce_rule(rule, ctx.volume)
        if red.simple:
            continue
        checked += 1
        if signature(red.rule, ctx.volume) != signature(rule, ctx.volume):
            bad.append(f"{rule}: reduction to {red.rule} changes the ordinal map")
    return PropertyResult("reduction-preserves-signature", checked, tuple(bad))


def _check_standardness(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    for rule in ctx.rules:
        report = is_standard(rule, ctx.volume)
        table = ctx.table(rule)
        ones = [p for p in ctx.positions if p and table.entries[p] == 1]
        checked += 1
        if report.outcome == "non_standard" and ones != [(1,)]:
            bad.append(f"{rule}: non-standard yet ordinal-1 set is"
                       f" {[_fmt(p) for p in ones]}")
        if report.outcome == "standard" and ones == [(1,)]:
            bad.append(f"{rule}: standard yet only the point has ordinal 1")
        if report.outcome == "standard" and not report.iso.agrees:
            bad.append(f"{rule}: standard verdict despite a counterexample")
    return PropertyResult("standardness-witness", checked, tuple(bad))


def _check_thin_predecessors(ctx: _Context) -> PropertyResult:
    # For non-standard rules, the positions able to bite onto ordinal 1 are
    # exactly the thin ones (band 1, volume >= 2).
    checked, bad = 0, []
    rev = ctx.reverse_moves
    for rule in ctx.rules:
        if is_standard(rule, ctx.volume).outcome != "non_standard":
            continue
        table = ctx.table(rule)
        ones = {p for p in ctx.positions if p and table.entries[p] == 1}
        preds: set[Position] = set()
        for p in ones:
            preds |= rev[p]
        thin = {p for p in ctx.positions
                if p and p != (1,) and shape_class(p).band == 1}
        checked += 1
        if preds != thin:
            bad.append(f"{rule}: ordinal-1 predecessors are not the thin set")
    return PropertyResult("ordinal1-predecessors-are-thin", checked, tuple(bad))


def _check_plane_predecessors(ctx: _Context) -> PropertyResult:
    # Past the descent index, only plane positions can bite onto an ordinal.
    checked, bad = 0, []
    rev = ctx.reverse_moves
    for rule in ctx.rules:
        table = ctx.table(rule)
        for i in range(rule.descent_index + 1, rule.players + 1):
            targets = {p for p in ctx.positions if p and table.entries[p] == i}
            for t in targets:
                for q in rev[t]:
                    checked += 1
                    if shape_class(q).tag is not ShapeTag.PLANE:
                        bad.append(f"{rule}: {_fmt(q)} bites onto ordinal {i}"
                                   f" but is not plane")
    return PropertyResult("high-ordinal-predecessors-are-plane",
                          checked, tuple(bad))


def _check_exchange_conclusion(ctx: _Context) -> PropertyResult:
    # A verified swap precondition must leave the whole ordinal map intact.
    from .iso import exchange_swap

    checked, bad = 0, []
    for rule in ctx.rules:
        n = rule.players
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if abs(rule.perm[i - 1] - rule.perm[j - 1]) != 1:
                    continue
                checked += 1
                report = exchange_swap(rule, i, j, ctx.volume)
                if report.verified and \
                        signature(report.swapped_rule, ctx.volume) != \
                        signature(rule, ctx.volume):
                    bad.append(f"{rule}: verified swap {i},{j} changed"
                               f" the ordinal map")
    return PropertyResult("verified-swap-preserves-signature",
                          checked, tuple(bad))


def _check_iso_contract(ctx: _Context) -> PropertyResult:
    checked, bad = 0, []
    sample = [r for r in ctx.rules if r.players >= 2][:10]
    for a in range(len(sample)):
        for b in range(a, len(sample)):
            f, g = sample[a], sample[b]
            v1 = iso_check(f, g, ctx.volume)
            v2 = iso_check(g, f, ctx.volume)
            checked += 1
            if v1.agrees != v2.agrees or v1.witness != v2.witness:
                bad.append(f"{f} vs {g}: verdict not symmetric")
            if f == g and not v1.agrees:
                bad.append(f"{f}: does not agree with itself")
            if v1.witness is not None:
                tf, tg = ctx.table(f), ctx.table(g)
                for p in ctx.positions:
                    if sum(p) >= v1.min_volume:
                        break
                    if tf.entries[p] != tg.entries[p]:
                        bad.append(f"{f} vs {g}: witness not minimal")
                        break
    return PropertyResult("iso-verdict-symmetric-and-minimal", checked, tuple(bad))


_CHECKS: tuple[Callable[[_Context], PropertyResult], ...] = (
    _check_move_count,
    _check_volume_drop,
    _check_transpose_moves,
    _check_band_monotone,
    _check_point_reach,
    _check_thin_closure,
    _check_enumeration_closure,
    _check_ordinal_totality,
    _check_solution_increment,
    _check_preference,
    _check_resolvent_law,
    _check_point_resolvents,
    _check_chain_law,
    _check_top_ordinal_never_chosen,
    _check_transpose_ordinals,
    _check_line_formula,
    _check_ordinal_solution_equivalence,
    _check_normalization_invariance,
    _check_reduction_agreement,
    _check_standardness,
    _check_thin_predecessors,
    _check_plane_predecessors,
    _check_exchange_conclusion,
    _check_iso_contract,
)


def verify_suite(max_volume: int, players: int) -> VerifyReport:
    """Run every property suite over all rules up to `players` and all
    positions up to `max_volume`."""
    if max_volume < 4:
        raise ValueError("verification needs a volume bound of at least 4")
    if players < 1:
        raise ValueError("need at least one player")
    ctx = _Context(max_volume, players)
    results = tuple(check(ctx) for check in _CHECKS)
    return VerifyReport(max_volume, players, results)


def format_report(report: VerifyReport) -> str:
    lines = []
    for r in report.results:
        if r.ok:
            lines.append(f"PASS {r.name} ({r.checked} checks)")
        else:
            lines.append(f"FAIL {r.name} ({r.checked} checks,"
                         f" {len(r.failures)} failures)")
            lines.extend(f"    {f}" for f in r.failures[:10])
    passed = sum(1 for r in report.results if r.ok)
    lines.append(f"verify: {passed}/{len(report.results)} properties passed"
                 f" (volume <= {report.volume}, players <= {report.players})")
    return "\n".join(lines) + "\n"
