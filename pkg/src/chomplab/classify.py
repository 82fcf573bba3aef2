"""Rule census: group every rule of a player count into bounded-isomorphism
classes by signature, and merge across player counts through reduction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .iso import reduce_rule, signature
from .rules import NormalizedRule

# 8! solver tables is past the desk-scale budget this census is meant for.
MAX_CENSUS_PLAYERS = 7


def enumerate_rules(players: int) -> list[NormalizedRule]:
    """All normalized rules for a player count, lexicographic."""
    if players < 1:
        raise ValueError("need at least one player")
    if players > MAX_CENSUS_PLAYERS:
        raise ValueError(
            f"player counts above {MAX_CENSUS_PLAYERS} exceed the census budget")
    return [NormalizedRule(p) for p in permutations(range(players))]


@dataclass(frozen=True)
class RuleClass:
    representative: NormalizedRule  # lexicographically smallest member
    members: tuple[NormalizedRule, ...]
    reduced_to: NormalizedRule | None  # smaller isomorph when not simple


@dataclass(frozen=True)
class ClassReport:
    players: int
    bound: int
    classes: tuple[RuleClass, ...]


def classify_rules(players: int, max_volume: int) -> ClassReport:
    """Partition the n! normalized rules of one player count by signature up
    to the bound; non-simple classes carry their reduced representative."""
    groups: dict[tuple[int, ...], list[NormalizedRule]] = {}
    for rule in enumerate_rules(players):
        groups.setdefault(signature(rule, max_volume), []).append(rule)
    classes = []
    for members in groups.values():
        members.sort(key=lambda r: r.perm)
        rep = members[0]
        red = reduce_rule(rep, max_volume)
        classes.append(RuleClass(rep, tuple(members),
                                 None if red.simple else red.rule))
    classes.sort(key=lambda c: c.representative.perm)
    return ClassReport(players, max_volume, tuple(classes))


@dataclass(frozen=True)
class CombinedClassification:
    """Classification of every rule with at most max_players players, plus
    the cross-player merge: classes of different player counts coincide when
    their signatures do (ordinals are plain integers either way)."""

    max_players: int
    bound: int
    reports: tuple[ClassReport, ...]
    distinct: tuple[RuleClass, ...]

    @property
    def distinct_count(self) -> int:
        return len(self.distinct)


def classify_up_to(max_players: int, max_volume: int) -> CombinedClassification:
    reports = tuple(classify_rules(n, max_volume) for n in range(1, max_players + 1))
    merged: dict[tuple[int, ...], list[NormalizedRule]] = {}
    for n in range(1, max_players + 1):
        for rule in enumerate_rules(n):
            merged.setdefault(signature(rule, max_volume), []).append(rule)
    distinct = []
    for members in merged.values():
        members.sort(key=lambda r: (r.players, r.perm))
        distinct.append(RuleClass(members[0], tuple(members), None))
    distinct.sort(key=lambda c: (c.representative.players, c.representative.perm))
    return CombinedClassification(max_players, max_volume, reports, tuple(distinct))


def format_classification(combined: CombinedClassification) -> str:
    """Human-readable census table, one line per class."""
    out = [
        f"rule classes up to isomorphism "
        f"(volume bound {combined.bound}, players <= {combined.max_players})"
    ]
    for report in combined.reports:
        total = sum(len(c.members) for c in report.classes)
        out.append(f"players {report.players} "
                   f"({total} rules, {len(report.classes)} classes):")
        for cls in report.classes:
            line = "  " + " ~ ".join(str(m) for m in cls.members)
            if cls.reduced_to is not None:
                line += f"  -> reduces to {cls.reduced_to}"
            else:
                line += "  [simple]"
            out.append(line)
    reps = " ".join(str(c.representative) for c in combined.distinct)
    out.append(f"distinct rules after cross-count merge: "
               f"{combined.distinct_count}")
    out.append(f"  {reps}")
    return "\n".join(out) + "\n"


def classification_json_dict(combined: CombinedClassification) -> dict:
    return {
        "maxPlayers": combined.max_players,
        "bound": combined.bound,
        "perPlayers": [
            {
                "players": r.players,
                "classes": [
                    {
                        "representative": list(c.representative.perm),
                        "members": [list(m.perm) for m in c.members],
                        "reducedTo": None if c.reduced_to is None
                        else list(c.reduced_to.perm),
                    }
                    for c in r.classes
                ],
            }
            for r in combined.reports
        ],
        "distinct": [
            {
                "representative": list(c.representative.perm),
                "members": [list(m.perm) for m in c.members],
            }
            for c in combined.distinct
        ],
    }
