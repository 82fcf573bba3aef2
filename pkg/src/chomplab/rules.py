"""Score-sequence rules and their normalized (rank permutation) form.

A rule for n players is a list of n distinct scores: when the game ends, the
player who took the last bite is paid the first score, the player before it
the second, and so on cyclically round the table.  Only the relative order
of the scores matters for play, so every rule collapses to a unique
permutation of 0..n-1.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Rule:
    """A raw score sequence; seat i of the payout order pays scores[i-1]."""

    scores: tuple[float, ...]

    @property
    def players(self) -> int:
        return len(self.scores)


def make_rule(scores: Sequence[float]) -> Rule:
    seq = tuple(scores)
    if not seq:
        raise ValueError("a rule needs at least one score")
    for s in seq:
        if not math.isfinite(s):
            raise ValueError(f"scores must be finite, got {s!r}")
    if len(set(seq)) != len(seq):
        raise ValueError(f"scores must be pairwise distinct: {seq!r}")
    return Rule(seq)


def _first_cyclic_descent(perm: tuple[int, ...]) -> int:
    n = len(perm)
    for i in range(1, n):
        if perm[i] < perm[i - 1]:
            return i
    # No interior descent means the identity permutation: the first drop is
    # the wrap back to the lowest score.  A single player never descends;
    # index 1 by convention.
    return n if n >= 2 else 1


@dataclass(frozen=True)
class NormalizedRule:
    """Rank form of a rule: a permutation of 0..n-1, plus the first cyclic
    descent of the score sequence, which fixes the ordinal of every
    single-row and single-column position."""

    perm: tuple[int, ...]
    descent_index: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.perm)
        if n == 0 or sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..n-1: {self.perm!r}")
        object.__setattr__(self, "descent_index", _first_cyclic_descent(self.perm))

    @property
    def players(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        return format_rule(self)


def normalize(rule: Rule | Sequence[float]) -> NormalizedRule:
    """Rank transform: each score becomes the count of strictly smaller
    scores.  All pairwise order relations are preserved, and play under the
    ranked rule is identical to play under the original."""
    scores = rule.scores if isinstance(rule, Rule) else make_rule(rule).scores
    ranks = tuple(sum(1 for t in scores if t < s) for s in scores)
    return NormalizedRule(ranks)


def standard_rule(players: int) -> NormalizedRule:
    """The ascending rule 0,1,...,n-1: the classical last-bite-loses game."""
    if players < 1:
        raise ValueError("need at least one player")
    return NormalizedRule(tuple(range(players)))


def line_ordinal(rule: NormalizedRule, length: int) -> int:
    """Closed form for the ordinal of a single row (k): min(k, descent)."""
    if length < 1:
        raise ValueError("line length must be >= 1")
    return min(length, rule.descent_index)


def parse_rule(text: str) -> Rule:
    """Parse the comma form `0,1,3,2`; integer tokens stay integers."""
    toks = [t.strip() for t in text.strip().split(",")]
    scores: list[float] = []
    for tok in toks:
        if not tok:
            raise ValueError(f"bad rule syntax: {text!r}")
        try:
            scores.append(int(tok))
        except ValueError:
            try:
                scores.append(float(tok))
            except ValueError as exc:
                raise ValueError(f"bad rule syntax: {text!r}") from exc
    return make_rule(scores)


def format_rule(rule: NormalizedRule) -> str:
    """Compact digit form `(0132)` for up to ten players, comma form after."""
    if rule.players <= 10:
        return "(" + "".join(str(v) for v in rule.perm) + ")"
    return ",".join(str(v) for v in rule.perm)
