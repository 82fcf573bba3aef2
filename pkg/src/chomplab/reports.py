"""Shared payload builders, so the CLI and the HTTP service answer with
identical structures for identical inputs."""

from __future__ import annotations

from .positions import canonical_sort_key, parse_position, volume
from .rules import normalize, parse_rule
from .solver import ordinal, ordinal_table, solution_chain, solutions


def solve_report(rule_text: str, position_text: str) -> dict:
    raw = parse_rule(rule_text)
    ranked = normalize(raw)
    p = parse_position(position_text)
    table = ordinal_table(ranked, volume(p))
    o = ordinal(ranked, p, table)
    if p:
        sols = sorted(solutions(ranked, p, table), key=canonical_sort_key)
        chain = solution_chain(ranked, p, table).positions
    else:
        sols = []
        chain = (p,)
    return {
        "rule": list(raw.scores),
        "normalized": list(ranked.perm),
        "position": list(p),
        "volume": volume(p),
        "ordinal": o,
        "score": ranked.perm[o - 1] if o >= 1 else None,
        "solutions": [list(q) for q in sols],
        "chain": [list(q) for q in chain],
    }


def iso_report(f_text: str, g_text: str, max_volume: int) -> dict:
    from .iso import iso_check

    f = normalize(parse_rule(f_text))
    g = normalize(parse_rule(g_text))
    verdict = iso_check(f, g, max_volume)
    doc = verdict.to_json_dict()
    doc["f"] = list(f.perm)
    doc["g"] = list(g.perm)
    doc["ordinals"] = list(verdict.ordinals) if verdict.ordinals else None
    return doc
