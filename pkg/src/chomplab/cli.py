"""Command line front end.

Subcommands: solve, table, iso, classify, reduce, verify, vtable, play,
serve.  All numeric output comes from the core modules; malformed input and
exceeded budgets exit nonzero with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classification_json_dict, classify_up_to, format_classification
from .iso import DEFAULT_BOUND, reduce_rule, separation_survey
from .positions import format_position, parse_position, volume
from .reports import iso_report, solve_report
from .rules import format_rule, normalize, parse_rule
from .solver import BudgetExceededError, ordinal_table, table_to_csv, table_to_json
from .verify import format_report, verify_suite


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default=choices[0])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chomplab",
        description="Exact solver and rule analysis for multiplayer Chomp.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="ordinal, solutions and optimal line of a position")
    p.add_argument("--rule", required=True, help="comma scores, e.g. 0,1,2,3")
    p.add_argument("--position", required=True, help="comma parts, e.g. 5,3,3")
    _add_format(p)

    p = sub.add_parser("table", help="full ordinal table up to a volume")
    p.add_argument("--rule", required=True)
    p.add_argument("--volume", type=int, required=True)
    p.add_argument("--out", help="output path (stdout when omitted)")
    _add_format(p, choices=("json", "csv"))

    p = sub.add_parser("iso", help="bounded isomorphism check of two rules")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--volume", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = sub.add_parser("classify", help="rule census up to a player count")
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--volume", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = sub.add_parser("reduce", help="truncate a rule to the scores it uses")
    p.add_argument("--rule", required=True)
    p.add_argument("--volume", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--volume", type=int, default=DEFAULT_BOUND)
    p.add_argument("--players", type=int, default=4)

    p = sub.add_parser("vtable", help="survey of minimal distinguishing volumes")
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--volume", type=int, default=DEFAULT_BOUND,
                   help="volume cap of the survey")
    _add_format(p)

    p = sub.add_parser("play", help="play a game against engine seats")
    p.add_argument("--rule", required=True)
    p.add_argument("--position", required=True)
    p.add_argument("--human-seats", default="",
                   help="comma seat numbers played by a human, e.g. 1,3")

    p = sub.add_parser("serve", help="run the HTTP service and explorer UI")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--budget", type=int, default=64,
                   help="largest table volume a single request may build")
    p.add_argument("--static", default=None,
                   help="directory with the built explorer bundle")
    return parser


def _cmd_solve(args) -> int:
    report = solve_report(args.rule, args.position)
    if args.format == "json":
        print(json.dumps(report))
        return 0
    ranked = normalize(parse_rule(args.rule))
    print(f"rule: {args.rule}  normalized {format_rule(ranked)}")
    print(f"position: {format_position(tuple(report['position']))}"
          f"  volume {report['volume']}")
    score = report["score"]
    print(f"ordinal: {report['ordinal']}"
          + (f"  score: {score}" if score is not None else ""))
    if report["solutions"]:
        shown = " ".join(f"[{format_position(tuple(q))}]"
                         for q in report["solutions"])
        print(f"solutions: {shown}")
    print("chain: " + " -> ".join(format_position(tuple(q))
                                  for q in report["chain"]))
    return 0


def _cmd_table(args) -> int:
    rule = normalize(parse_rule(args.rule))
    table = ordinal_table(rule, args.volume)
    text = table_to_json(table) if args.format == "json" else table_to_csv(table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(table.entries)} entries to {args.out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def _cmd_iso(args) -> int:
    report = iso_report(args.f, args.g, args.volume)
    if args.format == "json":
        print(json.dumps(report))
        return 0
    f = normalize(parse_rule(args.f))
    g = normalize(parse_rule(args.g))
    print(f"f: {format_rule(f)}  g: {format_rule(g)}  bound: {args.volume}")
    if report["outcome"] == "agrees_up_to":
        print(f"agrees on every position up to volume {args.volume}"
              " (bounded evidence, not a proof)")
    else:
        w = format_position(tuple(report["witness"]))
        a, b = report["ordinals"]
        print(f"counterexample: position {w}, ordinals {a} vs {b},"
              f" volume {report['minVolume']}")
    return 0


def _cmd_classify(args) -> int:
    combined = classify_up_to(args.players, args.volume)
    if args.format == "json":
        print(json.dumps(classification_json_dict(combined)))
    else:
        sys.stdout.write(format_classification(combined))
    return 0


def _cmd_reduce(args) -> int:
    rule = normalize(parse_rule(args.rule))
    result = reduce_rule(rule, args.volume)
    if args.format == "json":
        print(json.dumps({
            "rule": list(rule.perm),
            "reduced": list(result.rule.perm),
            "simple": result.simple,
            "maxOrdinal": result.max_ordinal,
            "witness": list(result.witness),
            "bound": result.bound,
        }))
        return 0
    if result.simple:
        print(f"{format_rule(rule)} is simple: ordinal {result.max_ordinal}"
              f" reached at {format_position(result.witness)}")
    else:
        print(f"{format_rule(rule)} reduces to {format_rule(result.rule)}"
              f" (max ordinal {result.max_ordinal} up to volume {result.bound})")
    return 0


def _cmd_verify(args) -> int:
    report = verify_suite(args.volume, args.players)
    sys.stdout.write(format_report(report))
    return 0 if report.ok else 1


def _cmd_vtable(args) -> int:
    survey = separation_survey(args.players, args.volume)
    if args.format == "json":
        print(json.dumps({
            "players": survey.players,
            "cap": survey.cap,
            "rules": survey.rule_count,
            "pairs": survey.pair_count,
            "distinguished": survey.distinguished,
            "maxMinVolume": survey.max_min_volume,
            "extremalPairs": [
                {"f": list(f.perm), "g": list(g.perm), "witness": list(w)}
                for f, g, w in survey.extremal_pairs
            ],
            "undistinguished": [
                {"f": list(f.perm), "g": list(g.perm)}
                for f, g in survey.undistinguished
            ],
        }))
        return 0
    print(f"separation survey: players <= {survey.players},"
          f" volume cap {survey.cap}")
    print(f"rules: {survey.rule_count}, pairs: {survey.pair_count},"
          f" distinguished: {survey.distinguished}")
    if survey.max_min_volume is None:
        print("no pair distinguished within the cap")
    else:
        print(f"max min-distinguishing volume: {survey.max_min_volume}"
              " (lower bound for the worst pair)")
        for f, g, w in survey.extremal_pairs:
            print(f"  {format_rule(f)} vs {format_rule(g)}"
                  f" first differ at {format_position(w)}")
    print(f"pairs still agreeing at the cap: {len(survey.undistinguished)}")
    for f, g in survey.undistinguished:
        print(f"  {format_rule(f)} ~ {format_rule(g)}")
    return 0


def _cmd_play(args) -> int:
    from .play import play_session

    rule = normalize(parse_rule(args.rule))
    start = parse_position(args.position)
    humans = [int(t) for t in args.human_seats.split(",") if t.strip()]
    play_session(rule, start, humans)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app, default_static_dir

    static = args.static if args.static is not None else default_static_dir()
    app = create_app(static_dir=static, max_table_volume=args.budget)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_HANDLERS = {
    "solve": _cmd_solve,
    "table": _cmd_table,
    "iso": _cmd_iso,
    "classify": _cmd_classify,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "vtable": _cmd_vtable,
    "play": _cmd_play,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc} (completed through volume"
              f" {exc.frontier_reached})", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
