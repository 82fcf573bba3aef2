"""Seat-by-seat game runner: engine seats follow the deterministic optimal
line, human seats type bites as `row col`."""

from __future__ import annotations

import sys
from collections.abc import Iterable
from dataclasses import dataclass
from typing import TextIO

from .positions import (
    Cell,
    Position,
    cell_for_move,
    chomp_at,
    format_position,
    is_valid_cell,
    volume,
)
from .rules import NormalizedRule
from .solver import OrdinalTable, ordinal_table, solution_representative


@dataclass(frozen=True)
class MoveRecord:
    seat: int
    cell: Cell
    result: Position


@dataclass(frozen=True)
class GameTranscript:
    rule: NormalizedRule
    seats: tuple[str, ...]  # "engine" | "human", index 0 is seat 1
    start: Position
    moves: tuple[MoveRecord, ...]
    final_scores: tuple[int, ...]  # normalized score per seat


def final_scores(rule: NormalizedRule, last_seat: int) -> tuple[int, ...]:
    """Payout after the last bite: the last biter gets the first score, the
    seat before it the second, and so on cyclically until every seat holds
    exactly one score - also when the game was shorter than the table."""
    n = rule.players
    out = [0] * n
    for t in range(n):
        out[(last_seat - 1 - t) % n] = rule.perm[t]
    return tuple(out)


def _render(p: Position) -> str:
    if not p:
        return "(board empty)"
    return "\n".join("x " * a for a in p).rstrip()


def _read_cell(instream: TextIO, outstream: TextIO, seat: int,
               p: Position) -> Cell:
    while True:
        outstream.write(f"seat {seat} bite (row col)> ")
        outstream.flush()
        line = instream.readline()
        if not line:
            raise EOFError(f"input ended while seat {seat} was to move")
        toks = line.split()
        if len(toks) != 2:
            outstream.write("enter two numbers: row col\n")
            continue
        try:
            cell = Cell(int(toks[0]), int(toks[1]))
        except ValueError:
            outstream.write("enter two numbers: row col\n")
            continue
        if not is_valid_cell(p, cell):
            outstream.write(f"cell {cell.row} {cell.col} is outside the board\n")
            continue
        return cell


def play_session(rule: NormalizedRule, start: Position,
                 human_seats: Iterable[int] = (),
                 instream: TextIO | None = None,
                 outstream: TextIO | None = None,
                 table: OrdinalTable | None = None) -> GameTranscript:
    """Play one game from `start`.  Engine seats recompute their move from
    the current position every turn, so human deviations need no special
    handling.  Returns the full transcript; per-seat scores are also printed
    to the output stream."""
    if instream is None:
        instream = sys.stdin
    if outstream is None:
        outstream = sys.stdout
    if not start:
        raise ValueError("cannot start from the empty position")
    n = rule.players
    humans = frozenset(human_seats)
    if not humans <= set(range(1, n + 1)):
        raise ValueError(f"human seats must be within 1..{n}")
    if table is None:
        table = ordinal_table(rule, volume(start))
    seats = tuple("human" if s in humans else "engine" for s in range(1, n + 1))

    record: list[MoveRecord] = []
    cur = start
    seat = 1
    while cur:
        if seats[seat - 1] == "human":
            outstream.write(_render(cur) + "\n")
            cell = _read_cell(instream, outstream, seat, cur)
            nxt = chomp_at(cur, cell)
        else:
            nxt = solution_representative(rule, cur, table)
            cell = cell_for_move(cur, nxt)
            outstream.write(f"seat {seat} (engine) bites {cell.row} {cell.col}"
                            f" -> {format_position(nxt)}\n")
        record.append(MoveRecord(seat, cell, nxt))
        cur = nxt
        seat = seat % n + 1

    scores = final_scores(rule, record[-1].seat)
    for s, score in enumerate(scores, start=1):
        outstream.write(f"seat {s} scores {score}\n")
    return GameTranscript(rule, seats, start, tuple(record), scores)
