"""Chomp positions: canonical partitions, the move relation, enumeration.

A position is the set of chocolate pieces still on the table, stored as a
weakly decreasing tuple of positive row lengths (a Young diagram read row by
row).  The empty tuple is the finished board.  A bite at cell (row, col)
keeps every row above `row` untouched and caps every row from `row` down at
height col - 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

Position = tuple[int, ...]

EMPTY: Position = ()


class ShapeTag(Enum):
    POINT = "point"  # the single 1x1 piece
    LINE = "line"    # one row of length >= 2, or one column of height >= 2
    PLANE = "plane"  # properly two-dimensional


@dataclass(frozen=True)
class Cell:
    """1-based coordinates of a bite."""

    row: int
    col: int


@dataclass(frozen=True)
class ShapeClass:
    tag: ShapeTag
    band: int  # min(width, rows); 1 exactly for points, lines and columns


def canonicalize(parts: Iterable[int]) -> Position:
    """Strip trailing zeros from a weakly decreasing part sequence.

    Non-monotone input is rejected rather than sorted: positions are defined
    already ordered, so an unsorted sequence signals a caller bug.
    """
    seq = tuple(parts)
    prev = None
    for a in seq:
        if a < 0:
            raise ValueError(f"negative part in {seq!r}")
        if prev is not None and a > prev:
            raise ValueError(f"parts must be weakly decreasing, got {seq!r}")
        prev = a
    return tuple(a for a in seq if a > 0)


def volume(p: Position) -> int:
    """Number of pieces left on the board."""
    return sum(p)


def is_valid_cell(p: Position, cell: Cell) -> bool:
    return 1 <= cell.row <= len(p) and 1 <= cell.col <= p[cell.row - 1]


def chomp_at(p: Position, cell: Cell) -> Position:
    """Bite at `cell`; the result is canonical and strictly smaller."""
    if not is_valid_cell(p, cell):
        raise ValueError(f"cell {cell} is not inside position {p}")
    x = cell.row - 1
    h = cell.col - 1
    if h == 0:
        return p[:x]
    return p[:x] + tuple(min(a, h) for a in p[x:] if min(a, h) > 0)


def cells(p: Position) -> Iterator[Cell]:
    """Every cell of the board, row-major."""
    for x, width in enumerate(p, start=1):
        for c in range(1, width + 1):
            yield Cell(x, c)


def moves(p: Position) -> set[Position]:
    """All positions one bite away; the finished board has none.

    Distinct cells always give distinct results, so the set has exactly
    volume(p) elements.
    """
    return {chomp_at(p, cell) for cell in cells(p)}


def cell_for_move(p: Position, q: Position) -> Cell:
    """The unique cell whose bite turns p into q."""
    if len(q) <= len(p):
        padded = q + (0,) * (len(p) - len(q))
        for i, (a, b) in enumerate(zip(p, padded)):
            if a != b:
                cell = Cell(i + 1, b + 1)
                if is_valid_cell(p, cell) and chomp_at(p, cell) == q:
                    return cell
                break
    raise ValueError(f"{q} is not one bite away from {p}")


def transpose(p: Position) -> Position:
    """Conjugate partition: flip the board along its main diagonal."""
    if not p:
        return EMPTY
    return tuple(sum(1 for a in p if a >= i) for i in range(1, p[0] + 1))


def shape_class(p: Position) -> ShapeClass:
    if not p:
        raise ValueError("the empty position has no shape class")
    width, rows = p[0], len(p)
    if p == (1,):
        return ShapeClass(ShapeTag.POINT, 1)
    if rows == 1 or width == 1:
        return ShapeClass(ShapeTag.LINE, 1)
    return ShapeClass(ShapeTag.PLANE, min(width, rows))


def partitions_of(total: int, cap: int | None = None) -> Iterator[Position]:
    """Partitions of `total` with parts <= cap, in descending lexicographic
    order."""
    if cap is None:
        cap = total
    if total == 0:
        yield EMPTY
        return
    for first in range(min(total, cap), 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def enumerate_positions(max_volume: int) -> Iterator[Position]:
    """Every position with volume <= max_volume exactly once: ascending
    volume, descending lexicographic within a volume.  This order is the
    canonical one used by signatures, exports and reports."""
    if max_volume < 0:
        raise ValueError("volume bound must be >= 0")
    for v in range(max_volume + 1):
        yield from partitions_of(v)


def canonical_sort_key(p: Position) -> tuple[int, tuple[int, ...]]:
    """Sort key reproducing the enumeration order of enumerate_positions."""
    return (sum(p), tuple(-a for a in p))


def predecessors_within(p: Position, max_volume: int) -> set[Position]:
    """All positions of volume <= max_volume that can bite down to p."""
    if max_volume < volume(p):
        raise ValueError("bound is below the position's own volume")
    vol = volume(p)
    found = set()
    for q in enumerate_positions(max_volume):
        if sum(q) > vol and p in moves(q):
            found.add(q)
    return found


def parse_position(text: str) -> Position:
    """Parse the comma form `5,3,3`; `0` (or empty) is the finished board."""
    s = text.strip()
    if s in ("", "0"):
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in s.split(","))
    except ValueError as exc:
        raise ValueError(f"bad position syntax: {text!r}") from exc
    return canonicalize(parts)


def format_position(p: Position) -> str:
    return ",".join(map(str, p)) if p else "0"
