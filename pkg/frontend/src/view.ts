// Pure presentation model: the grid, highlights and panels derived from the
// server's game state and solve response. Rendering to the DOM lives in
// dom.ts; this file has no DOM dependencies so it is testable headless.

import { biteAt, samePosition } from "./board.js";
import type { GameState, Position, SolveInfo } from "./types.js";

export interface BoardCell {
  row: number; // 1-based, row 1 at the top
  col: number; // 1-based, column 1 at the left
  /** biting here lands exactly in the server-reported solution set */
  highlighted: boolean;
  /** ordinal preview fetched on hover; null until known */
  preview: number | null;
}

export interface SeatPanel {
  toMove: number | null;
  seats: { seat: number; kind: string }[];
}

export interface ScoreEntry {
  seat: number;
  score: number;
}

export interface BoardView {
  position: Position;
  grid: BoardCell[][];
  seatPanel: SeatPanel;
  scorePanel: ScoreEntry[] | null; // only when the game is over
  banner: string | null;
  ordinal: number | null; // current position's ordinal (server-sourced)
}

export function buildBoardView(
  state: GameState,
  solve: SolveInfo | null,
  banner: string | null = null,
): BoardView {
  const solutions = solve ? solve.solutions : [];
  const grid: BoardCell[][] = state.position.map((width, i) => {
    const row = i + 1;
    const cells: BoardCell[] = [];
    for (let col = 1; col <= width; col++) {
      const lands = biteAt(state.position, row, col);
      cells.push({
        row,
        col,
        highlighted: solutions.some((s) => samePosition(s, lands)),
        preview: null,
      });
    }
    return cells;
  });
  const scorePanel = state.finished && state.scores
    ? state.scores.map((score, i) => ({ seat: i + 1, score }))
    : null;
  return {
    position: [...state.position],
    grid,
    seatPanel: {
      toMove: state.toMove,
      seats: state.seats.map((s) => ({ seat: s.seat, kind: s.kind })),
    },
    scorePanel,
    banner: banner ?? (state.finished ? "game over" : null),
    ordinal: solve ? solve.ordinal : null,
  };
}

export function errorView(message: string): BoardView {
  return {
    position: [],
    grid: [],
    seatPanel: { toMove: null, seats: [] },
    scorePanel: null,
    banner: `error: ${message}`,
    ordinal: null,
  };
}
