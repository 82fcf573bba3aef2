// Pure board geometry. Chomp arithmetic only: every ordinal or score shown
// in the UI comes from the server, never from here.

import type { Position } from "./types.js";

/** Bite at 1-based (row, col): rows above stay, rows from `row` down are
 * capped at col - 1, zero rows drop out. */
export function biteAt(p: Position, row: number, col: number): Position {
  const out: number[] = [];
  for (let i = 0; i < p.length; i++) {
    const v = i < row - 1 ? p[i] : Math.min(p[i], col - 1);
    if (v > 0) out.push(v);
  }
  return out;
}

export function isValidCell(p: Position, row: number, col: number): boolean {
  return row >= 1 && row <= p.length && col >= 1 && col <= p[row - 1];
}

export function samePosition(a: Position, b: Position): boolean {
  return a.length === b.length && a.every((v, i) => v === b[i]);
}

/** Text syntax used by the API query parameters: `5,3,3`, empty board `0`. */
export function formatPosition(p: Position): string {
  return p.length ? p.join(",") : "0";
}
