// Wire types of the chomplab HTTP API.

export type Position = number[];

export interface SeatInfo {
  seat: number;
  kind: "human" | "engine";
}

export interface MoveInfo {
  seat: number;
  row: number;
  col: number;
  result: Position;
}

export interface GameState {
  id: string;
  rule: number[];
  normalized: number[];
  players: number;
  seats: SeatInfo[];
  start: Position;
  position: Position;
  toMove: number | null;
  finished: boolean;
  moves: MoveInfo[];
  scores: number[] | null;
}

export interface SolveInfo {
  rule: number[];
  normalized: number[];
  position: Position;
  volume: number;
  ordinal: number;
  score: number | null;
  solutions: Position[];
  chain: Position[];
}

/** Minimal structural validation of a server game payload; throws on junk
 * so the controller can show an error banner instead of rendering garbage. */
export function checkGameState(raw: unknown): GameState {
  const x = raw as GameState;
  if (
    !x || typeof x !== "object" ||
    typeof x.id !== "string" ||
    !Array.isArray(x.position) || !x.position.every((v) => Number.isInteger(v)) ||
    !Array.isArray(x.seats) || !Array.isArray(x.moves) ||
    typeof x.finished !== "boolean" ||
    (x.scores !== null && !Array.isArray(x.scores))
  ) {
    throw new Error("malformed game state from the server");
  }
  return x;
}

export function checkSolveInfo(raw: unknown): SolveInfo {
  const x = raw as SolveInfo;
  if (
    !x || typeof x !== "object" ||
    typeof x.ordinal !== "number" ||
    !Array.isArray(x.position) ||
    !Array.isArray(x.solutions) || !x.solutions.every((s) => Array.isArray(s))
  ) {
    throw new Error("malformed solve response from the server");
  }
  return x;
}
