import { describe, expect, it } from "vitest";

import { biteAt, formatPosition, isValidCell, samePosition } from "../src/board.js";
import { checkGameState, checkSolveInfo, type GameState, type SolveInfo } from "../src/types.js";
import { buildBoardView } from "../src/view.js";

function gameState(overrides: Partial<GameState> = {}): GameState {
  return {
    id: "g1",
    rule: [0, 1],
    normalized: [0, 1],
    players: 2,
    seats: [
      { seat: 1, kind: "human" },
      { seat: 2, kind: "engine" },
    ],
    start: [5, 3, 3],
    position: [5, 3, 3],
    toMove: 1,
    finished: false,
    moves: [],
    scores: null,
    ...overrides,
  };
}

describe("board geometry", () => {
  it("bites keep rows above and cap rows below", () => {
    expect(biteAt([5, 3, 3], 3, 3)).toEqual([5, 3, 2]);
    expect(biteAt([3, 2], 2, 1)).toEqual([3]);
    expect(biteAt([1], 1, 1)).toEqual([]);
  });

  it("validates cells against the diagram", () => {
    expect(isValidCell([5, 3, 3], 3, 3)).toBe(true);
    expect(isValidCell([5, 3, 3], 4, 1)).toBe(false);
    expect(isValidCell([5, 3, 3], 2, 4)).toBe(false);
    expect(isValidCell([], 1, 1)).toBe(false);
  });

  it("formats positions in the API text syntax", () => {
    expect(formatPosition([5, 3, 2])).toBe("5,3,2");
    expect(formatPosition([])).toBe("0");
  });

  it("compares positions element-wise", () => {
    expect(samePosition([2, 1], [2, 1])).toBe(true);
    expect(samePosition([2, 1], [2])).toBe(false);
  });
});

describe("buildBoardView", () => {
  it("renders the young diagram row by row, row 1 on top", () => {
    const view = buildBoardView(gameState({ position: [4, 4, 4, 4, 4] }), null);
    expect(view.grid).toHaveLength(5);
    for (const row of view.grid) expect(row).toHaveLength(4);
    expect(view.grid[0][0]).toMatchObject({ row: 1, col: 1 });
  });

  it("highlights exactly the cells biting into the solution set", () => {
    const solve: SolveInfo = {
      rule: [0, 1],
      normalized: [0, 1],
      position: [2, 1],
      volume: 3,
      ordinal: 1,
      score: 0,
      solutions: [[]],
      chain: [[2, 1], []],
    };
    const view = buildBoardView(gameState({ position: [2, 1] }), solve);
    const lit = view.grid.flat().filter((c) => c.highlighted);
    // only the (1,1) bite empties the board
    expect(lit).toHaveLength(1);
    expect(lit[0]).toMatchObject({ row: 1, col: 1 });
  });

  it("shows the terminal score panel when the game is over", () => {
    const view = buildBoardView(gameState({
      position: [],
      toMove: null,
      finished: true,
      scores: [1, 0],
    }), null);
    expect(view.grid).toHaveLength(0);
    expect(view.scorePanel).toEqual([
      { seat: 1, score: 1 },
      { seat: 2, score: 0 },
    ]);
    expect(view.banner).toBe("game over");
  });

  it("carries the server-sourced ordinal, never a local one", () => {
    const view = buildBoardView(gameState(), null);
    expect(view.ordinal).toBeNull();
  });
});

describe("payload validation", () => {
  it("accepts well-formed payloads", () => {
    expect(() => checkGameState(gameState())).not.toThrow();
  });

  it("rejects malformed game payloads", () => {
    expect(() => checkGameState({ id: 7 })).toThrow(/malformed/);
    expect(() => checkGameState(null)).toThrow(/malformed/);
    expect(() => checkGameState(gameState({ position: ["x"] as unknown as number[] })))
      .toThrow(/malformed/);
  });

  it("rejects malformed solve payloads", () => {
    expect(() => checkSolveInfo({ ordinal: "four" })).toThrow(/malformed/);
  });
});
