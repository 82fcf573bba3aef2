import { describe, expect, it } from "vitest";

import type { ApiClient } from "../src/api.js";
import { biteAt } from "../src/board.js";
import { GameController } from "../src/controller.js";
import type { GameState, Position, SolveInfo } from "../src/types.js";

/** In-memory stand-in for the HTTP API: plays a 2-player all-human game and
 * reports the bite-to-empty move as the only solution everywhere. */
class FakeApi {
  state: GameState;
  solveCalls: Position[] = [];
  moveDelay: (() => Promise<void>) | null = null;

  constructor(position: Position) {
    this.state = {
      id: "fake",
      rule: [0, 1],
      normalized: [0, 1],
      players: 2,
      seats: [
        { seat: 1, kind: "human" },
        { seat: 2, kind: "human" },
      ],
      start: [...position],
      position: [...position],
      toMove: 1,
      finished: false,
      moves: [],
      scores: null,
    };
  }

  async solve(_rule: string, position: Position): Promise<SolveInfo> {
    this.solveCalls.push([...position]);
    return {
      rule: [0, 1],
      normalized: [0, 1],
      position,
      volume: position.reduce((a, b) => a + b, 0),
      ordinal: position.length ? 1 : 0,
      score: position.length ? 0 : null,
      solutions: position.length ? [[]] : [],
      chain: [position, []],
    };
  }

  async newGame(): Promise<GameState> {
    return this.state;
  }

  async getGame(): Promise<GameState> {
    return this.state;
  }

  async move(_id: string, row: number, col: number): Promise<GameState> {
    if (this.moveDelay) await this.moveDelay();
    const next = biteAt(this.state.position, row, col);
    this.state = {
      ...this.state,
      position: next,
      toMove: next.length ? (this.state.toMove === 1 ? 2 : 1) : null,
      finished: next.length === 0,
      scores: next.length === 0 ? [1, 0] : null,
      moves: [...this.state.moves,
        { seat: this.state.toMove ?? 1, row, col, result: next }],
    };
    return this.state;
  }
}

function makeController(position: Position): [GameController, FakeApi] {
  const api = new FakeApi(position);
  const controller = new GameController(api as unknown as ApiClient);
  return [controller, api];
}

describe("GameController", () => {
  it("renders the server position after an accepted move", async () => {
    const [c] = makeController([5, 3, 3]);
    await c.newGame("0,1", "5,3,3", [1, 2]);
    const outcome = await c.submitMove(3, 3);
    expect(outcome.ok).toBe(true);
    expect(c.view().position).toEqual([5, 3, 2]);
  });

  it("rejects clicks outside the board without touching the state", async () => {
    const [c] = makeController([2, 1]);
    await c.newGame("0,1", "2,1", [1, 2]);
    const before = c.view().position;
    const outcome = await c.submitMove(5, 5);
    expect(outcome.ok).toBe(false);
    expect(c.view().position).toEqual(before);
  });

  it("biting the origin ends the game", async () => {
    const [c] = makeController([3, 2]);
    await c.newGame("0,1", "3,2", [1, 2]);
    const outcome = await c.submitMove(1, 1);
    expect(outcome.ok).toBe(true);
    expect(c.view().position).toEqual([]);
    expect(c.view().scorePanel).not.toBeNull();
  });

  it("refuses a second move while one is in flight", async () => {
    const [c, api] = makeController([4, 2]);
    await c.newGame("0,1", "4,2", [1, 2]);
    let release: () => void = () => undefined;
    api.moveDelay = () => new Promise((res) => { release = res; });
    const first = c.submitMove(1, 4);
    await new Promise((res) => setTimeout(res, 0));
    const second = await c.submitMove(1, 3);
    expect(second.ok).toBe(false);
    if (!second.ok) expect(second.reason).toMatch(/in flight/);
    release();
    const outcome = await first;
    expect(outcome.ok).toBe(true);
  });

  it("sources hover previews from the solve endpoint", async () => {
    const [c, api] = makeController([5, 3, 3]);
    await c.newGame("0,1", "5,3,3", [1, 2]);
    api.solveCalls.length = 0;
    const preview = await c.hover(3, 3);
    expect(preview).toBe(1); // the fake server says ordinal 1 everywhere
    expect(api.solveCalls).toEqual([[5, 3, 2]]);
  });

  it("turns malformed server payloads into an error banner", async () => {
    const api = {
      newGame: async () => ({ junk: true }),
    };
    const c = new GameController(api as unknown as ApiClient);
    const view = await c.newGame("0,1", "2", [1]);
    expect(view.banner).toMatch(/error/);
  });

  it("refuses to move on an engine seat's turn", async () => {
    const [c, api] = makeController([2, 1]);
    api.state.seats = [
      { seat: 1, kind: "engine" },
      { seat: 2, kind: "human" },
    ];
    await c.newGame("0,1", "2,1", [2]);
    const outcome = await c.submitMove(1, 1);
    expect(outcome.ok).toBe(false);
    if (!outcome.ok) expect(outcome.reason).toMatch(/not a human seat/);
  });
});
