// Game session state machine. One in-flight move at a time; responses are
// tagged with a sequence number so anything stale is discarded. Every
// number shown to the user (ordinals, scores, highlights) is taken from
// server responses.

import type { ApiClient } from "./api.js";
import { biteAt, isValidCell } from "./board.js";
import type { GameState } from "./types.js";
import { buildBoardView, errorView, type BoardView } from "./view.js";

export type Rejection = { ok: false; reason: string };
export type Accepted = { ok: true; view: BoardView };
export type MoveOutcome = Accepted | Rejection;

export class GameController {
  private state: GameState | null = null;
  private ruleText = "";
  private seq = 0;
  private inflight = false;
  private lastView: BoardView = errorView("no game yet");

  constructor(private api: ApiClient) {}

  view(): BoardView {
    return this.lastView;
  }

  gameState(): GameState | null {
    return this.state;
  }

  async newGame(rule: string, position: string,
                humanSeats: number[]): Promise<BoardView> {
    const my = ++this.seq;
    try {
      const state = await this.api.newGame(rule, position, humanSeats);
      if (my !== this.seq) return this.lastView; // superseded
      this.state = state;
      this.ruleText = rule;
      await this.refreshAnalysis(my);
    } catch (err) {
      if (my === this.seq) this.lastView = errorView(String((err as Error).message));
    }
    return this.lastView;
  }

  /** Submit a human bite. Illegal clicks are rejected inline and leave the
   * state untouched; legal ones return the re-rendered board after the
   * server has applied the move and any engine replies. */
  async submitMove(row: number, col: number): Promise<MoveOutcome> {
    const state = this.state;
    if (!state || state.finished) {
      return { ok: false, reason: "no game in progress" };
    }
    if (state.toMove === null ||
        state.seats[state.toMove - 1]?.kind !== "human") {
      return { ok: false, reason: "not a human seat's turn" };
    }
    if (!isValidCell(state.position, row, col)) {
      return { ok: false, reason: "cell is outside the board" };
    }
    if (this.inflight) {
      return { ok: false, reason: "a move is already in flight" };
    }
    this.inflight = true;
    const my = ++this.seq;
    try {
      const next = await this.api.move(state.id, row, col);
      if (my !== this.seq) return { ok: true, view: this.lastView };
      this.state = next;
      await this.refreshAnalysis(my);
      return { ok: true, view: this.lastView };
    } catch (err) {
      return { ok: false, reason: String((err as Error).message) };
    } finally {
      this.inflight = false;
    }
  }

  /** What-if preview: the ordinal (server-sourced) of the position this
   * cell would bite down to. */
  async hover(row: number, col: number): Promise<number | null> {
    const state = this.state;
    if (!state || state.finished || !isValidCell(state.position, row, col)) {
      return null;
    }
    const successor = biteAt(state.position, row, col);
    try {
      const solve = await this.api.solve(this.ruleText, successor);
      return solve.ordinal;
    } catch {
      return null;
    }
  }

  private async refreshAnalysis(my: number): Promise<void> {
    const state = this.state;
    if (!state) return;
    if (state.finished || state.position.length === 0) {
      if (my === this.seq) this.lastView = buildBoardView(state, null);
      return;
    }
    try {
      const solve = await this.api.solve(this.ruleText, state.position);
      if (my === this.seq) this.lastView = buildBoardView(state, solve);
    } catch (err) {
      if (my === this.seq) {
        this.lastView = buildBoardView(state, null,
          `error: ${(err as Error).message}`);
      }
    }
  }
}
