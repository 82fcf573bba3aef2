import { formatPosition } from "./board.js";
import {
  checkGameState,
  checkSolveInfo,
  type GameState,
  type Position,
  type SolveInfo,
} from "./types.js";

async function getJson(url: string): Promise<unknown> {
  const res = await fetch(url);
  if (!res.ok) {
    throw new Error(await describeFailure(res));
  }
  return res.json();
}

async function postJson(url: string, body: unknown): Promise<unknown> {
  const res = await fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    throw new Error(await describeFailure(res));
  }
  return res.json();
}

async function describeFailure(res: Response): Promise<string> {
  try {
    const doc = (await res.json()) as { detail?: string };
    if (doc && typeof doc.detail === "string") return doc.detail;
  } catch {
    // fall through to the generic message
  }
  return `server error ${res.status}`;
}

export class ApiClient {
  constructor(private base: string = "") {}

  async solve(rule: string, position: Position): Promise<SolveInfo> {
    const q = new URLSearchParams({ rule, position: formatPosition(position) });
    return checkSolveInfo(await getJson(`${this.base}/api/solve?${q}`));
  }

  async normalize(scores: string): Promise<number[]> {
    const q = new URLSearchParams({ scores });
    return (await getJson(`${this.base}/api/rules/normalize?${q}`)) as number[];
  }

  async newGame(rule: string, position: string,
                humanSeats: number[]): Promise<GameState> {
    return checkGameState(await postJson(`${this.base}/api/game`, {
      rule, position, humanSeats,
    }));
  }

  async getGame(id: string): Promise<GameState> {
    return checkGameState(await getJson(`${this.base}/api/game/${id}`));
  }

  async move(id: string, row: number, col: number): Promise<GameState> {
    return checkGameState(
      await postJson(`${this.base}/api/game/${id}/move`, { row, col }));
  }
}
