import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import { paint, type Elements } from "./dom.js";

function grab(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function parseSeats(text: string): number[] {
  return text.split(",").map((t) => t.trim()).filter(Boolean)
    .map((t) => parseInt(t, 10));
}

function boot(): void {
  const controller = new GameController(new ApiClient(""));
  const el: Elements = {
    board: grab("board"),
    seatPanel: grab("seat-panel"),
    scorePanel: grab("score-panel"),
    banner: grab("banner"),
    status: grab("status"),
  };
  const form = grab("new-game-form") as HTMLFormElement;
  form.addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const rule = (grab("rule-input") as HTMLInputElement).value || "0,1";
    const position = (grab("position-input") as HTMLInputElement).value
      || "5,3,3";
    const seats = parseSeats(
      (grab("seats-input") as HTMLInputElement).value || "1");
    const view = await controller.newGame(rule, position, seats);
    paint(view, el, controller);
  });
}

document.addEventListener("DOMContentLoaded", boot);
