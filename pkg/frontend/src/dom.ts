// Thin DOM layer: paints a BoardView and forwards clicks/hovers to the
// controller. All decisions live in controller.ts / view.ts.

import type { GameController } from "./controller.js";
import type { BoardView } from "./view.js";

export interface Elements {
  board: HTMLElement;
  seatPanel: HTMLElement;
  scorePanel: HTMLElement;
  banner: HTMLElement;
  status: HTMLElement;
}

export function paint(view: BoardView, el: Elements,
                      controller: GameController): void {
  el.banner.textContent = view.banner ?? "";
  el.banner.style.display = view.banner ? "block" : "none";

  el.status.textContent =
    view.ordinal !== null ? `ordinal ${view.ordinal}` : "";

  el.seatPanel.replaceChildren(
    ...view.seatPanel.seats.map((s) => {
      const span = document.createElement("span");
      span.className = "seat" + (view.seatPanel.toMove === s.seat
        ? " seat-active" : "");
      span.textContent = `seat ${s.seat}: ${s.kind}`;
      return span;
    }),
  );

  if (view.scorePanel) {
    el.scorePanel.replaceChildren(
      ...view.scorePanel.map((e) => {
        const span = document.createElement("span");
        span.className = "score";
        span.textContent = `seat ${e.seat} scores ${e.score}`;
        return span;
      }),
    );
  } else {
    el.scorePanel.replaceChildren();
  }

  el.board.replaceChildren(
    ...view.grid.map((row) => {
      const rowDiv = document.createElement("div");
      rowDiv.className = "board-row";
      for (const cell of row) {
        const btn = document.createElement("button");
        btn.className = "cell" + (cell.highlighted ? " cell-solution" : "");
        btn.title = `bite ${cell.row} ${cell.col}`;
        btn.addEventListener("click", async () => {
          const outcome = await controller.submitMove(cell.row, cell.col);
          if (outcome.ok) {
            paint(outcome.view, el, controller);
          } else {
            el.banner.textContent = outcome.reason;
            el.banner.style.display = "block";
          }
        });
        btn.addEventListener("mouseenter", async () => {
          const preview = await controller.hover(cell.row, cell.col);
          if (preview !== null) btn.title = `bite ${cell.row} ${cell.col}`
            + ` -> ordinal ${preview}`;
        });
        rowDiv.appendChild(btn);
      }
      return rowDiv;
    }),
  );
}
