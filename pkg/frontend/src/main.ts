import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import type { HintLevel } from "./types.js";

function bootstrap(): void {
  const root = document.getElementById("game");
  const boardCount = document.getElementById("board-count") as HTMLSelectElement;
  const firstMover = document.getElementById("first-mover") as HTMLSelectElement;
  const hintLevel = document.getElementById("hint-level") as HTMLSelectElement;
  const newGame = document.getElementById("new-game") as HTMLButtonElement;
  if (!root) {
    return;
  }
  const controller = new GameController(root, new ApiClient(""));

  newGame.addEventListener("click", () => {
    void controller.newGame(Number(boardCount.value), firstMover.value === "human");
  });
  hintLevel.addEventListener("change", () => {
    void controller.setHints(hintLevel.value as HintLevel);
  });
  void controller.newGame(1, true);
}

document.addEventListener("DOMContentLoaded", bootstrap);
