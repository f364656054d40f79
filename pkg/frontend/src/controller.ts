import { ApiClient, ApiError } from "./api.js";
import { allDead, canPlay, isDead, cellOccupied, place } from "./rules.js";
import type { AnalyzeResponse, HintLevel, MoveDto } from "./types.js";

export interface GameState {
  boards: number[];
  humanTurn: boolean;
  over: boolean;
  loser: "human" | "engine" | null;
  busy: boolean;
  hints: HintLevel;
  analysis: AnalyzeResponse | null;
  lastEngineMove: MoveDto | null;
  error: string | null;
}

const HUMAN_LOSS = "You completed the last line. You lose!";
const ENGINE_LOSS = "Engine completed the last line. Engine loses, you win!";

/** Renders the game into a root element and talks to the analysis API.
 *
 * The client owns the full game state (the service is stateless) but
 * computes no game logic beyond click legality; outcomes, values, and
 * winning cells all come from the API.  One request is in flight at a
 * time; input is locked while the engine is thinking.
 */
export class GameController {
  private current: GameState = {
    boards: [],
    humanTurn: true,
    over: false,
    loser: null,
    busy: false,
    hints: "off",
    analysis: null,
    lastEngineMove: null,
    error: null,
  };

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    this.root.addEventListener("click", (event) => {
      const target = event.target as HTMLElement | null;
      const cell = target?.closest?.("button.cell") as HTMLElement | null;
      if (cell?.dataset.board !== undefined && cell.dataset.cell !== undefined) {
        void this.clickCell(Number(cell.dataset.board), Number(cell.dataset.cell));
      }
    });
    this.render();
  }

  get state(): Readonly<GameState> {
    return this.current;
  }

  async newGame(boardCount: number, humanFirst: boolean): Promise<void> {
    if (!Number.isInteger(boardCount) || boardCount < 1 || boardCount > 6) {
      throw new RangeError(`board count must be 1..6, got ${boardCount}`);
    }
    const fresh: GameState = {
      ...this.current,
      boards: new Array<number>(boardCount).fill(0),
      humanTurn: true,
      over: false,
      loser: null,
      busy: false,
      analysis: null,
      lastEngineMove: null,
      error: null,
    };
    if (!humanFirst) {
      try {
        const reply = await this.api.bestMove(fresh.boards);
        if (reply.move) {
          fresh.boards[reply.move.board] = place(
            fresh.boards[reply.move.board]!,
            reply.move.cell,
          );
          fresh.lastEngineMove = reply.move;
        }
      } catch (err) {
        // Leave the previous game untouched; just surface the failure.
        this.current = { ...this.current, error: describe(err) };
        this.render();
        return;
      }
    }
    this.current = fresh;
    await this.refreshHints();
    this.render();
  }

  async clickCell(board: number, cell: number): Promise<void> {
    const s = this.current;
    if (s.busy || s.over || !s.humanTurn) {
      return;
    }
    const mask = s.boards[board];
    if (mask === undefined || !canPlay(mask, cell)) {
      return; // clicks on dead boards and occupied cells are inert
    }
    const snapshot = s.boards.slice();
    const boards = s.boards.slice();
    boards[board] = place(mask, cell);
    if (allDead(boards)) {
      this.current = {
        ...s,
        boards,
        humanTurn: false,
        over: true,
        loser: "human",
        error: null,
      };
      await this.refreshHints();
      this.render();
      return;
    }
    this.current = { ...s, boards, humanTurn: false, busy: true, error: null };
    this.render();
    try {
      const reply = await this.api.bestMove(boards);
      const after = boards.slice();
      let lastEngineMove = this.current.lastEngineMove;
      if (reply.move) {
        after[reply.move.board] = place(after[reply.move.board]!, reply.move.cell);
        lastEngineMove = reply.move;
      }
      const finished = allDead(after);
      this.current = {
        ...this.current,
        boards: after,
        busy: false,
        humanTurn: !finished,
        over: finished,
        loser: finished ? "engine" : null,
        lastEngineMove,
      };
    } catch (err) {
      this.current = {
        ...this.current,
        boards: snapshot,
        busy: false,
        humanTurn: true,
        error: describe(err),
      };
      this.render();
      return;
    }
    await this.refreshHints();
    this.render();
  }

  async setHints(level: HintLevel): Promise<void> {
    this.current = { ...this.current, hints: level };
    if (level === "off") {
      this.current.analysis = null;
    } else {
      await this.refreshHints();
    }
    this.render();
  }

  private async refreshHints(): Promise<void> {
    if (this.current.hints === "off" || this.current.boards.length === 0) {
      return;
    }
    try {
      this.current = {
        ...this.current,
        analysis: await this.api.analyze(this.current.boards),
      };
    } catch (err) {
      // Full hints degrade to outcome-only rather than failing the game.
      this.current = {
        ...this.current,
        hints: this.current.hints === "full" ? "outcome" : this.current.hints,
        error: describe(err),
      };
    }
  }

  private render(): void {
    const s = this.current;
    const winning = new Set(
      s.hints === "full" && s.analysis
        ? s.analysis.winning_moves.map((m) => `${m.board}:${m.cell}`)
        : [],
    );
    const boards = s.boards
      .map((mask, b) => {
        const dead = isDead(mask);
        const cells = Array.from({ length: 9 }, (_, c) => {
          const classes = ["cell"];
          if (cellOccupied(mask, c)) classes.push("x");
          if (!dead && winning.has(`${b}:${c}`)) classes.push("win");
          const label = cellOccupied(mask, c) ? "X" : "";
          return `<button class="${classes.join(" ")}" data-board="${b}" data-cell="${c}">${label}</button>`;
        }).join("");
        return `<div class="board${dead ? " dead" : ""}" data-board="${b}">${cells}</div>`;
      })
      .join("");

    let status: string;
    if (s.over) {
      status = s.loser === "human" ? HUMAN_LOSS : ENGINE_LOSS;
    } else if (s.boards.length === 0) {
      status = "Pick a board count and start a game.";
    } else if (s.busy) {
      status = "Engine is thinking...";
    } else {
      status = "Your move.";
    }

    let hints = "";
    if (s.hints !== "off" && s.analysis) {
      hints = `<span class="hint-outcome">${s.analysis.outcome}</span>`;
      if (s.hints === "full") {
        hints += ` <span class="hint-value">${s.analysis.value}</span>`;
      }
    }

    this.root.innerHTML = `
      <div class="banner${s.error ? "" : " hidden"}" id="banner">${s.error ?? ""}</div>
      <div class="status" id="status">${status}</div>
      <div class="hints" id="hints">${hints}</div>
      <div class="boards">${boards}</div>
    `;
  }
}

function describe(err: unknown): string {
  return err instanceof ApiError ? err.message : `unexpected error: ${String(err)}`;
}
