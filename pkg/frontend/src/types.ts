export interface MoveDto {
  board: number;
  cell: number;
}

export interface AnalyzeResponse {
  outcome: "N" | "P";
  value: string;
  winning_moves: MoveDto[];
}

export interface BestMoveResponse {
  move: MoveDto | null;
  outcome: "N" | "P";
}

export type HintLevel = "off" | "outcome" | "full";
