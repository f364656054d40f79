// Client-side game legality only: the server is the single source of
// truth for outcomes and values, but the client must know which clicks
// are legal and when the game has ended.

export const LINES: readonly number[] = [
  0b000000111, 0b000111000, 0b111000000,
  0b001001001, 0b010010010, 0b100100100,
  0b100010001, 0b001010100,
];

export function isDead(mask: number): boolean {
  return LINES.some((line) => (mask & line) === line);
}

export function cellOccupied(mask: number, cell: number): boolean {
  return (mask & (1 << cell)) !== 0;
}

export function canPlay(mask: number, cell: number): boolean {
  return !isDead(mask) && !cellOccupied(mask, cell);
}

export function place(mask: number, cell: number): number {
  return mask | (1 << cell);
}

export function allDead(boards: readonly number[]): boolean {
  return boards.every(isDead);
}
