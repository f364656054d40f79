#!/usr/bin/env python3
"""Hunt for two-board positions where copying the opponent's move loses.

Mirroring on the other board is a tempting strategy (it even wins the
opening of the two-board game), so this catalogs reachable refutations:
positions reached by a move where the copy of that move is a losing
reply even though a winning reply exists.
"""

import argparse
import sys

from notakto import Outcome, Position, Solver, apply_move
from notakto.board import Move, is_dead, legal_cells, pretty, enumerate_canonical


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=3, help="examples to print")
    args = parser.parse_args()

    solver = Solver()
    live = [c for c in enumerate_canonical() if not is_dead(c)]
    shown = 0
    for b1 in live:
        for b2 in live:
            for cell in legal_cells(b1):
                reached = apply_move(Position((b1, b2)), Move(0, cell))
                if solver.outcome(reached) is not Outcome.N:
                    continue
                mirror = Move(1, cell)
                if reached.boards[1] & (1 << cell) or is_dead(reached.boards[1]):
                    continue
                if solver.outcome(apply_move(reached, mirror)) is Outcome.P:
                    continue
                wins = solver.winning_moves(reached)
                print(f"opponent just played cell {cell} on the left board:")
                left = pretty(reached.boards[0]).split("\n")
                right = pretty(reached.boards[1]).split("\n")
                for l, r in zip(left, right):
                    print(f"  {l}     {r}")
                print(f"  copying (board 1, cell {cell}) loses; "
                      f"winning replies: {[(m.board, m.cell) for m in wins]}")
                print()
                shown += 1
                if shown >= args.limit:
                    return 0
    return 0 if shown else 1


if __name__ == "__main__":
    sys.exit(main())
