"""Exhaustive misere solver for disjunctive sums of boards.

This is the ground truth the quotient dictionary is derived from and
verified against.  A position is a multiset of boards; on each turn a
player puts an X on one live board, and whoever completes the last line
on the last live board loses.

Outcomes are computed by plain memoized depth-first search.  States are
keyed by the sorted tuple of canonical codes of the *live* boards only:
dead boards admit no moves and are indistinguishable from absent ones,
and dihedrally equivalent boards have identical game trees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import board as board_mod
from .board import Move, canonicalize, is_dead, legal_cells, parse_board, render_board


class Outcome(enum.Enum):
    """N: next player to move wins; P: previous player wins."""

    N = "N"
    P = "P"


class IllegalMoveError(ValueError):
    pass


class TerminalPositionError(ValueError):
    pass


@dataclass(frozen=True)
class Position:
    """A disjunctive sum of boards.  Board order is irrelevant to play."""

    boards: tuple[int, ...]

    @classmethod
    def from_masks(cls, masks) -> "Position":
        masks = tuple(int(m) for m in masks)
        for m in masks:
            if not 0 <= m < 512:
                raise ValueError(f"mask {m} out of range 0..511")
        return cls(masks)

    def live_indices(self) -> list[int]:
        return [i for i, m in enumerate(self.boards) if not is_dead(m)]

    def is_terminal(self) -> bool:
        return all(is_dead(m) for m in self.boards)

    def canonical_key(self) -> tuple[int, ...]:
        """Sorted canonical codes of the live boards; dead boards drop out."""
        return tuple(sorted(canonicalize(m) for m in self.boards if not is_dead(m)))


def legal_moves(position: Position) -> list[Move]:
    """All legal moves, ordered by board index then cell."""
    return [
        Move(i, cell)
        for i in position.live_indices()
        for cell in legal_cells(position.boards[i])
    ]


def apply_move(position: Position, move: Move) -> Position:
    """Place an X; dead boards stay in the multiset but are out of play."""
    if not 0 <= move.board < len(position.boards):
        raise IllegalMoveError(f"no board {move.board} in position")
    mask = position.boards[move.board]
    if is_dead(mask):
        raise IllegalMoveError(f"board {move.board} is dead")
    if not 0 <= move.cell < 9:
        raise IllegalMoveError(f"cell {move.cell} out of range 0..8")
    if mask & (1 << move.cell):
        raise IllegalMoveError(f"cell {move.cell} on board {move.board} is occupied")
    boards = list(position.boards)
    boards[move.board] = mask | (1 << move.cell)
    return Position(tuple(boards))


def _successor_classes() -> dict[int, tuple[int, ...]]:
    # For each live canonical code, the distinct canonical codes of its
    # one-move successors; a move that kills the board contributes the
    # sentinel -1.  Sound for outcome computation: the successor class
    # set of a board is invariant under the dihedral group.
    table: dict[int, tuple[int, ...]] = {}
    for code in board_mod.enumerate_canonical():
        if is_dead(code):
            continue
        succ = set()
        for cell in legal_cells(code):
            child = code | (1 << cell)
            succ.add(-1 if is_dead(child) else canonicalize(child))
        table[code] = tuple(sorted(succ))
    return table


_SUCCESSORS = _successor_classes()


def _encode(key: tuple[int, ...]) -> int:
    # Injective fold of a sorted code tuple into one int (9 bits per code,
    # leading 1 distinguishes lengths).
    out = 1
    for code in key:
        out = (out << 9) | code
    return out


class Solver:
    """Memoized game-tree search over canonical position keys.

    Logically pure: `outcome` and `winning_moves` depend only on their
    arguments.  The memo table is a monotone cache of fully computed
    entries, so concurrent readers either miss (and recompute the same
    value) or see the final answer; partially computed entries are never
    stored.
    """

    def __init__(self) -> None:
        self._memo: dict[int, bool] = {}

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def outcome(self, position: Position) -> Outcome:
        return self.outcome_of_key(position.canonical_key())

    def outcome_of_key(self, key: tuple[int, ...]) -> Outcome:
        """Outcome for a sorted tuple of live canonical codes.

        The empty key is terminal: the previous player just completed the
        last line and lost, so the player nominally to move wins (N).
        """
        return Outcome.N if self._next_wins(key) else Outcome.P

    def _next_wins(self, key: tuple[int, ...]) -> bool:
        enc = _encode(key)
        cached = self._memo.get(enc)
        if cached is not None:
            return cached
        result = False
        if not key:
            result = True
        else:
            tried = set()
            for i, code in enumerate(key):
                if code in tried:
                    continue
                tried.add(code)
                rest = key[:i] + key[i + 1 :]
                for succ in _SUCCESSORS[code]:
                    child = rest if succ < 0 else tuple(sorted(rest + (succ,)))
                    if not self._next_wins(child):
                        result = True
                        break
                if result:
                    break
        self._memo[enc] = result
        return result

    def winning_moves(self, position: Position) -> list[Move]:
        """Legal moves that leave the opponent in a P-position."""
        moves = legal_moves(position)
        if not moves:
            raise TerminalPositionError("position has no legal moves")
        return [
            m
            for m in moves
            if self.outcome(apply_move(position, m)) is Outcome.P
        ]


def parse_position(text: str) -> Position:
    """Parse '/'-joined 9-char boards, or ','-joined decimal masks."""
    if not text:
        raise ValueError("empty position string")
    if all(ch.isdigit() or ch == "," for ch in text):
        masks = []
        for part in text.split(","):
            if not part:
                raise ValueError(f"empty mask in {text!r}")
            mask = int(part)
            if mask >= 512:
                raise ValueError(f"mask {mask} out of range 0..511")
            masks.append(mask)
        return Position(tuple(masks))
    return Position(tuple(parse_board(part) for part in text.split("/")))


def render_position(position: Position) -> str:
    return "/".join(render_board(m) for m in position.boards)
