"""Move recommendation and game play-out on top of the value dictionary.

All decisions here are quotient lookups, never tree search, so they stay
cheap at any board count.  From a winning position the engine plays any
move whose successor value lands in the P-set; from a lost position it
plays the move leaving the opponent the fewest winning replies (the best
practical swindle).  Ties break positionally, lowest board index then
lowest cell, so recommendations are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import monoid
from .board import Move
from .oracle import Outcome, Position, apply_move, legal_moves
from .quotient import ValueTable, outcome_via_quotient, position_value


@dataclass(frozen=True)
class Recommendation:
    move: Move | None
    outcome_now: Outcome
    value_now: monoid.Element
    rationale: str


def winning_moves(position: Position, table: ValueTable) -> list[Move]:
    """Moves whose successor value lies in the P-set (quotient lookup)."""
    return [
        m
        for m in legal_moves(position)
        if monoid.is_p(position_value(apply_move(position, m), table))
    ]


def recommend(position: Position, table: ValueTable) -> Recommendation:
    value_now = position_value(position, table)
    outcome_now = outcome_via_quotient(position, table)
    moves = legal_moves(position)
    if not moves:
        return Recommendation(None, outcome_now, value_now, "no moves available")

    scored = [
        (m, position_value(apply_move(position, m), table)) for m in moves
    ]
    winning = [(m, v) for m, v in scored if monoid.is_p(v)]
    if winning:
        move, value = winning[0]
        return Recommendation(
            move,
            outcome_now,
            value_now,
            f"moves to value {monoid.render_element(value)}, a previous-player win",
        )

    # Lost position: minimize the opponent's winning replies.
    def replies(move: Move) -> int:
        return len(winning_moves(apply_move(position, move), table))

    move = min(moves, key=lambda m: (replies(m), m))
    return Recommendation(
        move,
        outcome_now,
        value_now,
        f"no winning move; leaves the opponent {replies(move)} winning replies",
    )


@dataclass
class Transcript:
    """Record of one played-out game.  Player 0 moves first; the loser is
    whoever completed the last line on the last live board."""

    positions: list[Position]
    moves: list[Move]
    loser: int | None


def engine_player(table: ValueTable):
    def choose(position: Position) -> Move:
        rec = recommend(position, table)
        assert rec.move is not None
        return rec.move

    return choose


def random_player(rng: random.Random):
    def choose(position: Position) -> Move:
        return rng.choice(legal_moves(position))

    return choose


def scripted_player(moves):
    iterator = iter(moves)

    def choose(position: Position) -> Move:
        try:
            return Move(*next(iterator))
        except StopIteration:
            raise ValueError("scripted player ran out of moves") from None

    return choose


def play_out(position: Position, strategies) -> Transcript:
    """Alternate moves (player 0 first) until every board is dead.

    `strategies` is one move chooser per player; illegal chosen moves
    propagate as IllegalMoveError.
    """
    transcript = Transcript(positions=[position], moves=[], loser=None)
    player = 0
    while not position.is_terminal():
        move = strategies[player](position)
        position = apply_move(position, move)
        transcript.positions.append(position)
        transcript.moves.append(move)
        if position.is_terminal():
            transcript.loser = player
        else:
            player = 1 - player
    return transcript
