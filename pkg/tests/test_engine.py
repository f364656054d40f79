import itertools
import random

import pytest

from notakto import board, engine, monoid
from notakto.board import Move
from notakto.oracle import Outcome, Position, apply_move

CENTER = 1 << 4
CODES = board.enumerate_canonical()


def test_recommend_single_empty_board(table):
    rec = engine.recommend(Position.from_masks([0]), table)
    assert rec.move == Move(0, 4)
    assert rec.outcome_now is Outcome.N
    assert monoid.render_element(rec.value_now) == "c"
    assert "c^2" in rec.rationale


def test_recommend_two_empty_boards_still_moves(table):
    rec = engine.recommend(Position.from_masks([0, 0]), table)
    assert rec.move is not None
    assert rec.outcome_now is Outcome.P
    assert "winning replies" in rec.rationale


def test_recommend_center_plus_empty(table):
    position = Position.from_masks([CENTER, 0])
    rec = engine.recommend(position, table)
    after = engine.position_value(apply_move(position, rec.move), table)
    assert monoid.is_p(after)
    # The mirror move (the other board's center) is among the winners.
    assert Move(1, 4) in engine.winning_moves(position, table)


def test_recommend_terminal(table):
    rec = engine.recommend(Position.from_masks([0b111]), table)
    assert rec.move is None
    assert rec.outcome_now is Outcome.N


def test_recommend_is_deterministic(table):
    position = Position.from_masks([3, 0, CENTER])
    assert engine.recommend(position, table) == engine.recommend(position, table)


def test_never_blunders_up_to_two_boards(table, solver):
    # From every N-position on at most two canonical boards, the
    # recommended move lands the opponent in an oracle P-position.
    singles = itertools.combinations_with_replacement(CODES, 1)
    pairs = itertools.combinations_with_replacement(CODES, 2)
    for combo in itertools.chain(singles, pairs):
        position = Position.from_masks(combo)
        if position.is_terminal():
            continue
        if solver.outcome(position) is not Outcome.N:
            continue
        rec = engine.recommend(position, table)
        assert solver.outcome(apply_move(position, rec.move)) is Outcome.P, combo


def test_quotient_winning_moves_match_oracle_on_pairs(table, solver):
    for combo in itertools.combinations_with_replacement(CODES[:40], 2):
        position = Position.from_masks(combo)
        if position.is_terminal():
            continue
        assert engine.winning_moves(position, table) == solver.winning_moves(position)


def test_play_out_one_empty_board_first_player_wins(table):
    chooser = engine.engine_player(table)
    transcript = engine.play_out(Position.from_masks([0]), [chooser, chooser])
    assert transcript.loser == 1
    assert len(transcript.positions) == len(transcript.moves) + 1
    assert transcript.positions[-1].is_terminal()


def test_play_out_two_empty_boards_second_player_wins(table):
    chooser = engine.engine_player(table)
    transcript = engine.play_out(Position.from_masks([0, 0]), [chooser, chooser])
    assert transcript.loser == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_self_play_parity_matches_quotient(table, k):
    # c^k lies in the P-set exactly for even k, so the first player wins
    # exactly the odd-k starts.
    c = monoid.GENERATORS["c"]
    power = monoid.product([c] * k)
    chooser = engine.engine_player(table)
    transcript = engine.play_out(Position.from_masks([0] * k), [chooser, chooser])
    first_player_wins = transcript.loser == 1
    assert monoid.is_p(power) == (k % 2 == 0)
    assert first_player_wins == (k % 2 == 1)


def test_engine_beats_random_from_two_boards(table):
    rng = random.Random(20260810)
    start = Position.from_masks([0, 0])
    players = [engine.random_player(rng), engine.engine_player(table)]
    for _ in range(1000):
        transcript = engine.play_out(start, players)
        assert transcript.loser == 0  # the random first player always loses


def test_scripted_player_and_illegal_propagation(table):
    script = engine.scripted_player([(0, 4), (0, 4)])
    position = Position.from_masks([0])
    first = script(position)
    position = apply_move(position, first)
    with pytest.raises(Exception):
        apply_move(position, script(position))  # same cell twice

    exhausted = engine.scripted_player([])
    with pytest.raises(ValueError, match="ran out"):
        exhausted(Position.from_masks([0]))
