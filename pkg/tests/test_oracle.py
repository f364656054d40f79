import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference
from notakto import board, oracle
from notakto.board import Move
from notakto.oracle import (
    IllegalMoveError,
    Outcome,
    Position,
    TerminalPositionError,
    apply_move,
    parse_position,
    render_position,
)

masks = st.integers(min_value=0, max_value=511)
positions = st.lists(masks, min_size=1, max_size=3).map(Position.from_masks)

LIVE_CODES = [c for c in board.enumerate_canonical() if not board.is_dead(c)]


def knight_cells(cell):
    r, c = divmod(cell, 3)
    out = []
    for dr, dc in ((1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1)):
        r2, c2 = r + dr, c + dc
        if 0 <= r2 < 3 and 0 <= c2 < 3:
            out.append(3 * r2 + c2)
    return sorted(set(out))


@pytest.mark.parametrize(
    "masks_, expected",
    [
        ([0], "N"),            # one empty board: mover wins
        ([0, 0], "P"),         # two empty boards: second player wins
        ([1 << 4], "P"),       # lone center X: the player who made it wins
        ([], "N"),             # no boards at all: terminal convention
        ([0b111], "N"),        # single dead board: terminal
    ],
)
def test_outcome_examples(solver, masks_, expected):
    assert solver.outcome(Position.from_masks(masks_)).value == expected
    if masks_:  # frozen against the independent brute-force recursion
        assert reference.outcome(masks_) == expected


def test_outcome_matches_reference_on_all_single_boards(solver):
    for mask in range(512):
        assert solver.outcome(Position.from_masks([mask])).value == reference.outcome(
            [mask]
        )


def test_outcome_matches_reference_on_all_canonical_pairs(solver):
    for pair in itertools.combinations_with_replacement(board.enumerate_canonical(), 2):
        assert solver.outcome(Position.from_masks(pair)).value == reference.outcome(pair)


def test_winning_moves_single_empty_board(solver):
    assert solver.winning_moves(Position.from_masks([0])) == [Move(0, 4)]


def test_winning_moves_two_empty_boards_is_empty(solver):
    assert solver.winning_moves(Position.from_masks([0, 0])) == []


def test_winning_moves_center_plus_empty_includes_mirror(solver):
    moves = solver.winning_moves(Position.from_masks([1 << 4, 0]))
    assert Move(1, 4) in moves


def test_winning_moves_terminal_raises(solver):
    with pytest.raises(TerminalPositionError):
        solver.winning_moves(Position.from_masks([0b111]))


def test_winning_moves_matches_outcome(solver):
    for pair in itertools.combinations_with_replacement(LIVE_CODES[:20], 2):
        position = Position.from_masks(pair)
        wins = solver.winning_moves(position)
        assert bool(wins) == (solver.outcome(position) is Outcome.N)


def test_apply_move():
    position = Position.from_masks([0])
    assert apply_move(position, Move(0, 4)).boards == (1 << 4,)


def test_apply_move_keeps_dead_boards():
    position = Position.from_masks([0b111, 0])
    after = apply_move(position, Move(1, 4))
    assert after.boards == (0b111, 1 << 4)
    assert after.canonical_key() == (1 << 4,)


@pytest.mark.parametrize(
    "masks_, move",
    [
        ([0b111], Move(0, 3)),   # dead board
        ([1], Move(0, 0)),       # occupied cell
        ([0], Move(1, 0)),       # no such board
        ([0], Move(0, 9)),       # cell out of range
    ],
)
def test_apply_move_rejects_illegal(masks_, move):
    with pytest.raises(IllegalMoveError):
        apply_move(Position.from_masks(masks_), move)


def test_canonical_key_is_multiset_and_symmetry_invariant():
    a = apply_move(Position.from_masks([0, 0]), Move(0, 4))
    b = apply_move(Position.from_masks([0, 0]), Move(1, 4))
    assert a.canonical_key() == b.canonical_key()


@settings(deadline=None)
@given(positions, st.permutations(range(3)), st.lists(st.integers(0, 7), min_size=3, max_size=3))
def test_outcome_symmetry_invariance(solver, position, perm, transforms):
    boards = list(position.boards)
    shuffled = [boards[i] for i in perm if i < len(boards)]
    transformed = [
        board.transform(m, transforms[i]) for i, m in enumerate(shuffled)
    ]
    assert solver.outcome(Position.from_masks(transformed)) == solver.outcome(position)


@settings(deadline=None)
@given(positions)
def test_dead_board_is_irrelevant(solver, position):
    padded = Position.from_masks(position.boards + (0b111,))
    assert solver.outcome(padded) == solver.outcome(position)
    if not position.is_terminal():
        original = {(m.board, m.cell) for m in solver.winning_moves(position)}
        with_pad = {(m.board, m.cell) for m in solver.winning_moves(padded)}
        assert with_pad == original


def test_every_non_center_opening_loses(solver):
    # The diametrically opposite reply wins for the opponent.
    for cell in range(9):
        if cell == 4:
            continue
        after = Position.from_masks([1 << cell])
        assert solver.outcome(after) is Outcome.N
        assert Move(0, 8 - cell) in solver.winning_moves(after)


def test_knight_move_replies_win_after_center(solver):
    # After center plus any response r, every knight's-move cell from r
    # is a winning reply.
    for r in range(9):
        if r == 4:
            continue
        position = Position.from_masks([1 << 4 | 1 << r])
        wins = {m.cell for m in solver.winning_moves(position)}
        expected = set(knight_cells(r))
        assert expected, f"cell {r} should have knight neighbours"
        assert expected <= wins


def find_mimicry_trap(solver):
    """A reachable two-board N-position, reached by an opponent move,
    where copying that move onto the other board loses.

    Any pair of live boards is reachable from two empty boards (every
    subset of a live mask is live), so searching over live canonical
    pairs stays within reachable play.
    """
    for b1 in LIVE_CODES:
        for b2 in LIVE_CODES:
            for cell in board.legal_cells(b1):
                position = Position.from_masks([b1, b2])
                reached = apply_move(position, Move(0, cell))
                if solver.outcome(reached) is not Outcome.N:
                    continue
                mirror = Move(1, cell)
                if reached.boards[1] & (1 << cell) or board.is_dead(reached.boards[1]):
                    continue
                if solver.outcome(apply_move(reached, mirror)) is Outcome.N:
                    return reached, mirror
    return None


def test_mimicry_fails_somewhere(solver):
    found = find_mimicry_trap(solver)
    assert found is not None
    reached, mirror = found
    # Winning move exists but the copy is not one of them.
    wins = solver.winning_moves(reached)
    assert wins
    assert mirror not in wins


def test_concurrent_queries_are_consistent(solver):
    # Fresh solver, cold cache, hammered from several threads: everyone
    # must see the same answers as a sequential run.
    import concurrent.futures

    positions = [
        Position.from_masks(combo)
        for combo in itertools.combinations_with_replacement(LIVE_CODES[:12], 2)
    ]
    fresh = oracle.Solver()
    with concurrent.futures.ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(fresh.outcome, positions))
    assert results == [solver.outcome(p) for p in positions]


def test_parse_position_board_format():
    position = parse_position("....X..../.........")
    assert position.boards == (1 << 4, 0)


def test_parse_position_mask_format():
    assert parse_position("16,0").boards == (16, 0)
    assert parse_position("16").boards == (16,)


@pytest.mark.parametrize("bad", ["", "....X...", "XO.......", "512", "1,,2", "16,"])
def test_parse_position_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_position(bad)


@given(st.lists(masks, min_size=1, max_size=4))
def test_render_parse_round_trip(masks_):
    position = Position.from_masks(masks_)
    assert parse_position(render_position(position)).boards == position.boards
