"""Single 3x3 X-only board, stored as a 9-bit cell mask.

Cells are indexed row-major with bit 0 = top-left:

    0 | 1 | 2
    ---+---+---
    3 | 4 | 5
    ---+---+---
    6 | 7 | 8

Bit i of a mask is set iff cell i holds an X.  A board is *dead* once any
row, column, or diagonal is completely filled; a dead board is out of play
and admits no further moves.  Boards are identified up to the eight
rotations and reflections of the square; the canonical representative of
an orbit is its minimum mask value.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

FULL_MASK = 0b111111111

#: The eight three-in-a-row cell triples: rows, columns, diagonals.
LINES = (
    0b000000111,  # cells 0,1,2
    0b000111000,  # cells 3,4,5
    0b111000000,  # cells 6,7,8
    0b001001001,  # cells 0,3,6
    0b010010010,  # cells 1,4,7
    0b100100100,  # cells 2,5,8
    0b100010001,  # cells 0,4,8
    0b001010100,  # cells 2,4,6
)


class Move(NamedTuple):
    """A single X placed at `cell` on the board at `board` in a position."""

    board: int
    cell: int


def _cell_permutations() -> tuple[tuple[int, ...], ...]:
    # Each symmetry as a permutation of cell indices: image[i] is where
    # cell i lands.  Row/column coordinates: cell = 3*r + c.
    symmetries = (
        lambda r, c: (r, c),          # identity
        lambda r, c: (c, 2 - r),      # rotate 90 cw
        lambda r, c: (2 - r, 2 - c),  # rotate 180
        lambda r, c: (2 - c, r),      # rotate 270 cw
        lambda r, c: (r, 2 - c),      # reflect left-right
        lambda r, c: (2 - r, c),      # reflect top-bottom
        lambda r, c: (c, r),          # reflect main diagonal
        lambda r, c: (2 - c, 2 - r),  # reflect anti-diagonal
    )
    tables = []
    for sym in symmetries:
        image = []
        for i in range(9):
            r, c = divmod(i, 3)
            r2, c2 = sym(r, c)
            image.append(3 * r2 + c2)
        tables.append(tuple(image))
    return tuple(tables)


#: Cell-permutation table for the dihedral group of the square (order 8).
PERMUTATIONS = _cell_permutations()
NUM_SYMMETRIES = len(PERMUTATIONS)


def lines() -> tuple[int, ...]:
    """The eight line masks (rows, columns, diagonals)."""
    return LINES


def is_dead(mask: int) -> bool:
    """True iff the board contains at least one completed line."""
    return any(mask & line == line for line in LINES)


def legal_cells(mask: int) -> list[int]:
    """Cells that may still receive an X; empty for dead boards.

    A move that completes a line is legal (completing the last line on
    the last live board is how the game is lost).
    """
    if is_dead(mask):
        return []
    return [cell for cell in range(9) if not mask & (1 << cell)]


def transform(mask: int, symmetry: int) -> int:
    """Apply one of the 8 dihedral symmetries to a mask."""
    image = PERMUTATIONS[symmetry]
    out = 0
    for cell in range(9):
        if mask & (1 << cell):
            out |= 1 << image[cell]
    return out


def canonicalize(mask: int) -> int:
    """Minimum mask value over the board's 8 symmetry images."""
    return min(transform(mask, t) for t in range(NUM_SYMMETRIES))


@functools.lru_cache(maxsize=1)
def enumerate_canonical() -> tuple[int, ...]:
    """All canonical codes, ascending; one per orbit of the 512 masks."""
    return tuple(sorted({canonicalize(mask) for mask in range(512)}))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def parse_board(text: str) -> int:
    """Parse the 9-character board format ('X' occupied, '.' empty)."""
    if len(text) != 9:
        raise ValueError(f"board {text!r}: expected 9 characters, got {len(text)}")
    mask = 0
    for cell, ch in enumerate(text):
        if ch == "X":
            mask |= 1 << cell
        elif ch != ".":
            raise ValueError(f"board {text!r}: bad character {ch!r} at cell {cell}")
    return mask


def render_board(mask: int) -> str:
    """Render a mask in the 9-character board format."""
    if not 0 <= mask < 512:
        raise ValueError(f"mask {mask} out of range 0..511")
    return "".join("X" if mask & (1 << cell) else "." for cell in range(9))


def pretty(mask: int) -> str:
    """Three-line grid rendering, for terminal display."""
    text = render_board(mask)
    return "\n".join(" ".join(text[3 * r + c] for c in range(3)) for r in range(3))
