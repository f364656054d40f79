"""Perfect play for Notakto, multi-board misere X-only tic-tac-toe.

An exhaustive memoized solver provides ground truth; a 102-entry value
dictionary into an 18-element commutative monoid, re-derived from the
solver and verified exhaustively against it, provides O(1) outcome
determination and move advice for arbitrary sums of boards.
"""

from .board import Move, canonicalize, enumerate_canonical, is_dead, legal_cells
from .engine import Recommendation, play_out, recommend
from .monoid import Element, P_SET, is_p, multiply, parse_element, render_element
from .oracle import (
    IllegalMoveError,
    Outcome,
    Position,
    Solver,
    TerminalPositionError,
    apply_move,
    legal_moves,
    parse_position,
    render_position,
)
from .quotient import (
    AmbiguousAssignment,
    InferenceConfig,
    NoConsistentAssignment,
    ValueTable,
    infer_value_table,
    outcome_via_quotient,
    position_value,
    verify_table,
)

__all__ = [
    "AmbiguousAssignment",
    "Element",
    "IllegalMoveError",
    "InferenceConfig",
    "Move",
    "NoConsistentAssignment",
    "Outcome",
    "P_SET",
    "Position",
    "Recommendation",
    "Solver",
    "TerminalPositionError",
    "ValueTable",
    "apply_move",
    "canonicalize",
    "enumerate_canonical",
    "infer_value_table",
    "is_dead",
    "is_p",
    "legal_cells",
    "legal_moves",
    "multiply",
    "outcome_via_quotient",
    "parse_element",
    "parse_position",
    "play_out",
    "position_value",
    "recommend",
    "render_element",
    "render_position",
    "verify_table",
]
