"""Command-line interface: solve, best, dict, verify, play, serve.

Positions are given as '/'-joined 9-character boards ('X' and '.') or as
','-joined decimal masks.  The value dictionary is inferred on startup;
point --dict (or the NOTAKTO_DICT environment variable) at a cache file
to skip re-inference on later runs.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import engine, monoid, quotient, service
from .board import Move, is_dead, pretty
from .oracle import (
    IllegalMoveError,
    Position,
    Solver,
    apply_move,
    parse_position,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_TERMINAL = 3


def load_or_build_table(dict_path: str | None, quiet: bool = False) -> quotient.ValueTable:
    """Load a cached dictionary, rebuilding (and overwriting) on any
    missing, corrupt, or checksum-failing cache."""
    path = dict_path or os.environ.get("NOTAKTO_DICT")
    if path and Path(path).exists():
        try:
            return quotient.ValueTable.load(path)
        except (ValueError, KeyError, OSError) as exc:
            if not quiet:
                print(f"rebuilding dictionary cache ({exc})", file=sys.stderr)
    table = quotient.infer_value_table(Solver(), quotient.InferenceConfig())
    if path:
        table.save(path)
    return table


def _parse_or_exit(text: str) -> Position:
    try:
        return parse_position(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE) from None


def cmd_solve(args) -> int:
    position = _parse_or_exit(args.position)
    table = load_or_build_table(args.dict)
    value = quotient.position_value(position, table)
    outcome = quotient.outcome_via_quotient(position, table)
    moves = engine.winning_moves(position, table)
    print(f"outcome: {outcome.value}")
    print(f"value: {monoid.render_element(value)}")
    if moves:
        print("winning moves: " + ", ".join(f"board {m.board} cell {m.cell}" for m in moves))
    else:
        print("winning moves: (none)")
    return EXIT_OK


def cmd_best(args) -> int:
    position = _parse_or_exit(args.position)
    table = load_or_build_table(args.dict)
    rec = engine.recommend(position, table)
    if rec.move is None:
        print("error: position is terminal, no move to make", file=sys.stderr)
        return EXIT_TERMINAL
    after = quotient.position_value(apply_move(position, rec.move), table)
    print(f"move: board {rec.move.board} cell {rec.move.cell}")
    print(f"resulting value: {monoid.render_element(after)}")
    print(f"rationale: {rec.rationale}")
    return EXIT_OK


def cmd_dict(args) -> int:
    table = load_or_build_table(args.dict)
    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_OK


def cmd_multable(args) -> int:
    text = monoid.multiplication_table_csv()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    solver = Solver()
    table = load_or_build_table(args.dict)
    report = quotient.verify_table(table, solver, args.max_boards)
    print(f"checked: {report.checked} multisets (max {args.max_boards} boards)")
    print(f"elapsed: {report.elapsed:.2f}s")
    print(f"mismatches: {len(report.mismatches)}")
    if report.mismatches:
        combo, expected, got = report.mismatches[0]
        boards = "/".join(str(code) for code in combo)
        print(f"first counterexample: masks {boards}: solver {expected.value}, table {got.value}")
        return EXIT_MISMATCH
    return EXIT_OK


def _render_position_grid(position: Position) -> str:
    grids = [pretty(mask).split("\n") for mask in position.boards]
    header = "   ".join(f"[{i}]{'DEAD' if is_dead(m) else '    '}" for i, m in enumerate(position.boards))
    rows = ["     ".join(grid[r] for grid in grids) for r in range(3)]
    return "\n".join([header, *rows])


def cmd_play(args, in_stream=None, out_stream=None) -> int:
    in_stream = in_stream or sys.stdin
    out_stream = out_stream or sys.stdout

    def say(text: str) -> None:
        print(text, file=out_stream)

    table = load_or_build_table(args.dict)
    position = Position.from_masks([0] * args.boards)
    human = 0 if args.human_first else 1
    player = 0
    say(f"Notakto: {args.boards} board(s). Cells are 0..8, row-major. You are "
        + ("first." if args.human_first else "second."))
    while not position.is_terminal():
        say("")
        say(_render_position_grid(position))
        if player == human:
            say("your move (board cell), or q to quit:")
            line = in_stream.readline()
            if not line or line.strip().lower() in ("q", "quit"):
                say("goodbye")
                return EXIT_OK
            parts = line.split()
            try:
                if len(parts) != 2:
                    raise IllegalMoveError("enter two numbers: board cell")
                move = Move(int(parts[0]), int(parts[1]))
                position = apply_move(position, move)
            except (ValueError, IllegalMoveError) as exc:
                say(f"illegal move: {exc}")
                continue
        else:
            rec = engine.recommend(position, table)
            assert rec.move is not None
            say(f"engine plays board {rec.move.board} cell {rec.move.cell}")
            position = apply_move(position, rec.move)
        if position.is_terminal():
            say("")
            say(_render_position_grid(position))
            if player == human:
                say("You completed the last line. You lose!")
            else:
                say("Engine completed the last line. Engine loses, you win!")
            return EXIT_OK
        player = 1 - player
    say("nothing to play: position is already terminal")
    return EXIT_OK


def cmd_serve(args) -> int:
    table = load_or_build_table(args.dict)
    static_root = args.static
    if static_root is None:
        default = Path(__file__).resolve().parents[2] / "frontend"
        if (default / "index.html").exists():
            static_root = default
    server = service.serve(table, host=args.host, port=args.port, static_root=static_root)
    print(f"serving on http://{args.host}:{server.port}/ (static: {static_root or 'placeholder'})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="notakto",
        description="Perfect-play analysis of multi-board misere X-only tic-tac-toe.",
    )
    parser.add_argument(
        "--dict",
        metavar="FILE",
        default=None,
        help="dictionary cache path (default: NOTAKTO_DICT env var, else re-infer)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="classify a position and list winning moves")
    p_solve.add_argument("position")
    p_solve.set_defaults(func=cmd_solve)

    p_best = sub.add_parser("best", help="recommend a move")
    p_best.add_argument("position")
    p_best.set_defaults(func=cmd_best)

    p_dict = sub.add_parser("dict", help="emit the 102-entry value dictionary")
    p_dict.add_argument("--format", choices=("json", "csv"), default="json")
    p_dict.add_argument("--out", metavar="FILE", default=None)
    p_dict.set_defaults(func=cmd_dict)

    p_mul = sub.add_parser("multable", help="emit the 18x18 monoid multiplication table as CSV")
    p_mul.add_argument("--out", metavar="FILE", default=None)
    p_mul.set_defaults(func=cmd_multable)

    p_verify = sub.add_parser("verify", help="check the dictionary against the exhaustive solver")
    p_verify.add_argument("--max-boards", type=int, choices=(1, 2, 3, 4), default=3)
    p_verify.set_defaults(func=cmd_verify)

    p_play = sub.add_parser("play", help="play against the engine in the terminal")
    p_play.add_argument("--boards", type=int, choices=range(1, 7), default=1)
    p_play.add_argument("--human-first", action="store_true")
    p_play.set_defaults(func=cmd_play)

    p_serve = sub.add_parser("serve", help="run the HTTP analysis service / web UI")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--static", metavar="DIR", default=None,
                         help="web UI asset directory (default: bundled frontend if built)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
