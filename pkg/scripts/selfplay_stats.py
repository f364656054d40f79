#!/usr/bin/env python3
"""Self-play and engine-vs-random experiments.

For k = 1..6 empty boards: reports the self-play winner (which must track
the parity of c^k) and the engine's record against a random mover.
"""

import argparse
import random
import sys
import time

from notakto import InferenceConfig, Position, Solver, infer_value_table
from notakto import engine, monoid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--games", type=int, default=200, help="random games per start")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    table = infer_value_table(Solver(), InferenceConfig())
    perfect = engine.engine_player(table)
    rng = random.Random(args.seed)

    for k in range(1, 7):
        start = Position.from_masks([0] * k)
        value = monoid.product([monoid.GENERATORS["c"]] * k)
        t = engine.play_out(start, [perfect, perfect])
        predicted = "second" if monoid.is_p(value) else "first"
        actual = "second" if t.loser == 0 else "first"
        # Engine takes whichever side the quotient predicts to win.
        engine_seat = 1 if monoid.is_p(value) else 0
        players = [None, None]
        players[engine_seat] = perfect
        players[1 - engine_seat] = engine.random_player(rng)
        t0 = time.perf_counter()
        losses = sum(
            engine.play_out(start, players).loser == engine_seat
            for _ in range(args.games)
        )
        elapsed = time.perf_counter() - t0
        print(
            f"k={k}: value c^{k}={monoid.render_element(value)} predicts {predicted} "
            f"player wins; self-play winner: {actual}; engine vs random "
            f"({'second' if engine_seat else 'first'} seat): "
            f"{args.games - losses}/{args.games} wins ({elapsed:.1f}s)"
        )
        if predicted != actual or losses:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
