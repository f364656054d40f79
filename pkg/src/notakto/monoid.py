"""The 18-element misere quotient of multi-board X-only tic-tac-toe.

The quotient is the commutative monoid

    Q = < a, b, c, d | a^2 = 1, b^3 = b, b^2 c = c, c^3 = a c^2,
                       b^2 d = d, c d = a d, d^2 = c^2 >

Every position maps to an element of Q (see `notakto.quotient`); a sum of
boards is a previous-player win exactly when the product of its board
values lands in the distinguished subset P = {a, b^2, b c, c^2}.

Because Q is commutative, a word in the generators is just an exponent
vector, and word reduction becomes integer arithmetic on the four
exponents.  `reduce` applies the relations, each oriented left to right,
until no rule fires; the resulting normal forms are exactly the 18
elements of Q.  Confluence of this rule set is not assumed: the test
suite checks it exhaustively at the 18-element scale.
"""

from __future__ import annotations

import functools
import re
from typing import NamedTuple


class Element(NamedTuple):
    """A monoid element in normal form, as exponents of a, b, c, d."""

    a: int
    b: int
    c: int
    d: int


IDENTITY = Element(0, 0, 0, 0)

GENERATORS = {
    "a": Element(1, 0, 0, 0),
    "b": Element(0, 1, 0, 0),
    "c": Element(0, 0, 1, 0),
    "d": Element(0, 0, 0, 1),
}


def reduce(a: int, b: int, c: int, d: int) -> Element:
    """Reduce an arbitrary exponent vector to its normal form.

    Rules, applied to fixpoint:
      a^2 = 1      -> a mod 2
      b^3 = b      -> b -= 2 while b >= 3
      b^2 c = c    -> b -= 2 when b >= 2 and a c or d is present
      b^2 d = d
      d^2 = c^2    -> d -= 2, c += 2
      c d = a d    -> c -= 1, a += 1 while both present
      c^3 = a c^2  -> c -= 1, a += 1 while c >= 3
    """
    if min(a, b, c, d) < 0:
        raise ValueError("exponents must be non-negative")
    while True:
        before = (a, b, c, d)
        a %= 2
        if b >= 3:
            b = 2 if b % 2 == 0 else 1
        if b >= 2 and (c or d):
            b -= 2
        if d >= 2:
            c += 2 * (d // 2)
            d %= 2
        if c and d:
            a += c
            c = 0
        if c >= 3:
            a += c - 2
            c = 2
        if (a, b, c, d) == before:
            return Element(a, b, c, d)


def multiply(x: Element, y: Element) -> Element:
    """Product in Q: componentwise exponent sum, then reduction."""
    return reduce(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d)


def product(values) -> Element:
    """Product of an iterable of elements; empty product is the identity."""
    out = IDENTITY
    for value in values:
        out = multiply(out, value)
    return out


@functools.lru_cache(maxsize=1)
def elements() -> tuple[Element, ...]:
    """The 18 elements of Q: closure of the generators under multiply.

    Deterministic order, sorted by exponent tuple.
    """
    seen = {IDENTITY, *GENERATORS.values()}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for g in GENERATORS.values():
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return tuple(sorted(seen))


#: Values marking previous-player wins.
P_SET = frozenset(
    {
        Element(1, 0, 0, 0),  # a
        Element(0, 2, 0, 0),  # b^2
        Element(0, 1, 1, 0),  # bc
        Element(0, 0, 2, 0),  # c^2
    }
)


def is_p(x: Element) -> bool:
    """True iff x marks a previous-player win."""
    return x in P_SET


_TERM = re.compile(r"([abcd])(?:\^(\d+))?")


def parse_element(text: str) -> Element:
    """Parse an element string such as "1", "c^2", "ab^2", "abd"."""
    if text == "1":
        return IDENTITY
    if not text:
        raise ValueError("empty element string")
    exponents = {"a": 0, "b": 0, "c": 0, "d": 0}
    pos = 0
    for match in _TERM.finditer(text):
        if match.start() != pos:
            raise ValueError(f"bad element syntax at {text[pos:]!r} in {text!r}")
        name, exp = match.group(1), match.group(2)
        exponents[name] += 1 if exp is None else int(exp)
        pos = match.end()
    if pos != len(text):
        raise ValueError(f"bad element syntax at {text[pos:]!r} in {text!r}")
    return reduce(exponents["a"], exponents["b"], exponents["c"], exponents["d"])


def render_element(x: Element) -> str:
    """Render in generator order a, b, c, d; exponent 1 is implicit."""
    parts = []
    for name, exp in zip("abcd", x):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "".join(parts) or "1"


def multiplication_table_csv() -> str:
    """The full 18x18 multiplication table with row/column headers."""
    els = elements()
    names = [render_element(e) for e in els]
    rows = ["," + ",".join(names)]
    for x, name in zip(els, names):
        rows.append(name + "," + ",".join(render_element(multiply(x, y)) for y in els))
    return "\n".join(rows) + "\n"
