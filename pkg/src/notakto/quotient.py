"""Board-value dictionary: canonical board class -> monoid element.

The dictionary assigns each of the 102 canonical board classes an element
of the quotient monoid so that a sum of boards is a previous-player win
exactly when the product of its board values lies in the P-set.  Dead
boards carry the identity (they are out of play, hence indistinguishable
from the empty sum).

The assignment is not hard-coded: `infer_value_table` re-derives it from
the exhaustive solver by constraint propagation.  Two values are pinned
up front, the identity on dead classes and `c` on the empty board (the
anchor that fixes the labeling among symmetric relabelings); every other
class starts with all 18 candidates, and each small multiset of classes
contributes the constraint

    product of values in P  <=>  the solver calls the multiset P.

Arc-consistency over these constraints pins the table, a backtracking
sweep resolves any residue, and the result is verified exhaustively
against the solver on all multisets up to the configured size.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import monoid
from .board import canonicalize, enumerate_canonical, is_dead, render_board
from .oracle import Outcome, Position, Solver


class NoConsistentAssignment(Exception):
    """No labeling satisfies the solver constraints: an implementation bug."""


class AmbiguousAssignment(Exception):
    """Multiple labelings survived full verification."""

    def __init__(self, survivors):
        self.survivors = list(survivors)
        super().__init__(f"{len(self.survivors)} labelings survived verification")


@dataclass(frozen=True)
class InferenceConfig:
    """Knobs for dictionary inference.

    shuffle_seed perturbs the order constraints are processed in; the
    inferred table must not depend on it.

    ambiguity_policy controls what happens when several labelings survive
    full verification.  The quotient admits relabelings that no sum of
    boards can distinguish (the d-family values d, ad, bd, abd shift
    together under an automorphism that fixes the anchors), so the
    default "minimal" picks the lexicographically least labeling, which
    assigns the bare generator d.  "raise" reports all survivors via
    AmbiguousAssignment instead.
    """

    max_context_size: int = 3
    max_unknowns_per_constraint: int = 2
    verify_size: int = 3
    shuffle_seed: int | None = None
    ambiguity_policy: str = "minimal"

    def __post_init__(self) -> None:
        for name in ("max_context_size", "max_unknowns_per_constraint", "verify_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.ambiguity_policy not in ("minimal", "raise"):
            raise ValueError("ambiguity_policy must be 'minimal' or 'raise'")


@dataclass(frozen=True)
class ValueTable:
    """Total map from canonical board code to monoid element."""

    entries: dict[int, monoid.Element]

    def __post_init__(self) -> None:
        codes = enumerate_canonical()
        if set(self.entries) != set(codes):
            raise ValueError("table must cover exactly the canonical codes")

    def __getitem__(self, code: int) -> monoid.Element:
        return self.entries[code]

    def value_for_board(self, mask: int) -> monoid.Element:
        return self.entries[canonicalize(mask)]

    def checksum(self) -> str:
        blob = ";".join(
            f"{code}={monoid.render_element(self.entries[code])}"
            for code in sorted(self.entries)
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def records(self) -> list[dict]:
        return [
            {
                "code": code,
                "board": render_board(code),
                "value": monoid.render_element(self.entries[code]),
                "dead": is_dead(code),
            }
            for code in sorted(self.entries)
        ]

    def to_json(self) -> str:
        doc = {
            "format": "notakto-dictionary-v1",
            "sha256": self.checksum(),
            "entries": self.records(),
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        rows = ["code,board,value,dead"]
        for rec in self.records():
            rows.append(
                f"{rec['code']},{rec['board']},{rec['value']},{str(rec['dead']).lower()}"
            )
        return "\n".join(rows) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ValueTable":
        doc = json.loads(text)
        if doc.get("format") != "notakto-dictionary-v1":
            raise ValueError("unrecognized dictionary format")
        entries = {}
        for rec in doc["entries"]:
            code = rec["code"]
            value = monoid.parse_element(rec["value"])
            if rec.get("board") != render_board(code):
                raise ValueError(f"board text mismatch for code {code}")
            if rec.get("dead") != is_dead(code):
                raise ValueError(f"dead flag mismatch for code {code}")
            entries[code] = value
        table = cls(entries)
        if table.checksum() != doc.get("sha256"):
            raise ValueError("dictionary checksum mismatch")
        return table

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "ValueTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def position_value(position: Position, table: ValueTable) -> monoid.Element:
    """Product of the live boards' values; the empty product is 1."""
    return monoid.product(
        table.entries[canonicalize(m)] for m in position.boards if not is_dead(m)
    )


def outcome_via_quotient(position: Position, table: ValueTable) -> Outcome:
    """O(1)-per-board outcome: P iff the position's value lies in the P-set."""
    return Outcome.P if monoid.is_p(position_value(position, table)) else Outcome.N


@dataclass
class VerificationReport:
    size_limit: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0
    checked_by_size: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_table(
    table: ValueTable,
    solver: Solver,
    size_limit: int,
    fail_fast: bool = False,
) -> VerificationReport:
    """Compare quotient outcomes with the solver on every multiset of
    canonical classes up to size_limit boards."""
    codes = enumerate_canonical()
    values = {code: table.entries[code] for code in codes}
    report = VerificationReport(size_limit=size_limit)
    start = time.perf_counter()
    for size in range(1, size_limit + 1):
        for combo in itertools.combinations_with_replacement(codes, size):
            key = tuple(c for c in combo if not is_dead(c))
            expected = solver.outcome_of_key(key)
            got = (
                Outcome.P
                if monoid.is_p(monoid.product(values[c] for c in combo))
                else Outcome.N
            )
            report.checked += 1
            if got is not expected:
                report.mismatches.append((combo, expected, got))
                if fail_fast:
                    report.elapsed = time.perf_counter() - start
                    return report
        report.checked_by_size[size] = report.checked
    report.elapsed = time.perf_counter() - start
    return report


class _ConstraintState:
    """Working state for inference: pinned values and candidate sets,
    all on element indices for speed."""

    def __init__(self, solver: Solver, config: InferenceConfig):
        self.config = config
        self.codes = enumerate_canonical()
        self.elements = monoid.elements()
        self.index_of = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = [
            [self.index_of[monoid.multiply(x, y)] for y in self.elements]
            for x in self.elements
        ]
        self.in_p = [monoid.is_p(e) for e in self.elements]
        identity = self.index_of[monoid.IDENTITY]
        anchor = self.index_of[monoid.GENERATORS["c"]]

        self.pinned: dict[int, int] = {
            code: identity for code in self.codes if is_dead(code)
        }
        self.pinned[0] = anchor
        self.candidates: dict[int, set[int]] = {
            code: set(range(n)) for code in self.codes if code not in self.pinned
        }

        # Constraint contexts: multisets of classes, smallest first; the
        # target for each is whether the solver calls it a P-position.
        self.contexts: list[tuple[int, ...]] = []
        for size in range(1, config.max_context_size + 1):
            self.contexts.extend(itertools.combinations_with_replacement(self.codes, size))
        if config.shuffle_seed is not None:
            random.Random(config.shuffle_seed).shuffle(self.contexts)
        self.targets = [
            solver.outcome_of_key(tuple(c for c in ctx if not is_dead(c))) is Outcome.P
            for ctx in self.contexts
        ]

    def _fold_pinned(self, ctx: tuple[int, ...]) -> tuple[int, dict[int, int]]:
        base = self.index_of[monoid.IDENTITY]
        unknowns: dict[int, int] = {}
        for code in ctx:
            pin = self.pinned.get(code)
            if pin is None:
                unknowns[code] = unknowns.get(code, 0) + 1
            else:
                base = self.mul[base][pin]
        return base, unknowns

    def _pow(self, value: int, count: int) -> int:
        out = self.index_of[monoid.IDENTITY]
        for _ in range(count):
            out = self.mul[out][value]
        return out

    def _satisfiable(self, base: int, others: list[tuple[int, int]], target: bool) -> bool:
        # Is there a choice from the remaining candidate sets matching target?
        if not others:
            return self.in_p[base] == target
        (code, count), rest = others[0], others[1:]
        for v in self.candidates[code]:
            if self._satisfiable(self.mul[base][self._pow(v, count)], rest, target):
                return True
        return False

    def propagate(self) -> None:
        """Arc-consistency over all eligible contexts until fixpoint."""
        max_unknowns = self.config.max_unknowns_per_constraint
        while True:
            changed = False
            for ctx, target in zip(self.contexts, self.targets):
                base, unknowns = self._fold_pinned(ctx)
                occurrences = sum(unknowns.values())
                if occurrences == 0:
                    if self.in_p[base] != target:
                        raise NoConsistentAssignment(
                            f"pinned values contradict the solver on classes {ctx}"
                        )
                    continue
                if occurrences > max_unknowns:
                    continue
                for code, count in unknowns.items():
                    others = [(o, n) for o, n in unknowns.items() if o != code]
                    survivors = {
                        v
                        for v in self.candidates[code]
                        if self._satisfiable(
                            self.mul[base][self._pow(v, count)], others, target
                        )
                    }
                    if survivors != self.candidates[code]:
                        if not survivors:
                            raise NoConsistentAssignment(
                                f"class {code} has no feasible value (context {ctx})"
                            )
                        self.candidates[code] = survivors
                        changed = True
            for code in [c for c, s in self.candidates.items() if len(s) == 1]:
                self.pinned[code] = next(iter(self.candidates.pop(code)))
                changed = True
            if not changed:
                return

    def search_completions(self, limit: int = 32) -> list[dict[int, int]]:
        """Enumerate assignments of the remaining unpinned classes that
        satisfy every context constraint (at most `limit` of them).

        Constraints are checked as soon as all their unknowns are
        assigned, so inconsistent branches are cut early.
        """
        variables = sorted(self.candidates)
        depth_of = {code: i for i, code in enumerate(variables)}
        # Bucket each context by the deepest search variable it mentions.
        buckets: list[list[tuple[tuple[int, ...], bool]]] = [[] for _ in variables]
        for ctx, target in zip(self.contexts, self.targets):
            depths = [depth_of[c] for c in ctx if c in depth_of]
            if depths:
                buckets[max(depths)].append((ctx, target))

        solutions: list[dict[int, int]] = []
        assignment: dict[int, int] = {}
        identity = self.index_of[monoid.IDENTITY]

        def satisfied(depth: int) -> bool:
            for ctx, target in buckets[depth]:
                base = identity
                for code in ctx:
                    pin = self.pinned.get(code)
                    if pin is None:
                        pin = assignment[code]
                    base = self.mul[base][pin]
                if self.in_p[base] != target:
                    return False
            return True

        def recurse(i: int) -> None:
            if len(solutions) >= limit:
                return
            if i == len(variables):
                solutions.append({**self.pinned, **assignment})
                return
            code = variables[i]
            for v in sorted(self.candidates[code]):
                assignment[code] = v
                if satisfied(i):
                    recurse(i + 1)
            del assignment[code]

        if variables:
            recurse(0)
        return solutions

    def as_table(self, pinned: dict[int, int] | None = None) -> ValueTable:
        assignment = self.pinned if pinned is None else pinned
        return ValueTable({code: self.elements[assignment[code]] for code in self.codes})


def infer_value_table(
    solver: Solver, config: InferenceConfig = InferenceConfig()
) -> ValueTable:
    """Derive the full 102-entry dictionary from the solver.

    Raises NoConsistentAssignment if no labeling fits the solver (an
    implementation bug somewhere in the pipeline).  When several
    labelings survive exhaustive verification, the ambiguity_policy
    either resolves to the least labeling (default) or raises
    AmbiguousAssignment carrying all survivors.
    """
    state = _ConstraintState(solver, config)
    state.propagate()

    if state.candidates:
        completions = state.search_completions()
        survivors = []
        for assignment in completions:
            table = state.as_table(assignment)
            if verify_table(table, solver, config.verify_size, fail_fast=True).ok:
                survivors.append(table)
        if not survivors:
            raise NoConsistentAssignment(
                "no completion of the propagated candidates verified cleanly"
            )
        if len(survivors) > 1:
            if config.ambiguity_policy == "raise":
                raise AmbiguousAssignment(survivors)
            survivors.sort(
                key=lambda t: tuple(t.entries[code] for code in sorted(t.entries))
            )
        return survivors[0]

    table = state.as_table()
    report = verify_table(table, solver, config.verify_size, fail_fast=True)
    if not report.ok:
        combo, expected, got = report.mismatches[0]
        raise NoConsistentAssignment(
            f"inferred table disagrees with the solver on {combo}: "
            f"solver {expected.value}, table {got.value}"
        )
    return table
