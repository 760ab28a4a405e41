"""Exhaustive feasibility search for a prescribed triple of first gaps.

Question decided here: given 2 <= b1 < b2 < b3, does any infinite strictly
increasing sequence of positive integers have subset sums whose complement
in the nonnegative integers starts exactly (b1, b2, b3)?

The search works on finite prefixes.  A state is (sums-so-far capped at b3,
last element).  From a state, let f be the smallest value in [0, b3] outside
{b1, b2, b3} not yet covered.  If no such f exists the prefix is a witness:
its sums cover [0, b3] except exactly the triple.  Otherwise the next
element must be some v in (last, f]: sums are monotone in the elements, so
an element larger than f could never help cover f, and anything not
covering f eventually is dead.  Candidates v that would land a forbidden
value (b - v already covered for some b in the triple) are pruned, which
also keeps the triple out of the covered set at every state.  Exhausting
the tree therefore proves infeasibility; "resource exceeded" is a distinct,
inconclusive outcome and is never reported as infeasible.

Why a finite witness settles the infinite question: extend a witness with a
square-growth continuation (each new element at least the square of, and in
particular more than one past, the total of everything before it).  Every
new element then leaves the value one below it uncovered, so the complement
stays infinite, while all new sums and new gaps land strictly above b3 --
the first three gaps remain (b1, b2, b3).  Conversely any infinite sequence
whose complement starts (b1, b2, b3) yields, element by element, a
root-to-witness path of this very tree: each of its prefixes covers every
required value below its next element, and no prefix ever covers a
forbidden value, so no pruning rule cuts it off.  Both directions are
exercised empirically by the cross-checks against the constructor.

Branch order is ascending, so a feasible search returns the
lexicographically smallest witness, identical across runs.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import MutableMapping

from .sumset import ElementSeq, UsageError, gaps, sumset_of

#: Desk-scale guardrails; override per call.
DEFAULT_MAX_NODES = 10_000_000
DEFAULT_MAX_SECONDS = 60.0

#: Cache entry shape shared with the CLI layer: (outcome kind, node count).
CacheEntry = tuple["OutcomeKind", int]


class OutcomeKind(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    RESOURCE_EXCEEDED = "resource_exceeded"


class CriticalStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExclusionTriple:
    """The three smallest intended gaps, 2 <= b1 < b2 < b3."""

    b1: int
    b2: int
    b3: int

    def __post_init__(self) -> None:
        if not 2 <= self.b1 < self.b2 < self.b3:
            raise UsageError(f"need 2 <= b1 < b2 < b3, got ({self.b1}, {self.b2}, {self.b3})")


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_seconds <= 0:
            raise UsageError("resource limits must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    kind: OutcomeKind
    witness: ElementSeq | None
    certificate: tuple[int, ...] | None
    nodes_explored: int
    max_depth: int


@dataclass(frozen=True)
class CriticalOutcome:
    """Result of scanning b3 upward for the first feasible value."""

    status: CriticalStatus
    b3: int | None
    undecided_b3: int | None
    nodes: int
    witness: ElementSeq | None
    #: (b3, kind, nodes) for every candidate examined, in scan order.
    outcomes: tuple[tuple[int, OutcomeKind, int], ...] = field(default=())


def feasibility_search(triple: ExclusionTriple, limits: SearchLimits | None = None,
                       *, memoize: bool = False) -> SearchOutcome:
    """Decide the triple by exhaustive depth-first search over prefixes.

    Returns FEASIBLE with the lexicographically smallest witness and its
    recomputed gap certificate, INFEASIBLE only after full exhaustion, or
    RESOURCE_EXCEEDED once node or time limits are hit (inconclusive).

    ``memoize`` caches exhausted (sums, last) states so repeated subtrees are
    pruned; it changes node counts but never the outcome.
    """
    limits = limits or SearchLimits()
    b1, b2, b3 = triple.b1, triple.b2, triple.b3
    full = (1 << (b3 + 1)) - 1
    excl = (1 << b1) | (1 << b2) | (1 << b3)
    want = full & ~excl

    def next_required(bits: int) -> int:
        """Smallest uncovered value in [0, b3] outside the triple, or -1 if none."""
        t = want & ~bits
        if not t:
            return -1
        return (t & -t).bit_length() - 1

    started = time.monotonic()
    nodes = 1
    max_depth = 0
    failed: set[tuple[int, int]] | None = set() if memoize else None
    prefix: list[int] = []

    def exceeded() -> SearchOutcome:
        return SearchOutcome(OutcomeKind.RESOURCE_EXCEEDED, None, None, nodes, max_depth)

    # Frames are [bits, last, f, next candidate v]; the root is sums {0}.
    root_f = next_required(1)
    if root_f < 0:  # unreachable for a valid triple, kept for safety
        return _feasible_outcome(triple, prefix, nodes, max_depth)
    stack: list[list[int]] = [[1, 0, root_f, 1]]

    while stack:
        frame = stack[-1]
        bits, last, f, v = frame
        if v > f:
            if failed is not None:
                failed.add((bits, last))
            stack.pop()
            if prefix:
                prefix.pop()
            continue
        frame[3] = v + 1
        # Adding v must not cover any of the intended gaps.
        if (
            (b1 >= v and (bits >> (b1 - v)) & 1)
            or (b2 >= v and (bits >> (b2 - v)) & 1)
            or (bits >> (b3 - v)) & 1
        ):
            continue
        child = (bits | (bits << v)) & full
        if failed is not None and (child, v) in failed:
            continue
        nodes += 1
        if nodes > limits.max_nodes:
            return exceeded()
        if not nodes & 1023 and time.monotonic() - started > limits.max_seconds:
            return exceeded()
        prefix.append(v)
        depth = len(prefix)
        assert depth <= b3, "element depth exceeded b3"
        if depth > max_depth:
            max_depth = depth
        child_f = next_required(child)
        if child_f < 0:
            return _feasible_outcome(triple, prefix, nodes, max_depth)
        stack.append([child, v, child_f, v + 1])

    return SearchOutcome(OutcomeKind.INFEASIBLE, None, None, nodes, max_depth)


def _feasible_outcome(triple: ExclusionTriple, prefix: list[int],
                      nodes: int, max_depth: int) -> SearchOutcome:
    """Package a success state, re-deriving the certificate from the sumset engine."""
    witness = ElementSeq(tuple(prefix))
    certificate = tuple(gaps(sumset_of(witness, triple.b3), triple.b3))
    if certificate != (triple.b1, triple.b2, triple.b3):
        raise RuntimeError(
            f"internal error: witness {witness.elements} certifies {certificate}, "
            f"expected {(triple.b1, triple.b2, triple.b3)}"
        )
    return SearchOutcome(OutcomeKind.FEASIBLE, witness, certificate, nodes, max_depth)


def critical_b3(b1: int, b2: int, b3_max: int, limits: SearchLimits | None = None,
                *, memoize: bool = False,
                cache: MutableMapping[tuple[int, int, int], CacheEntry] | None = None,
                ) -> CriticalOutcome:
    """Smallest feasible b3 in (b2, b3_max], with every smaller candidate proven infeasible.

    Scans upward; a RESOURCE_EXCEEDED search aborts the scan and reports the
    first undecided candidate instead of guessing.  ``cache`` (any mapping
    from (b1, b2, b3) to (kind, nodes)) is consulted before searching and
    extended with decided results; cached hits contribute their recorded
    node counts so replayed scans report identical totals.
    """
    if b1 < 2 or b2 <= b1 or b3_max <= b2:
        raise UsageError(f"need 2 <= b1 < b2 < b3_max, got ({b1}, {b2}, {b3_max})")
    total = 0
    examined: list[tuple[int, OutcomeKind, int]] = []
    for b3 in range(b2 + 1, b3_max + 1):
        key = (b1, b2, b3)
        cached = cache.get(key) if cache is not None else None
        if cached is not None and cached[0] is not OutcomeKind.RESOURCE_EXCEEDED:
            kind, cell_nodes = cached
            witness = None
        else:
            out = feasibility_search(ExclusionTriple(b1, b2, b3), limits, memoize=memoize)
            kind, cell_nodes, witness = out.kind, out.nodes_explored, out.witness
            if cache is not None:
                cache[key] = (kind, cell_nodes)
        total += cell_nodes
        examined.append((b3, kind, cell_nodes))
        if kind is OutcomeKind.RESOURCE_EXCEEDED:
            return CriticalOutcome(CriticalStatus.INCONCLUSIVE, None, b3, total, None,
                                   tuple(examined))
        if kind is OutcomeKind.FEASIBLE:
            return CriticalOutcome(CriticalStatus.FOUND, b3, None, total, witness,
                                   tuple(examined))
    return CriticalOutcome(CriticalStatus.NOT_FOUND, None, None, total, None, tuple(examined))
