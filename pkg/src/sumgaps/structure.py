"""Structural checks on a sequence prefix against its intended first gaps.

Two verifiers, both reporting per-clause verdicts so a failure pinpoints the
inequality that broke rather than a bare boolean:

* the completeness chain: the elements below the first intended gap ``b1``
  must tile an unbroken interval ``[0, b1 - 1]``, which happens exactly when
  each element is at most one more than the reach so far;
* the head structure: given the second intended gap ``b2``, the three
  elements straight after that base are pinned down tightly (the first is
  forced, the next two are bounded), and the prefix's sums must cover a
  known window with exactly two holes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sumset import ElementSeq, SumSet, UsageError, add_element, gaps, sumset_of

# Clause labels used in reports (and in the CLI's JSON output).
CHAIN_STARTS_AT_ONE = "starts_at_one"
CHAIN_SECOND_REACH = "second_reach"
CHAIN_GROWTH = "growth"
CHAIN_REACH = "reach"
CHAIN_INTERVAL = "interval"

HEAD_BASE_WINDOW = "base_window"
HEAD_FIRST_FORCED = "first_forced"
HEAD_SECOND_BOUND = "second_bound"
HEAD_THIRD_BOUND = "third_bound"
HEAD_B2_BOUND = "b2_bound"
HEAD_WINDOW_PATTERN = "window_pattern"


@dataclass(frozen=True)
class ChainReport:
    """Outcome of the completeness-chain check.

    ``k`` is the number of elements below b1, ``chain`` the running reach
    c_i (the prefix sums), ``violations`` the (1-based index, clause) pairs
    that failed.
    """

    k: int
    chain: tuple[int, ...]
    passed: bool
    violations: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class HeadReport:
    """Outcome of the head-structure check.

    ``head`` holds the three elements following the base segment; ``clauses``
    maps each clause label to its verdict.
    """

    k: int
    head: tuple[int, int, int]
    clauses: dict[str, bool]
    passed: bool


def verify_chain(seq: ElementSeq, b1: int) -> ChainReport:
    """Check that the elements below ``b1`` cover ``[0, b1 - 1]`` exactly.

    The reach chain is c_i = a_1 + ... + a_i.  Clauses: c_1 = 1, c_2 = 3
    (skipped when only one element lies below b1), a_{i+1} <= c_i + 1 for
    every step, and c_k = b1 - 1.  Each prefix is additionally cross-checked
    against the bit-vector engine: its sums must be exactly [0, c_i].
    """
    if b1 < 2:
        raise UsageError(f"b1 must be at least 2, got {b1}")
    if not len(seq):
        raise UsageError("sequence must be nonempty")
    if b1 in seq:
        raise UsageError(f"b1 = {b1} occurs in the sequence")
    k = sum(1 for a in seq if a < b1)
    if k == 0:
        raise UsageError(f"no element lies below b1 = {b1}")

    prefix = seq.elements[:k]
    chain = []
    reach = 0
    for a in prefix:
        reach += a
        chain.append(reach)

    violations: list[tuple[int, str]] = []
    if chain[0] != 1:
        violations.append((1, CHAIN_STARTS_AT_ONE))
    if k >= 2 and chain[1] != 3:
        violations.append((2, CHAIN_SECOND_REACH))
    for i in range(1, k):
        if prefix[i] > chain[i - 1] + 1:
            violations.append((i, CHAIN_GROWTH))
    if chain[-1] != b1 - 1:
        violations.append((k, CHAIN_REACH))

    # Independent cross-check: the engine's sums of each prefix must fill
    # [0, c_i] with no holes and nothing above.
    s = SumSet.empty(chain[-1])
    for i, a in enumerate(prefix):
        s = add_element(s, a)
        if s.bits != (1 << (chain[i] + 1)) - 1:
            violations.append((i + 1, CHAIN_INTERVAL))

    violations.sort()
    return ChainReport(
        k=k,
        chain=tuple(chain),
        passed=not violations,
        violations=tuple(violations),
    )


def verify_head(seq: ElementSeq, b1: int, b2: int) -> HeadReport:
    """Check the three elements after the base segment against ``(b1, b2)``.

    Requires b2 >= 3*b1 + 5 and at least k + 3 elements.  Clauses: the base
    covers [0, b1 - 1]; the next element equals b1 + 1; the one after is at
    most 2*b1 + 1; the third is at most its predecessor plus b1; b2 is at
    least the sum of those two plus b1; and the prefix through the third
    head element sums to exactly [0, W] minus {b1, W - b1} where W is that
    same sum plus 2*b1.
    """
    if b2 < 3 * b1 + 5:
        raise UsageError(f"b2 must be at least 3*b1 + 5 = {3 * b1 + 5}, got {b2}")
    chain_report = verify_chain(seq, b1)
    k = chain_report.k
    if len(seq) < k + 3:
        raise UsageError(f"need at least {k + 3} elements, got {len(seq)}")

    a1, a2, a3 = seq.elements[k], seq.elements[k + 1], seq.elements[k + 2]
    second_gap = a3 + a2 + b1
    window = second_gap + b1

    clauses = {
        HEAD_BASE_WINDOW: chain_report.passed,
        HEAD_FIRST_FORCED: a1 == b1 + 1,
        HEAD_SECOND_BOUND: a2 <= 2 * b1 + 1,
        HEAD_THIRD_BOUND: a3 <= a2 + b1,
        HEAD_B2_BOUND: b2 >= second_gap,
    }
    prefix = ElementSeq(seq.elements[: k + 3])
    s = sumset_of(prefix, window)
    clauses[HEAD_WINDOW_PATTERN] = gaps(s, window) == [b1, second_gap]

    return HeadReport(
        k=k,
        head=(a1, a2, a3),
        clauses=clauses,
        passed=all(clauses.values()),
    )


def first_gaps(s: SumSet, limit: int, count: int) -> list[int]:
    """The first ``count`` gaps of ``s`` in ``[0, limit]`` (fewer if fewer exist)."""
    if count < 1:
        raise UsageError(f"count must be positive, got {count}")
    if limit > s.cap:
        raise UsageError(f"limit {limit} exceeds cap {s.cap}")
    comp = ~s.bits & ((1 << (limit + 1)) - 1)
    out: list[int] = []
    while comp and len(out) < count:
        low = comp & -comp
        out.append(low.bit_length() - 1)
        comp ^= low
    return out
