"""Build sequences whose subset sums miss exactly a prescribed gap triple.

Given a first gap ``b1`` and a second gap ``b2`` with 3*b1 + 5 <= b2 <=
6*b1 + 10, assemble a sequence in three parts:

* a base segment inside [1, b1 - 1] whose sums are exactly [0, b1 - 1];
* a short head (three or four elements) chosen per one of four parameter
  ranges of m = b2 - 3*b1 - 5, so that the sums of base + head fill
  [0, 4*b1 + 5 + m] except b1 and b2;
* a tail where each element is the square of the previous one, which pushes
  every later gap above any fixed horizon.

The result's gaps then begin exactly (b1, b2, b1 + b2 + 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .sumset import ElementSeq, UsageError, gaps, sumset_of

TAIL_RULE = "square of previous element"

#: First-gap values the four-case head recipe covers.
_SMALL_SUPPORTED_B1 = frozenset({4, 7, 8})


class InfeasibleBaseError(ValueError):
    """No subset of [1, b1 - 1] has subset sums exactly [0, b1 - 1]."""

    def __init__(self, b1: int):
        super().__init__(f"no base segment exists for b1 = {b1}")
        self.b1 = b1


class UnsupportedB1Error(UsageError):
    """b1 outside {4, 7, 8} and below 11: the head recipe is not defined there."""


class OutOfRangeError(UsageError):
    """b2 outside [3*b1 + 5, 6*b1 + 10]."""


class PlanCase(enum.Enum):
    RANGE_LOW = "RangeLow"
    RANGE_MID_J = "RangeMidJ"
    RANGE_HIGH_GENERIC = "RangeHighGeneric"
    RANGE_HIGH_SPECIAL = "RangeHighSpecial"


@dataclass(frozen=True)
class ConstructionPlan:
    """Parameters and head elements for one (b1, b2) construction."""

    b1: int
    b2: int
    m: int
    case_id: PlanCase
    j: int | None
    l: int | None
    head: tuple[int, ...]
    tail_rule: str = TAIL_RULE

    def __post_init__(self) -> None:
        if self.m != self.b2 - 3 * self.b1 - 5 or not 0 <= self.m <= 3 * self.b1 + 5:
            raise UsageError(f"m = {self.m} out of range for (b1, b2) = ({self.b1}, {self.b2})")
        if self.head[0] != self.b1 + 1 or list(self.head) != sorted(set(self.head)):
            raise UsageError(f"head must be strictly increasing and start at b1 + 1, got {self.head}")
        if self.j is not None and self.l is not None:
            if self.j > min(self.m // 2, self.b1 - 1):
                raise UsageError(f"j = {self.j} exceeds min(m // 2, b1 - 1)")
            if self.l > min(self.m - 2 * self.j, self.b1 - 1):
                raise UsageError(f"l = {self.l} exceeds min(m - 2*j, b1 - 1)")


@dataclass(frozen=True)
class GapReport:
    """Gaps of a sequence's sumset inside [0, horizon].

    ``exact`` means the caller certifies every omitted element of the
    intended (infinite) sequence exceeds the horizon, so the list equals the
    full gap set in the window, not just the prefix's.
    """

    horizon: int
    exclusions: tuple[int, ...]
    exact: bool = False


def base_segment(b1: int) -> ElementSeq:
    """Lexicographically smallest subset of [1, b1 - 1] with sums exactly [0, b1 - 1].

    Depth-first search over strictly increasing candidates, pruned by the
    interval condition (next element at most reach + 1) and the exact-total
    requirement.  Raises InfeasibleBaseError when no such subset exists
    (e.g. b1 in {3, 5, 6, 9, 10}).
    """
    if b1 < 2:
        raise UsageError(f"b1 must be at least 2, got {b1}")
    target = b1 - 1

    def extend(prefix: list[int], reach: int) -> list[int] | None:
        if reach == target:
            return prefix
        lo = prefix[-1] + 1 if prefix else 1
        hi = min(reach + 1, target - reach)
        for a in range(lo, hi + 1):
            found = extend(prefix + [a], reach + a)
            if found is not None:
                return found
        return None

    found = extend([], 0)
    if found is None:
        raise InfeasibleBaseError(b1)
    return ElementSeq(tuple(found))


def plan_construction(b1: int, b2: int) -> ConstructionPlan:
    """Pick the head recipe for (b1, b2): one of four cases keyed by m = b2 - 3*b1 - 5."""
    if b1 not in _SMALL_SUPPORTED_B1 and b1 < 11:
        raise UnsupportedB1Error(f"b1 = {b1} not supported; need b1 in {{4, 7, 8}} or b1 >= 11")
    if not 3 * b1 + 5 <= b2 <= 6 * b1 + 10:
        raise OutOfRangeError(f"b2 = {b2} outside [{3 * b1 + 5}, {6 * b1 + 10}] for b1 = {b1}")
    m = b2 - 3 * b1 - 5

    if m <= b1 - 1:
        assert b2 <= 4 * b1 + 4
        case, j, l = PlanCase.RANGE_LOW, 0, m
        head = (b1 + 1, b1 + 2, b1 + 3 + m)
    elif m <= b1 + 3:
        assert 4 * b1 + 5 <= b2 <= 4 * b1 + 8
        j = -((m - b1 + 1) // -2)  # ceil
        case, l = PlanCase.RANGE_MID_J, m - 2 * j
        head = (b1 + 1, b1 + 2 + j, b1 + 3 + m - j)
    elif m == 2 * b1 + 5:
        assert b2 == 5 * b1 + 10
        case, j, l = PlanCase.RANGE_HIGH_SPECIAL, None, None
        head = (b1 + 1, b1 + 2, b1 + 4, 2 * b1 + 4)
    else:
        assert 4 * b1 + 9 <= b2
        case, j, l = PlanCase.RANGE_HIGH_GENERIC, None, None
        head = (b1 + 1, b1 + 2, b1 + 3, m)

    return ConstructionPlan(b1=b1, b2=b2, m=m, case_id=case, j=j, l=l, head=head)


def realize(plan: ConstructionPlan, horizon: int) -> ElementSeq:
    """Base segment + head + square-growth tail, listing every intended element <= horizon.

    The tail appends the square of the last element while it still fits, so
    gap analysis at the horizon is exact: all omitted elements (and any sum
    involving one) exceed the horizon.
    """
    min_horizon = 4 * plan.b1 + 6 + plan.m
    if horizon < min_horizon:
        raise UsageError(f"horizon must be at least {min_horizon}, got {horizon}")
    elems = list(base_segment(plan.b1)) + list(plan.head)
    while elems[-1] ** 2 <= horizon:
        elems.append(elems[-1] ** 2)
    return ElementSeq(tuple(elems))


def derive_b(seq: ElementSeq, horizon: int, *, exact: bool = False,
             cap_limit: int | None = None) -> GapReport:
    """Gaps of seq's sumset in [0, horizon].

    Pass ``exact=True`` only when every omitted element of the intended
    sequence is known to exceed the horizon (realize() guarantees this for
    its own output).
    """
    s = sumset_of(seq, horizon, cap_limit=cap_limit)
    return GapReport(horizon=horizon, exclusions=tuple(gaps(s, horizon)), exact=exact)
