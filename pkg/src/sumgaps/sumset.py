"""Exact finite subset-sum arithmetic on a dense bit vector.

A sumset holds, for a finite set of positive integers, the membership of
every value in ``[0, cap]`` among its subset sums (the empty sum 0 is always
a member).  Membership lives in a single Python int used as a bit vector, so
inserting an element is one shift-OR over the whole window at once.  The
exact element total ``sigma`` is tracked separately and is never truncated,
which keeps coverage/symmetry bookkeeping intact even when ``sigma > cap``.

All values are immutable; every operation returns a fresh ``SumSet``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Largest cap accepted unless the caller raises the ceiling explicitly.
DEFAULT_CAP_LIMIT = 1 << 24

#: Largest sequence length brute_force_sumset will enumerate (2**20 subsets).
BRUTE_FORCE_MAX_LEN = 20


class UsageError(ValueError):
    """A precondition on arguments was violated."""


class ResourceError(RuntimeError):
    """A capacity request exceeded the configured memory ceiling."""


@dataclass(frozen=True)
class ElementSeq:
    """A strictly increasing finite sequence of positive integers."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = 0
        for a in self.elements:
            if a <= prev:
                raise UsageError(
                    f"elements must be strictly increasing positive integers, got {self.elements}"
                )
            prev = a

    @classmethod
    def of(cls, values: Iterable[int]) -> "ElementSeq":
        return cls(tuple(values))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    def total(self) -> int:
        return sum(self.elements)


@dataclass(frozen=True)
class SumSet:
    """Subset-sum membership over ``[0, cap]`` plus the exact element total.

    ``bits`` bit x is set iff x is a subset sum of the inserted elements and
    x <= cap.  ``sigma`` is the untruncated total of all inserted elements.
    """

    cap: int
    bits: int
    sigma: int

    def __post_init__(self) -> None:
        if self.cap < 0:
            raise UsageError(f"cap must be nonnegative, got {self.cap}")
        if self.sigma < 0 or not self.bits & 1:
            raise UsageError("malformed sumset: 0 must be a member and sigma nonnegative")
        top = self.bits.bit_length() - 1
        if top > self.cap or top > self.sigma:
            raise UsageError("malformed sumset: member exceeds min(cap, sigma)")

    @classmethod
    def empty(cls, cap: int, *, cap_limit: int | None = None) -> "SumSet":
        """The sumset of no elements: members {0}, sigma 0."""
        limit = DEFAULT_CAP_LIMIT if cap_limit is None else cap_limit
        if cap > limit:
            raise ResourceError(f"cap {cap} exceeds the configured ceiling {limit}")
        return cls(cap=cap, bits=1, sigma=0)

    def __contains__(self, x: int) -> bool:
        return 0 <= x <= self.cap and (self.bits >> x) & 1 == 1

    def member_count(self) -> int:
        return self.bits.bit_count()

    def members(self) -> list[int]:
        """All members in increasing order (0 is always first)."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out


def add_element(s: SumSet, a: int) -> SumSet:
    """Insert one element: new members are the old ones plus their translates by ``a``.

    Sums that would land above ``s.cap`` are dropped from the bit vector;
    ``sigma`` still grows by ``a`` exactly.
    """
    if a < 1:
        raise UsageError(f"element must be a positive integer, got {a}")
    mask = (1 << (s.cap + 1)) - 1
    return SumSet(cap=s.cap, bits=(s.bits | (s.bits << a)) & mask, sigma=s.sigma + a)


def sumset_of(seq: ElementSeq, cap: int, *, cap_limit: int | None = None) -> SumSet:
    """The set of subset sums of ``seq``, truncated at ``cap``."""
    s = SumSet.empty(cap, cap_limit=cap_limit)
    for a in seq:
        s = add_element(s, a)
    return s


def gaps(s: SumSet, upto: int) -> list[int]:
    """All non-members in ``[0, upto]``, in increasing order.

    Values above ``sigma`` are unreachable and therefore count as gaps.
    """
    if upto > s.cap:
        raise UsageError(f"upto {upto} exceeds cap {s.cap}")
    if upto < 0:
        raise UsageError(f"upto must be nonnegative, got {upto}")
    comp = ~s.bits & ((1 << (upto + 1)) - 1)
    out = []
    while comp:
        low = comp & -comp
        out.append(low.bit_length() - 1)
        comp ^= low
    return out


def brute_force_sumset(seq: ElementSeq) -> set[int]:
    """Ground-truth subset sums by explicit enumeration of every subset.

    Walks all 2**n subsets in Gray-code order, maintaining the running sum
    with one add or subtract per step, so it shares nothing with the
    shift-OR bit vector path.  Test oracle only; refuses n > 20.
    """
    elems = seq.elements
    n = len(elems)
    if n > BRUTE_FORCE_MAX_LEN:
        raise UsageError(f"brute force enumeration capped at {BRUTE_FORCE_MAX_LEN} elements, got {n}")
    sums = {0}
    total = 0
    for counter in range(1, 1 << n):
        low = counter & -counter
        i = low.bit_length() - 1
        # Gray code of `counter` toggles exactly bit i relative to the previous one.
        if (counter ^ (counter >> 1)) & low:
            total += elems[i]
        else:
            total -= elems[i]
        sums.add(total)
    return sums
