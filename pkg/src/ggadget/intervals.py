"""Nested systems of depth intervals.

The system of parameter ``ell`` covers tree depths ``1..span(ell)`` with
``2**ell - 1`` intervals that pairwise do not cross and have pairwise
distinct endpoints.  An interval of rank ``a`` covers exactly ``span(a)``
consecutive depths.  These intervals decide which pairs of tree depths get
long-range edges (ribs) in the ribbed graph construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


def span(ell: int) -> int:
    """Number of consecutive depths covered by a rank-``ell`` interval.

    Defined by span(1) = 3 and span(ell) = 2 + 2 * span(ell - 1), which
    closes to 5 * 2**(ell - 1) - 2.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return 5 * 2 ** (ell - 1) - 2


def span_by_recurrence(ell: int) -> int:
    """Same as :func:`span`, computed by unrolling the recurrence."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    value = 3
    for _ in range(ell - 1):
        value = 2 + 2 * value
    return value


def rank_for_length(length: int) -> int:
    """Inverse of :func:`span`: the rank ``a`` with span(a) == length.

    Lengths not of the form 5 * 2**(a-1) - 2 are a construction error.
    """
    q, r = divmod(length + 2, 5)
    if r != 0 or q <= 0 or q & (q - 1):
        raise ValueError(f"no rank has interval length {length}")
    return q.bit_length()


@dataclass(frozen=True, order=True)
class Interval:
    """A pair of depths (lo, hi) with its rank.

    Valid intervals satisfy lo < hi and hi == lo + span(rank) - 1; the
    dataclass itself does not enforce this so that :func:`validate` can
    report violations on handcrafted inputs.
    """

    lo: int
    hi: int
    rank: int

    @classmethod
    def from_endpoints(cls, lo: int, hi: int) -> "Interval":
        """Build an interval, deriving the rank from its length."""
        if lo >= hi:
            raise ValueError(f"interval endpoints must satisfy lo < hi, got ({lo}, {hi})")
        return cls(lo, hi, rank_for_length(hi - lo + 1))

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def strictly_contains(self, depth: int) -> bool:
        """True iff depth lies strictly inside the interval."""
        return self.lo < depth < self.hi

    def shifted(self, offset: int) -> "Interval":
        return Interval(self.lo + offset, self.hi + offset, self.rank)


@dataclass(frozen=True)
class IntervalSystem:
    """The full interval family for one value of ``ell``.

    Intervals are kept sorted by lo for deterministic iteration.
    """

    ell: int
    intervals: tuple[Interval, ...]

    def __init__(self, ell: int, intervals: Iterable[Interval]):
        object.__setattr__(self, "ell", ell)
        object.__setattr__(
            self, "intervals", tuple(sorted(intervals, key=lambda iv: (iv.lo, iv.hi)))
        )

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def shift(intervals: IntervalSystem | Iterable[Interval], offset: int) -> set[Interval]:
    """Translate every interval by ``offset``; ranks are preserved."""
    return {iv.shifted(offset) for iv in intervals}


@lru_cache(maxsize=None)
def _intervals(ell: int) -> tuple[Interval, ...]:
    if ell == 1:
        return (Interval(1, 3, 1),)
    prev = _intervals(ell - 1)
    parts = {Interval.from_endpoints(1, span(ell))}
    parts |= shift(prev, 1)
    parts |= shift(prev, span(ell - 1) + 1)
    return tuple(sorted(parts, key=lambda iv: iv.lo))


def build_intervals(ell: int) -> IntervalSystem:
    """Build the interval system for ``ell``.

    The system is the union of one full-span interval (1, span(ell)) and two
    copies of the (ell - 1)-system, shifted to sit disjointly inside it.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return IntervalSystem(ell, _intervals(ell))


def validate(system: IntervalSystem) -> list[str]:
    """Check every structural invariant; return violation descriptions.

    An empty list means the system has the correct cardinality, endpoints in
    range and pairwise distinct, consistent rank/length pairs, and no two
    crossing intervals.
    """
    violations: list[str] = []
    ell = system.ell
    expected = 2**ell - 1
    if len(system.intervals) != expected:
        violations.append(
            f"cardinality: expected {expected} intervals for ell={ell}, got {len(system.intervals)}"
        )

    limit = span(ell)
    endpoints: dict[int, Interval] = {}
    for iv in system.intervals:
        if iv.lo >= iv.hi:
            violations.append(f"shape: {iv} does not satisfy lo < hi")
        if not (1 <= iv.lo <= limit and 1 <= iv.hi <= limit):
            violations.append(f"range: {iv} has endpoints outside [1, {limit}]")
        if iv.lo < iv.hi and iv.length != span(iv.rank):
            violations.append(
                f"rank: {iv} has length {iv.length}, expected span({iv.rank}) = {span(iv.rank)}"
            )
        for endpoint in (iv.lo, iv.hi):
            if endpoint in endpoints:
                violations.append(
                    f"endpoints: {endpoint} occurs in both {endpoints[endpoint]} and {iv}"
                )
            else:
                endpoints[endpoint] = iv

    # Non-crossing check on the lo-sorted list: a stack of currently-open
    # intervals; an interval reaching past the innermost enclosing one crosses it.
    stack: list[Interval] = []
    for iv in sorted(system.intervals, key=lambda v: (v.lo, -v.hi)):
        while stack and stack[-1].hi < iv.lo:
            stack.pop()
        if stack and stack[-1].hi < iv.hi:
            violations.append(f"crossing: {stack[-1]} and {iv}")
        stack.append(iv)

    return violations


def intervals_with_lo(system: IntervalSystem, depth: int) -> list[Interval]:
    """All intervals starting at ``depth`` (at most one in a valid system)."""
    return [iv for iv in system.intervals if iv.lo == depth]
