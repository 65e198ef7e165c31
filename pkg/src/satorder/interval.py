"""Interval order recognition and interval representations.

A poset is an interval order exactly when it contains no two-plus-two
suborder.  For such orders the distinct strict downsets are linearly ordered
by inclusion, and so are the distinct strict upsets; ranking each element's
downset and (reversed) upset in those chains yields integer endpoints whose
open rational intervals (left - 1/2, right + 1/2) realize the order.  All
arithmetic stays on integer ranks, so "every point of f(p) precedes every
point of f(q)" reduces to right(p) < left(q) and output is bit-reproducible.

Intervals are kept nonempty (left <= right); the map need not be injective.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotIntervalOrder
from .posets import Poset


@dataclass(frozen=True)
class IntervalRepresentation:
    """Per-element integer endpoints (left, right) with left <= right."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for left, right in self.intervals:
            if left > right:
                raise ValueError(f"empty interval ({left}, {right})")


def is_interval_order(P: Poset) -> bool:
    """True exactly when the poset has no two-plus-two suborder."""
    return P.find_two_two() is None


def interval_representation(P: Poset) -> IntervalRepresentation:
    """Endpoints from downset/upset ranks; requires an interval order.

    left(p) is the rank of p's strict downset among the distinct strict
    downsets ordered by inclusion; right(p) is the reversed rank of p's
    strict upset.  Verification of the output is the job of
    :func:`verify_interval_representation`, which the test suite applies to
    every constructed representation.
    """
    if not is_interval_order(P):
        raise NotIntervalOrder("the poset contains a two-plus-two suborder")
    down_masks = [P.strict_down_mask(p) for p in range(P.n)]
    up_masks = [P.strict_up_mask(p) for p in range(P.n)]
    down_rank = _inclusion_ranks(down_masks)
    up_rank = _inclusion_ranks(up_masks)
    top = max(up_rank.values()) if up_rank else 0
    intervals = tuple(
        (down_rank[down_masks[p]], top - up_rank[up_masks[p]]) for p in range(P.n)
    )
    return IntervalRepresentation(intervals)


def verify_interval_representation(P: Poset, f: IntervalRepresentation) -> bool:
    """Check the defining equivalence pair by pair: p < q exactly when the
    whole interval of p lies left of the whole interval of q."""
    if len(f.intervals) != P.n:
        raise ValueError("representation must assign an interval to every element")
    for p in range(P.n):
        for q in range(P.n):
            if p == q:
                continue
            separated = f.intervals[p][1] < f.intervals[q][0]
            if P.lt(p, q) != separated:
                return False
    return True


def _inclusion_ranks(masks: list[int]) -> dict[int, int]:
    """Rank the distinct masks along their inclusion chain.

    In a two-plus-two-free order the distinct sets form a chain, so sorting
    by population count orders them by inclusion.
    """
    distinct = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    return {m: i for i, m in enumerate(distinct)}
