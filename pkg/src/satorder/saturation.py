"""Bouquets, fans, skew topping, and the structural saturation checkers.

A bouquet is any set of at least two elements possessing a maximum; a fan is
a bouquet whose non-maximum members form an antichain.  Two such sets are
parallel when no cross pair is comparable, and a parallel pair is skewly
topped when some element sits at or above one maximum, not above the other,
yet above all of the other side's non-maximum members.

A finite poset is saturated exactly when every two parallel bouquets in it
are skewly topped (equivalently: every two parallel fans).  The fast checker
below exploits the fact that a failure always shows up on a canonical pair
built from two incomparable elements, which brings the search down to
O(n^4); the exhaustive checker quantifies literally over all bouquet pairs
and serves as the structural cross-check.  Both witness constructions are
implemented: merging two untopped maxima into one shared new point, and
reading a parallel untopped pair back off a representation whose new-point
map repeats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    NoMaximum,
    NotParallel,
    NotParsimonious,
    PreconditionViolated,
    TooLarge,
    TooSmall,
)
from .posets import Poset
from .representations import (
    NewPointMap,
    SaturationVerdict,
    SetRepresentation,
    new_point_map,
)

EXHAUSTIVE_GUARD = 12


@dataclass(frozen=True)
class Bouquet:
    """A member set together with its maximum under the order."""

    members: frozenset[int]
    top: int

    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m


@dataclass(frozen=True)
class Fan(Bouquet):
    """A bouquet whose non-maximum members are pairwise incomparable."""


def make_bouquet(P: Poset, members: Iterable[int]) -> Bouquet:
    """Wrap a member set, computing its maximum; TooSmall/NoMaximum otherwise."""
    ms = frozenset(members)
    if len(ms) < 2:
        raise TooSmall("a bouquet needs at least two members")
    mask = _mask(ms)
    for m in ms:
        if mask & ~P.down[m] == 0:
            return Bouquet(ms, m)
    raise NoMaximum(f"{sorted(ms)} has no greatest element")


def is_fan(P: Poset, b: Bouquet) -> bool:
    rest = sorted(b.members - {b.top})
    return all(
        not P.comparable(x, y) for i, x in enumerate(rest) for y in rest[i + 1 :]
    )


def fan_from_bouquet(P: Poset, b: Bouquet) -> Fan:
    """Keep only members whose strict successors inside the bouquet are all
    the maximum; same maximum, and skew tops are preserved both ways.

    Fans are their own replacement, and any finite bouquet retains at least
    one non-maximum member, so the result is a genuine fan.
    """
    keep = [
        x
        for x in b.members
        if all(y == b.top for y in b.members if P.lt(x, y))
    ]
    fan = Fan(frozenset(keep), b.top)
    assert len(fan.members) >= 2
    return fan


def are_parallel(P: Poset, b0: Bouquet, b1: Bouquet) -> bool:
    """No element of one bouquet is comparable with any element of the other."""
    m1 = b1.mask()
    return all((P.up[x] | P.down[x]) & m1 == 0 for x in b0.members)


def is_skew_top(P: Poset, b0: Bouquet, b1: Bouquet, m: int, i: int) -> bool:
    """Does m top side i of the parallel pair (b0, b1)?

    Clauses: m at or above the maximum of side i, not above the other
    maximum, and above every non-maximum member of the other side.
    """
    upper, other = (b0, b1) if i == 0 else (b1, b0)
    if not P.leq(upper.top, m):
        return False
    if P.leq(other.top, m):
        return False
    return all(P.leq(x, m) for x in other.members if x != other.top)


def skewly_topping(P: Poset, b0: Bouquet, b1: Bouquet) -> tuple[int, int] | None:
    """Least (m, i) witnessing a skew top of the parallel pair, else None."""
    if not are_parallel(P, b0, b1):
        raise NotParallel("skew topping is only defined for parallel bouquets")
    for m in range(P.n):
        for i in (0, 1):
            if is_skew_top(P, b0, b1, m, i):
                return m, i
    return None


# -- canonical pairs and the fast checker -------------------------------------


def canonical_bouquets(P: Poset, p0: int, p1: int) -> tuple[Bouquet, Bouquet] | None:
    """The bouquet pair grown below two incomparable elements.

    Side i collects the elements strictly below p_i that are incomparable
    with the other element, plus p_i itself.  Defined when p0, p1 are
    incomparable and both collections are nonempty; the pair is then always
    parallel.
    """
    if P.comparable(p0, p1):
        return None
    i0 = {x for x in P.strict_downset(p0) if not P.comparable(x, p1)}
    i1 = {x for x in P.strict_downset(p1) if not P.comparable(x, p0)}
    if not i0 or not i1:
        return None
    return Bouquet(frozenset(i0 | {p0}), p0), Bouquet(frozenset(i1 | {p1}), p1)


def canonical_pairs(P: Poset) -> Iterator[tuple[Bouquet, Bouquet]]:
    """All defined canonical pairs, in lexicographic order of (p0, p1)."""
    for p0, p1 in P.incomparable_pairs():
        pair = canonical_bouquets(P, p0, p1)
        if pair is not None:
            yield pair


def is_saturated_fast(P: Poset) -> SaturationVerdict:
    """Saturation via canonical pairs only: O(n^4), no size guard.

    A parallel bouquet pair with no skew top exists exactly when some
    canonical pair has none (growing any untopped pair to the canonical pair
    over its maxima keeps it untopped), so checking canonical pairs decides
    the general quantifier.
    """
    for b0, b1 in canonical_pairs(P):
        if skewly_topping(P, b0, b1) is None:
            return SaturationVerdict(saturated=False, witness_bouquets=(b0, b1))
    return SaturationVerdict(saturated=True)


# -- literal quantification over bouquet/fan pairs ----------------------------


def _bouquet_masks(P: Poset, top: int) -> Iterator[int]:
    """Member masks of every bouquet with the given maximum."""
    down = P.strict_down_mask(top)
    sub = down
    while sub:
        yield sub | 1 << top
        sub = (sub - 1) & down


def _pair_scan(P: Poset, masks_by_top: list[list[int]]) -> Iterator[tuple[Bouquet, Bouquet]]:
    """Parallel pairs drawn from per-maximum mask lists, deterministic order."""
    n = P.n
    for t0 in range(n):
        for t1 in range(t0 + 1, n):
            if P.comparable(t0, t1):
                continue
            for m0 in masks_by_top[t0]:
                u0 = 0
                x = m0
                while x:
                    low = x & -x
                    u0 |= P.up[low.bit_length() - 1] | P.down[low.bit_length() - 1]
                    x ^= low
                for m1 in masks_by_top[t1]:
                    if u0 & m1:
                        continue
                    yield (
                        Bouquet(frozenset(_mask_bits(m0)), t0),
                        Bouquet(frozenset(_mask_bits(m1)), t1),
                    )


def is_saturated_exhaustive(P: Poset) -> SaturationVerdict:
    """Check every parallel bouquet pair literally; guarded at n <= 12."""
    if P.n > EXHAUSTIVE_GUARD:
        raise TooLarge(f"exhaustive bouquet check guarded at n <= {EXHAUSTIVE_GUARD}")
    masks_by_top = [list(_bouquet_masks(P, t)) for t in range(P.n)]
    for b0, b1 in _pair_scan(P, masks_by_top):
        if skewly_topping(P, b0, b1) is None:
            return SaturationVerdict(saturated=False, witness_bouquets=(b0, b1))
    return SaturationVerdict(saturated=True)


def check_fan_criterion(P: Poset) -> bool:
    """Every two parallel fans are skewly topped; guarded at n <= 12.

    Agrees with the bouquet quantifier on every finite poset.
    """
    if P.n > EXHAUSTIVE_GUARD:
        raise TooLarge(f"exhaustive fan check guarded at n <= {EXHAUSTIVE_GUARD}")
    masks_by_top: list[list[int]] = []
    for t in range(P.n):
        fans = []
        for mask in _bouquet_masks(P, t):
            rest = mask & ~(1 << t)
            if _is_antichain_mask(P, rest):
                fans.append(mask)
        masks_by_top.append(fans)
    for f0, f1 in _pair_scan(P, masks_by_top):
        if skewly_topping(P, f0, f1) is None:
            return False
    return True


def _is_antichain_mask(P: Poset, mask: int) -> bool:
    x = mask
    while x:
        low = x & -x
        p = low.bit_length() - 1
        if (P.up[p] | P.down[p]) & mask != low:
            return False
        x ^= low
    return True


# -- witness constructions -----------------------------------------------------


def merging_representation(P: Poset, b0: Bouquet, b1: Bouquet) -> SetRepresentation:
    """Identify the two maxima's new points on a fresh ground point.

    Requires the pair to be parallel and not skewly topped.  Ground set is
    [0, n]: point n is the shared fresh point, and the two maxima's own
    ground points simply go unused.  Elements at or above either maximum get
    their principal ideal with the maxima swapped out for the fresh point;
    everything else keeps its principal ideal.  The result is a parsimonious
    set representation whose new-point map sends both maxima to the fresh
    point, certifying non-saturation.
    """
    if not are_parallel(P, b0, b1):
        raise PreconditionViolated("bouquets are not parallel")
    top_of = skewly_topping(P, b0, b1)
    if top_of is not None:
        raise PreconditionViolated(f"pair is skew-topped by element {top_of[0]}")
    fresh = P.n
    maxima = {b0.top, b1.top}
    sets = []
    for p in range(P.n):
        ideal = P.downset(p)
        if b0.top in ideal or b1.top in ideal:
            sets.append(frozenset(ideal | {fresh}) - maxima)
        else:
            sets.append(frozenset(ideal))
    return SetRepresentation(P.n + 1, tuple(sets))


def witness_bouquets_from_rep(
    P: Poset, rep: SetRepresentation, p0: int, p1: int
) -> tuple[Bouquet, Bouquet]:
    """Read a parallel, untopped bouquet pair off a repeated new point.

    Requires rep parsimonious with p0 != p1 sharing their new point; the
    canonical pair over (p0, p1) is then guaranteed to exist, be parallel,
    and admit no skew top.
    """
    if p0 == p1:
        raise PreconditionViolated("need two distinct elements")
    try:
        npm = new_point_map(P, rep)
    except NotParsimonious as exc:
        raise PreconditionViolated(f"not a parsimonious representation: {exc}") from exc
    if npm.values[p0] != npm.values[p1]:
        raise PreconditionViolated("elements do not share a new point")
    pair = canonical_bouquets(P, p0, p1)
    assert pair is not None, "a shared new point forces both side collections nonempty"
    return pair


def _mask(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


__all__ = [
    "Bouquet",
    "Fan",
    "NewPointMap",
    "SaturationVerdict",
    "SetRepresentation",
    "are_parallel",
    "canonical_bouquets",
    "canonical_pairs",
    "check_fan_criterion",
    "fan_from_bouquet",
    "is_fan",
    "is_saturated_exhaustive",
    "is_saturated_fast",
    "is_skew_top",
    "make_bouquet",
    "merging_representation",
    "skewly_topping",
    "witness_bouquets_from_rep",
]
