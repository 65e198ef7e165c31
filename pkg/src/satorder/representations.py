"""Set representations of posets.

A set representation embeds the order into set inclusion: an injective map
from elements to subsets of a ground set [0, ground_size) with p < q exactly
when the set of p is a proper subset of the set of q.  A representation is
parsimonious when every element contributes exactly one point beyond the
union of its strict predecessors' sets, and every point of every set is the
contributed point of some element below.  The poset is saturated when the
new-point map is injective for every parsimonious representation; the
enumeration here decides that by brute force and is the reference oracle for
the faster structural checkers in :mod:`satorder.saturation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

from .errors import NewPointsNotInjective, NotASetRepresentation, NotParsimonious
from .posets import Poset

if TYPE_CHECKING:  # only for annotations; satorder.saturation imports this module
    from .saturation import Bouquet


@dataclass(frozen=True)
class SetRepresentation:
    """Per-element finite subsets of a ground set [0, ground_size).

    Ground points that no set uses are allowed; every predicate ignores them.
    """

    ground_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for s in self.sets:
            for x in s:
                if not 0 <= x < self.ground_size:
                    raise ValueError(f"ground point {x} outside [0, {self.ground_size})")

    @classmethod
    def of(cls, ground_size: int, sets: Sequence[Iterable[int]]) -> "SetRepresentation":
        return cls(ground_size, tuple(frozenset(s) for s in sets))

    def used_points(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for s in self.sets:
            out |= s
        return out


@dataclass(frozen=True)
class NewPointMap:
    """For each element, the single point its set adds over its predecessors."""

    values: tuple[int, ...]

    @property
    def injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


@dataclass(frozen=True)
class InducedOrder:
    """The order a representation induces on its used ground points."""

    carrier: tuple[int, ...]
    relation: frozenset[tuple[int, int]]

    def leq(self, q: int, q2: int) -> bool:
        return (q, q2) in self.relation


@dataclass(frozen=True)
class SaturationVerdict:
    """Outcome of a saturation check, carrying a witness when negative.

    Exactly one witness form is populated for a non-saturated poset: either a
    parallel bouquet pair that no element skew-tops, or a parsimonious
    representation whose new-point map repeats a value.
    """

    saturated: bool
    witness_bouquets: "tuple[Bouquet, Bouquet] | None" = None
    witness_new_points: NewPointMap | None = None
    witness_representation: SetRepresentation | None = None


# -- the canonical representation and the definitional predicates ------------


def principal_ideal_rep(P: Poset) -> SetRepresentation:
    """Map every element to its principal ideal {q : q <= p}; ground set is P."""
    return SetRepresentation(P.n, tuple(frozenset(P.downset(p)) for p in range(P.n)))


def is_set_representation(P: Poset, rep: SetRepresentation) -> bool:
    """Injective, and p < q exactly when the sets are properly nested."""
    if len(rep.sets) != P.n:
        raise ValueError("representation must assign a set to every element")
    if len(set(rep.sets)) != P.n:
        return False
    for p in range(P.n):
        for q in range(P.n):
            if p != q and P.lt(p, q) != (rep.sets[p] < rep.sets[q]):
                return False
    return True


def _predecessor_unions(P: Poset, rep: SetRepresentation) -> list[frozenset[int]]:
    out = []
    for p in range(P.n):
        u: frozenset[int] = frozenset()
        for q in P.strict_downset(p):
            u |= rep.sets[q]
        out.append(u)
    return out


def adds_one_new_point_each(P: Poset, rep: SetRepresentation) -> bool:
    """Parsimony clause one: each set exceeds its predecessors' union by a
    single point."""
    unions = _predecessor_unions(P, rep)
    return all(len(rep.sets[p] - unions[p]) == 1 for p in range(P.n))


def every_point_introduced(P: Poset, rep: SetRepresentation) -> bool:
    """Parsimony clause two: each point of each set is the single new point
    of some element at or below it."""
    unions = _predecessor_unions(P, rep)
    introduced: dict[int, int | None] = {}
    for p in range(P.n):
        diff = rep.sets[p] - unions[p]
        introduced[p] = next(iter(diff)) if len(diff) == 1 else None
    for p in range(P.n):
        allowed = {introduced[q] for q in P.downset(p)} - {None}
        if not rep.sets[p] <= allowed:
            return False
    return True


def is_parsimonious(P: Poset, rep: SetRepresentation) -> bool:
    """Both parsimony clauses; raises NotASetRepresentation on bad input."""
    if not is_set_representation(P, rep):
        raise NotASetRepresentation("parsimony is only defined for set representations")
    return adds_one_new_point_each(P, rep) and every_point_introduced(P, rep)


def is_parsimonious_by_counting(P: Poset, rep: SetRepresentation) -> bool:
    """The cardinality form used for finite orders: each set is exactly one
    point bigger than the union of its strict predecessors' sets.

    Agrees with :func:`is_parsimonious` on every finite set representation;
    the test suite checks that equivalence exhaustively.
    """
    if not is_set_representation(P, rep):
        raise NotASetRepresentation("parsimony is only defined to set representations")
    unions = _predecessor_unions(P, rep)
    return all(len(rep.sets[p]) == len(unions[p]) + 1 for p in range(P.n))


# -- new-point maps ----------------------------------------------------------


def new_point_map(P: Poset, rep: SetRepresentation) -> NewPointMap:
    """Extract each element's unique new point; requires parsimony."""
    try:
        ok = is_parsimonious(P, rep)
    except NotASetRepresentation as exc:
        raise NotParsimonious(str(exc)) from exc
    if not ok:
        raise NotParsimonious("representation does not add one new point per element")
    unions = _predecessor_unions(P, rep)
    return NewPointMap(tuple(next(iter(rep.sets[p] - unions[p])) for p in range(P.n)))


def rep_from_new_points(
    P: Poset, points: NewPointMap | Sequence[int], ground_size: int | None = None
) -> SetRepresentation:
    """Compose a candidate representation from a value per element:
    set(p) = {value(q) : q <= p}.

    Validity is not guaranteed; callers check.  Every parsimonious set
    representation has this shape, which is what makes the enumeration below
    complete (the test suite confirms that by exhausting all set-valued maps
    at small sizes).
    """
    values = tuple(points.values if isinstance(points, NewPointMap) else points)
    if len(values) != P.n:
        raise ValueError("need exactly one value per element")
    if ground_size is None:
        ground_size = max(values) + 1 if values else 0
    sets = tuple(frozenset(values[q] for q in P.downset(p)) for p in range(P.n))
    return SetRepresentation(ground_size, sets)


# -- exhaustive enumeration (the saturation oracle) --------------------------


def enumerate_parsimonious(P: Poset) -> Iterator[NewPointMap]:
    """All parsimonious representations of P, one per ground-set relabeling.

    Yields new-point maps with values canonicalized so that they appear in
    increasing order of first use by element index; composing with
    :func:`rep_from_new_points` recovers the representations themselves.
    Backtracks over a fixed linear extension, trying a fresh point before
    reusing old ones, so the principal-ideal pattern is always emitted first
    and the stream order is deterministic.
    """
    n = P.n
    if n == 0:
        yield NewPointMap(())
        return
    ext = P.linear_extension
    strict_down_sets = [sorted(P.strict_downset(p)) for p in range(n)]
    prior_incomp: list[list[int]] = []
    for t, p in enumerate(ext):
        prior_incomp.append([q for q in ext[:t] if not P.comparable(p, q)])
    values = [0] * n
    masks = [0] * n

    def rec(t: int, used: int) -> Iterator[NewPointMap]:
        if t == n:
            relabel: dict[int, int] = {}
            yield NewPointMap(tuple(relabel.setdefault(values[p], len(relabel)) for p in range(n)))
            return
        p = ext[t]
        below = strict_down_sets[p]
        forbidden = {values[q] for q in below}
        base = 0
        for q in below:
            base |= masks[q]
        for v in range(used, -1, -1):
            if v in forbidden:
                continue
            m = base | 1 << v
            ok = True
            for q in prior_incomp[t]:
                mq = masks[q]
                inter = mq & m
                if inter == mq or inter == m:
                    ok = False
                    break
            if ok:
                values[p] = v
                masks[p] = m
                yield from rec(t + 1, used + 1 if v == used else used)

    yield from rec(0, 0)


def is_saturated_oracle(P: Poset) -> SaturationVerdict:
    """Decide saturation straight from the definition: every enumerated
    parsimonious representation must have an injective new-point map.

    The witness, when present, is the first repeating map in the fixed
    enumeration order together with its representation.
    """
    for npm in enumerate_parsimonious(P):
        if not npm.injective:
            return SaturationVerdict(
                saturated=False,
                witness_new_points=npm,
                witness_representation=rep_from_new_points(P, npm),
            )
    return SaturationVerdict(saturated=True)


# -- the induced order on used points ----------------------------------------


def induced_order(P: Poset, rep: SetRepresentation) -> InducedOrder:
    """Order the used ground points by inheriting the order through the
    new-point map; only defined when that map is injective.

    The new-point map is then an order isomorphism onto the carrier, and
    every set is the image of the corresponding principal ideal.
    """
    npm = new_point_map(P, rep)
    if not npm.injective:
        raise NewPointsNotInjective("two elements share a new point")
    carrier = tuple(sorted(rep.used_points()))
    assert set(carrier) == set(npm.values), "used points must coincide with new points"
    relation = frozenset(
        (npm.values[p], npm.values[q]) for p in range(P.n) for q in range(P.n) if P.leq(p, q)
    )
    for p in range(P.n):
        assert rep.sets[p] == {npm.values[q] for q in P.downset(p)}
    return InducedOrder(carrier, relation)
