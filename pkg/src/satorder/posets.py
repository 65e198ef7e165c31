"""Finite partial orders on elements 0..n-1.

The order relation is stored as one bitmask per element: bit q of ``up[p]``
says p <= q.  Posets are immutable, hashable, and cheap to share; every
operation here is pure.

Element identity is positional.  Named generators document their layout in
their docstrings (see :func:`skew_towers` in particular).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import CycleDetected


class TwoTwoWitness(NamedTuple):
    """Four elements forming two strict chains with no cross-comparability.

    a < b and c < d, while a is not below d and c is not below b.  Such a
    quadruple is exactly a two-plus-two suborder.
    """

    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class Poset:
    """A finite partial order: reflexive, antisymmetric, transitive."""

    n: int
    up: tuple[int, ...]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_strict_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Close the given strict pairs reflexively and transitively.

        Raises CycleDetected if the closure would identify two distinct
        elements (antisymmetry failure); cycles are rejected, not quotiented.
        """
        if n < 0:
            raise ValueError("n must be >= 0")
        rows = [1 << p for p in range(n)]
        for p, q in pairs:
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"element out of range: ({p}, {q}) with n={n}")
            if p == q:
                raise CycleDetected(f"strict pair ({p}, {q}) is a self-loop")
            rows[p] |= 1 << q
        # Warshall closure on bit rows.
        for k in range(n):
            row_k = rows[k]
            bit_k = 1 << k
            for i in range(n):
                if rows[i] & bit_k:
                    rows[i] |= row_k
        for p in range(n):
            for q in range(p + 1, n):
                if rows[p] >> q & 1 and rows[q] >> p & 1:
                    raise CycleDetected(f"elements {p} and {q} lie on a cycle")
        return cls(n, tuple(rows))

    # -- relation queries --------------------------------------------------

    def leq(self, p: int, q: int) -> bool:
        """p <= q in this order."""
        return bool(self.up[p] >> q & 1)

    def lt(self, p: int, q: int) -> bool:
        """p < q (strict)."""
        return p != q and bool(self.up[p] >> q & 1)

    def comparable(self, p: int, q: int) -> bool:
        return bool((self.up[p] >> q | self.up[q] >> p) & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Transpose rows: bit q of down[p] says q <= p."""
        rows = [0] * self.n
        for p in range(self.n):
            row = self.up[p]
            for q in range(self.n):
                if row >> q & 1:
                    rows[q] |= 1 << p
        return tuple(rows)

    def strict_down_mask(self, p: int) -> int:
        return self.down[p] & ~(1 << p)

    def strict_up_mask(self, p: int) -> int:
        return self.up[p] & ~(1 << p)

    def strict_downset(self, p: int) -> set[int]:
        """All q with q < p."""
        return _bits(self.strict_down_mask(p))

    def strict_upset(self, p: int) -> set[int]:
        """All q with p < q."""
        return _bits(self.strict_up_mask(p))

    def downset(self, p: int) -> set[int]:
        """All q with q <= p (the principal ideal at p)."""
        return _bits(self.down[p])

    def incomparable_pairs(self) -> Iterator[tuple[int, int]]:
        """All pairs p < q (numerically) that the order does not relate."""
        for p in range(self.n):
            for q in range(p + 1, self.n):
                if not self.comparable(p, q):
                    yield p, q

    # -- derived structure -------------------------------------------------

    @cached_property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs: (p, q) with p < q and nothing strictly between."""
        edges = []
        for p in range(self.n):
            for q in range(self.n):
                if self.lt(p, q) and not (self.strict_up_mask(p) & self.strict_down_mask(q)):
                    edges.append((p, q))
        return tuple(edges)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """The transitive reduction, as a sorted list of cover pairs."""
        return list(self.hasse)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Smallest-index topological order; fixed so searches are deterministic."""
        placed = 0
        out = []
        while len(out) < self.n:
            for p in range(self.n):
                if not placed >> p & 1 and not (self.strict_down_mask(p) & ~placed):
                    placed |= 1 << p
                    out.append(p)
                    break
        return tuple(out)

    def find_two_two(self) -> TwoTwoWitness | None:
        """Lexicographically first two-plus-two suborder, if any.

        Returns (a, b, c, d) with a < b, c < d, not a <= d, not c <= b;
        absence of such a quadruple characterizes interval orders.
        """
        n = self.n
        for a in range(n):
            for b in range(n):
                if not self.lt(a, b):
                    continue
                for c in range(n):
                    for d in range(n):
                        if self.lt(c, d) and not self.leq(a, d) and not self.leq(c, b):
                            return TwoTwoWitness(a, b, c, d)
        return None


def _bits(mask: int) -> set[int]:
    out = set()
    q = 0
    while mask:
        if mask & 1:
            out.add(q)
        mask >>= 1
        q += 1
    return out


# -- named generators -------------------------------------------------------


def chain(n: int) -> Poset:
    """The linear order 0 < 1 < ... < n-1."""
    return Poset.from_strict_pairs(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    """n pairwise incomparable elements."""
    return Poset.from_strict_pairs(n, [])


def two_plus_two() -> Poset:
    """Two disjoint 2-chains, 0 < 1 and 2 < 3, with no cross-comparability."""
    return Poset.from_strict_pairs(4, [(0, 1), (2, 3)])


def n_poset() -> Poset:
    """The N-shaped order on four elements: 0 < 1, 2 < 1, 2 < 3."""
    return Poset.from_strict_pairs(4, [(0, 1), (2, 1), (2, 3)])


def topped_two_two() -> Poset:
    """A two-plus-two with a fifth element skew-topping it.

    0 < 1 and 2 < 3 form the two-plus-two; element 4 sits above 1 and 2
    (closure adds 0 < 4) but not above 3.  The result is saturated while
    still containing a two-plus-two suborder.
    """
    return Poset.from_strict_pairs(5, [(0, 1), (2, 3), (2, 4), (1, 4)])


def skew_towers(k: int) -> Poset:
    """Two parallel towers of height k whose right side carries a top chain.

    Layout for k >= 1, with 3k + 2 elements:

    * indices 0..k-1   -- left tower l0 < l1 < ...,
    * index k          -- left cap ``l`` above the whole left tower,
    * indices k+1..2k  -- right tower r0 < r1 < ...,
    * index 2k+1       -- right cap ``r`` above the right tower,
    * indices 2k+2..3k+1 -- tops t0 < t1 < ... above ``r``,

    plus the diagonals li < ti.  Each top ti skew-tops the pair of towers
    truncated at height i; the left cap stays incomparable with every top.
    Every finite member of this family is saturated (only the infinite
    limit of the construction fails to be, which is out of reach here).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    left = list(range(k))
    left_cap = k
    right = list(range(k + 1, 2 * k + 1))
    right_cap = 2 * k + 1
    tops = list(range(2 * k + 2, 3 * k + 2))
    pairs: list[tuple[int, int]] = []
    for i in range(k - 1):
        pairs.append((left[i], left[i + 1]))
        pairs.append((right[i], right[i + 1]))
        pairs.append((tops[i], tops[i + 1]))
    pairs.append((left[-1], left_cap))
    pairs.append((right[-1], right_cap))
    pairs.append((right_cap, tops[0]))
    for i in range(k):
        pairs.append((left[i], tops[i]))
    return Poset.from_strict_pairs(3 * k + 2, pairs)


def skew_towers_names(k: int) -> tuple[str, ...]:
    """Element labels matching the skew_towers layout."""
    return tuple(
        [f"l{i}" for i in range(k)]
        + ["l"]
        + [f"r{i}" for i in range(k)]
        + ["r"]
        + [f"t{i}" for i in range(k)]
    )


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Seeded random order: keep each numerically increasing pair with
    probability ``density``, then close transitively.

    Deterministic for a fixed (n, density, seed); every isomorphism class is
    reachable because every finite poset has a linear extension.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((i, j))
    return Poset.from_strict_pairs(n, pairs)


GENERATOR_KINDS = (
    "chain",
    "antichain",
    "two-plus-two",
    "n-poset",
    "topped-two-two",
    "skew-towers",
    "random",
)


def generate(
    kind: str,
    n: int | None = None,
    k: int | None = None,
    density: float | None = None,
    seed: int | None = None,
) -> tuple[Poset, tuple[str, ...] | None]:
    """Build a named fixture; returns the poset and optional element labels.

    Parameter use by kind: chain/antichain need n; skew-towers needs k;
    random needs n, density and seed; the four-and-five element fixtures
    take no parameters.
    """
    if kind == "chain":
        return chain(_require(n, "n", kind)), None
    if kind == "antichain":
        return antichain(_require(n, "n", kind)), None
    if kind == "two-plus-two":
        return two_plus_two(), ("a", "b", "c", "d")
    if kind == "n-poset":
        return n_poset(), ("a", "b", "c", "d")
    if kind == "topped-two-two":
        return topped_two_two(), ("a", "b", "c", "d", "m")
    if kind == "skew-towers":
        return skew_towers(_require(k, "k", kind)), skew_towers_names(k)
    if kind == "random":
        return (
            random_poset(_require(n, "n", kind), _require(density, "density", kind), _require(seed, "seed", kind)),
            None,
        )
    raise ValueError(f"unknown generator kind: {kind!r} (expected one of {', '.join(GENERATOR_KINDS)})")


def _require(value, name: str, kind: str):
    if value is None:
        raise ValueError(f"generator {kind!r} requires parameter {name!r}")
    return value
