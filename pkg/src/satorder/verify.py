"""Cross-validation harness: exhaustive and seeded-random campaigns.

Every poset that passes through here is judged four ways -- definitional
enumeration, the canonical-pair checker, the literal bouquet-pair quantifier,
and the fan criterion -- and the harness insists they agree.  Non-saturated
posets additionally have both witness constructions run back to back, and
two-plus-two-free posets must verify as saturated interval orders.  A
campaign aggregates per-size counts and collects every disagreement; reports
render to a line-oriented text summary and a canonical JSON form, both
byte-identical across runs with the same configuration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import TooLarge
from .interval import interval_representation, is_interval_order, verify_interval_representation
from .posets import Poset, random_poset
from .representations import is_parsimonious, is_saturated_oracle, is_set_representation, new_point_map
from .saturation import (
    are_parallel,
    check_fan_criterion,
    is_saturated_exhaustive,
    is_saturated_fast,
    merging_representation,
    skewly_topping,
    witness_bouquets_from_rep,
)

ENUMERATION_GUARD = 6
CAMPAIGN_N_CAP = 8


def all_posets(n: int) -> Iterator[Poset]:
    """Every naturally labeled n-element poset, i.e. every transitively
    closed subset of the numerically increasing strict pairs.

    Covers every isomorphism class at least once, since every finite poset
    has a linear extension.  Guarded at n <= 6.
    """
    if n > ENUMERATION_GUARD:
        raise TooLarge(f"poset enumeration guarded at n <= {ENUMERATION_GUARD}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    npairs = len(pairs)
    for mask in range(1 << npairs):
        rows = [0] * n
        for k in range(npairs):
            if mask >> k & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
        if all(not (rows[b] & ~rows[a]) for a in range(n) for b in range(n) if rows[a] >> b & 1):
            chosen = [pairs[k] for k in range(npairs) if mask >> k & 1]
            yield Poset.from_strict_pairs(n, chosen)


@dataclass(frozen=True)
class CrossValidation:
    """All verdicts for one poset, plus the derived consistency flags."""

    poset: Poset
    oracle: bool
    fast: bool
    exhaustive: bool
    fan_criterion: bool
    has_two_plus_two: bool
    is_interval: bool
    round_trip_ok: bool | None
    interval_ok: bool | None

    @property
    def agree(self) -> bool:
        return self.oracle == self.fast == self.exhaustive == self.fan_criterion

    def failures(self) -> list[str]:
        out = []
        if not self.agree:
            out.append("verdict-disagreement")
        if self.round_trip_ok is False:
            out.append("round-trip")
        if self.interval_ok is False:
            out.append("interval-representation")
        if self.is_interval and not self.fast:
            out.append("interval-not-saturated")
        return out


def cross_validate(P: Poset) -> CrossValidation:
    """Run every checker on one poset and exercise the witness round trip."""
    oracle = is_saturated_oracle(P)
    fast = is_saturated_fast(P)
    exhaustive = is_saturated_exhaustive(P)
    fan = check_fan_criterion(P)
    round_trip_ok = None if fast.saturated else _round_trip(P, fast)
    interval = is_interval_order(P)
    interval_ok = None
    if interval:
        interval_ok = verify_interval_representation(P, interval_representation(P))
    return CrossValidation(
        poset=P,
        oracle=oracle.saturated,
        fast=fast.saturated,
        exhaustive=exhaustive.saturated,
        fan_criterion=fan,
        has_two_plus_two=P.find_two_two() is not None,
        is_interval=interval,
        round_trip_ok=round_trip_ok,
        interval_ok=interval_ok,
    )


def _round_trip(P: Poset, verdict) -> bool:
    """Merge the fast witness into a representation, then read a witness back."""
    b0, b1 = verdict.witness_bouquets
    rep = merging_representation(P, b0, b1)
    if not is_set_representation(P, rep) or not is_parsimonious(P, rep):
        return False
    npm = new_point_map(P, rep)
    if npm.values[b0.top] != npm.values[b1.top]:
        return False
    w0, w1 = witness_bouquets_from_rep(P, rep, b0.top, b1.top)
    return are_parallel(P, w0, w1) and skewly_topping(P, w0, w1) is None


# -- campaigns ----------------------------------------------------------------


@dataclass(frozen=True)
class CampaignConfig:
    n_max: int
    exhaustive_limit: int = 5
    samples_per_n: int = 100
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.n_max <= CAMPAIGN_N_CAP:
            raise ValueError(f"n_max must lie in [0, {CAMPAIGN_N_CAP}]")
        if not 0 <= self.exhaustive_limit <= min(self.n_max, ENUMERATION_GUARD):
            raise ValueError("exhaustive_limit must lie in [0, min(n_max, 6)]")
        if self.samples_per_n < 0:
            raise ValueError("samples_per_n must be >= 0")


@dataclass(frozen=True)
class CampaignRow:
    n: int
    mode: str
    posets: int
    saturated: int
    interval_orders: int
    saturated_with_two_plus_two: int


@dataclass(frozen=True)
class CampaignMismatch:
    n: int
    strict: tuple[tuple[int, int], ...]
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    rows: tuple[CampaignRow, ...]
    mismatches: tuple[CampaignMismatch, ...]

    def to_text(self) -> str:
        c = self.config
        lines = [
            f"campaign n_max={c.n_max} exhaustive_limit={c.exhaustive_limit} "
            f"samples_per_n={c.samples_per_n} seed={c.seed}"
        ]
        for r in self.rows:
            lines.append(
                f"n={r.n} mode={r.mode} posets={r.posets} saturated={r.saturated} "
                f"interval_orders={r.interval_orders} "
                f"saturated_with_two_plus_two={r.saturated_with_two_plus_two}"
            )
        lines.append(f"mismatches={len(self.mismatches)}")
        for m in self.mismatches:
            pairs = ";".join(f"{i}<{j}" for i, j in m.strict)
            lines.append(f"mismatch n={m.n} strict=[{pairs}] reasons={','.join(m.reasons)}")
        return "\n".join(lines) + "\n"

    def to_json_text(self) -> str:
        payload = {
            "config": {
                "n_max": self.config.n_max,
                "exhaustive_limit": self.config.exhaustive_limit,
                "samples_per_n": self.config.samples_per_n,
                "seed": self.config.seed,
            },
            "rows": [
                {
                    "n": r.n,
                    "mode": r.mode,
                    "posets": r.posets,
                    "saturated": r.saturated,
                    "interval_orders": r.interval_orders,
                    "saturated_with_two_plus_two": r.saturated_with_two_plus_two,
                }
                for r in self.rows
            ],
            "mismatches": [
                {"n": m.n, "strict": [list(p) for p in m.strict], "reasons": list(m.reasons)}
                for m in self.mismatches
            ],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def sample_seed(base_seed: int, n: int, index: int) -> int:
    """Per-sample seed derivation; arithmetic only, so replay never depends
    on interpreter hashing."""
    return base_seed * 1_000_003 + n * 10_007 + index


def sample_density(index: int) -> float:
    """Cycle densities 0.1 .. 0.9 so sparse and dense regimes both appear."""
    return ((index % 9) + 1) / 10


def campaign_posets(config: CampaignConfig, n: int) -> Iterator[Poset]:
    """The poset stream a campaign examines at size n: exhaustive below the
    limit, seeded random above."""
    if n <= config.exhaustive_limit:
        yield from all_posets(n)
    else:
        for i in range(config.samples_per_n):
            yield random_poset(n, sample_density(i), sample_seed(config.seed, n, i))


def campaign(config: CampaignConfig) -> CampaignReport:
    """Cross-validate every poset the config describes; deterministic."""
    rows = []
    mismatches = []
    for n in range(config.n_max + 1):
        mode = "exhaustive" if n <= config.exhaustive_limit else "random"
        posets = saturated = intervals = topped = 0
        for P in campaign_posets(config, n):
            rec = cross_validate(P)
            posets += 1
            if rec.fast:
                saturated += 1
                if rec.has_two_plus_two:
                    topped += 1
            if rec.is_interval:
                intervals += 1
            reasons = rec.failures()
            if reasons:
                mismatches.append(CampaignMismatch(n, tuple(P.hasse), tuple(reasons)))
        rows.append(CampaignRow(n, mode, posets, saturated, intervals, topped))
    return CampaignReport(config, tuple(rows), tuple(mismatches))
