"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest verdicts.  All checks are exact; the only
tolerances are the stated runtime budgets, which are asserted as hard caps.
"""

import time
from itertools import product

import pytest

from satorder.interval import interval_representation, is_interval_order, verify_interval_representation
from satorder.posets import antichain, chain, random_poset, skew_towers, topped_two_two, two_plus_two
from satorder.representations import (
    SetRepresentation,
    adds_one_new_point_each,
    every_point_introduced,
    is_parsimonious,
    is_saturated_oracle,
    is_set_representation,
    new_point_map,
    rep_from_new_points,
)
from satorder.saturation import (
    are_parallel,
    check_fan_criterion,
    is_saturated_exhaustive,
    is_saturated_fast,
    merging_representation,
    skewly_topping,
    witness_bouquets_from_rep,
)
from satorder.verify import CampaignConfig, all_posets, campaign, sample_density, sample_seed

CORPUS_MAX = 5
RANDOM_SIZES = (6, 7)
RANDOM_SAMPLES = 1000
RANDOM_BASE_SEED = 20240314


def report(criterion: int, ok: bool, detail: str) -> None:
    print(f"\n[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


@pytest.fixture(scope="module")
def corpus_records():
    """Every naturally labeled poset with n <= 5, with all four verdicts."""
    records = {}
    for n in range(CORPUS_MAX + 1):
        rows = []
        for P in all_posets(n):
            rows.append(
                (
                    P,
                    is_saturated_oracle(P),
                    is_saturated_fast(P),
                    is_saturated_exhaustive(P),
                    check_fan_criterion(P),
                )
            )
        records[n] = rows
    return records


def run_round_trip(P, fast_verdict) -> bool:
    b0, b1 = fast_verdict.witness_bouquets
    rep = merging_representation(P, b0, b1)
    if not is_set_representation(P, rep) or not is_parsimonious(P, rep):
        return False
    npm = new_point_map(P, rep)
    if npm.values[b0.top] != npm.values[b1.top]:
        return False
    w0, w1 = witness_bouquets_from_rep(P, rep, b0.top, b1.top)
    return are_parallel(P, w0, w1) and skewly_topping(P, w0, w1) is None


def test_criterion_1_checkers_agree_on_full_corpus(corpus_records):
    start = time.monotonic()
    counts = {}
    disagreements = 0
    for n, rows in corpus_records.items():
        counts[n] = len(rows)
        for _, oracle, fast, exhaustive, _ in rows:
            if not (oracle.saturated == fast.saturated == exhaustive.saturated):
                disagreements += 1
    elapsed = time.monotonic() - start
    assert counts[2] == 2 and counts[3] == 7
    ok = disagreements == 0 and elapsed < 120
    report(
        1,
        ok,
        f"oracle=fast=exhaustive on all posets per n {counts} "
        f"({disagreements} disagreements, {elapsed:.1f}s)",
    )


def test_criterion_2_fan_criterion_agrees(corpus_records):
    disagreements = sum(
        1
        for rows in corpus_records.values()
        for _, _, _, exhaustive, fan in rows
        if fan != exhaustive.saturated
    )
    report(2, disagreements == 0, f"fan criterion matches bouquet verdict ({disagreements} disagreements)")


def test_criterion_3_witness_round_trips(corpus_records):
    failures = 0
    non_saturated = 0
    for rows in corpus_records.values():
        for P, _, fast, _, _ in rows:
            if fast.saturated:
                continue
            non_saturated += 1
            if not run_round_trip(P, fast):
                failures += 1
    report(
        3,
        failures == 0 and non_saturated > 0,
        f"merge-then-extract round trip on {non_saturated} non-saturated posets ({failures} failures)",
    )


def test_criterion_4_parsimonious_reps_have_composed_form():
    start = time.monotonic()
    checked = parsimonious = 0
    for n in range(5):
        # Bucket every injective set-valued map by its proper-containment
        # relation; a map is a set representation of P exactly when its
        # bucket key equals P's strict relation.
        buckets: dict[int, list[tuple[int, ...]]] = {}
        off_diagonal = [(p, q) for p in range(n) for q in range(n) if p != q]
        for masks in product(range(1 << n), repeat=n):
            if len(set(masks)) != n:
                continue
            key = 0
            for bit, (p, q) in enumerate(off_diagonal):
                if masks[p] != masks[q] and masks[p] & ~masks[q] == 0:
                    key |= 1 << bit
            buckets.setdefault(key, []).append(masks)
        for P in all_posets(n):
            key = 0
            for bit, (p, q) in enumerate(off_diagonal):
                if P.lt(p, q):
                    key |= 1 << bit
            for masks in buckets.get(key, []):
                rep = SetRepresentation.of(
                    n, [{i for i in range(n) if m >> i & 1} for m in masks]
                )
                assert is_set_representation(P, rep)
                checked += 1
                clause_one = adds_one_new_point_each(P, rep)
                if clause_one:
                    # clause two comes for free on finite set representations
                    assert every_point_introduced(P, rep), (n, masks)
                if is_parsimonious(P, rep):
                    parsimonious += 1
                    npm = new_point_map(P, rep)
                    composed = rep_from_new_points(P, npm, ground_size=n)
                    assert composed.sets == rep.sets, (n, masks)
    elapsed = time.monotonic() - start
    ok = elapsed < 60 and parsimonious > 0
    report(
        4,
        ok,
        f"all set-valued maps for n<=4: {checked} set representations, "
        f"{parsimonious} parsimonious, all in composed form; clause two implied "
        f"({elapsed:.1f}s)",
    )


def test_criterion_5_named_fixtures():
    tpt = two_plus_two()
    assert not is_saturated_fast(tpt).saturated
    assert not is_saturated_oracle(tpt).saturated
    assert not is_interval_order(tpt)

    topped = topped_two_two()
    assert is_saturated_fast(topped).saturated
    assert is_saturated_oracle(topped).saturated
    assert topped.find_two_two() is not None

    for n in range(8):
        assert is_saturated_fast(chain(n)).saturated
        assert is_saturated_fast(antichain(n)).saturated
        assert is_saturated_oracle(chain(n)).saturated
        assert is_saturated_oracle(antichain(n)).saturated

    tower_sizes = []
    for k in (1, 2, 3):
        P = skew_towers(k)
        tower_sizes.append(P.n)
        assert is_saturated_exhaustive(P).saturated

    report(
        5,
        True,
        "two-plus-two not saturated/not interval; topped variant saturated with "
        f"the pattern; chains and antichains to n=7; towers of sizes {tower_sizes} "
        "saturated exhaustively",
    )


def test_criterion_6_interval_implies_saturated(corpus_records):
    failures = 0
    interval_count = 0
    for rows in corpus_records.values():
        for P, _, fast, _, _ in rows:
            if not is_interval_order(P):
                continue
            interval_count += 1
            if not fast.saturated:
                failures += 1
            if not verify_interval_representation(P, interval_representation(P)):
                failures += 1
    report(
        6,
        failures == 0,
        f"{interval_count} pattern-free posets: all saturated, all representations verified "
        f"({failures} failures)",
    )


def test_criterion_7_randomized_extension():
    start = time.monotonic()
    failures = 0
    examined = 0
    for n in RANDOM_SIZES:
        for i in range(RANDOM_SAMPLES):
            P = random_poset(n, sample_density(i), sample_seed(RANDOM_BASE_SEED, n, i))
            examined += 1
            oracle = is_saturated_oracle(P)
            fast = is_saturated_fast(P)
            exhaustive = is_saturated_exhaustive(P)
            fan = check_fan_criterion(P)
            if not (oracle.saturated == fast.saturated == exhaustive.saturated == fan):
                failures += 1
                continue
            if not fast.saturated and not run_round_trip(P, fast):
                failures += 1
                continue
            if is_interval_order(P):
                if not fast.saturated:
                    failures += 1
                    continue
                if not verify_interval_representation(P, interval_representation(P)):
                    failures += 1
    elapsed = time.monotonic() - start
    ok = failures == 0 and elapsed < 600
    report(
        7,
        ok,
        f"{examined} seeded posets at n=6,7: checkers, round trips and interval "
        f"checks all agree ({failures} failures, {elapsed:.1f}s)",
    )


def test_criterion_8_campaign_determinism():
    configs = (
        CampaignConfig(n_max=5, exhaustive_limit=5, samples_per_n=50, seed=123),
        CampaignConfig(n_max=7, exhaustive_limit=5, samples_per_n=25, seed=6021023),
    )
    stable = True
    for config in configs:
        first = campaign(config)
        second = campaign(config)
        if first.to_text().encode() != second.to_text().encode():
            stable = False
        if first.to_json_text().encode() != second.to_json_text().encode():
            stable = False
        if first.mismatches or second.mismatches:
            stable = False
    report(8, stable, f"{len(configs)} campaign configs re-run byte-identically with no mismatches")
