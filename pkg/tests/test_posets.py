"""Construction, relation queries, covers, two-plus-two search, generators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satorder.errors import CycleDetected
from satorder.posets import (
    Poset,
    TwoTwoWitness,
    antichain,
    chain,
    generate,
    n_poset,
    random_poset,
    skew_towers,
    skew_towers_names,
    topped_two_two,
    two_plus_two,
)


def assert_order_axioms(P: Poset):
    for p in range(P.n):
        assert P.leq(p, p)
        for q in range(P.n):
            if p != q and P.leq(p, q):
                assert not P.leq(q, p)
            for r in range(P.n):
                if P.leq(p, q) and P.leq(q, r):
                    assert P.leq(p, r)


class TestConstruction:
    def test_already_transitive_input_gains_nothing(self, tpt):
        relation = {(p, q) for p in range(4) for q in range(4) if tpt.leq(p, q)}
        assert relation == {(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (2, 3)}

    def test_closure_adds_forced_pair(self, chain3):
        assert chain3.leq(0, 2)

    def test_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            Poset.from_strict_pairs(2, [(0, 1), (1, 0)])

    def test_longer_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            Poset.from_strict_pairs(3, [(0, 1), (1, 2), (2, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(CycleDetected):
            Poset.from_strict_pairs(2, [(0, 0)])

    def test_out_of_range_pair(self):
        with pytest.raises(ValueError):
            Poset.from_strict_pairs(2, [(0, 2)])

    def test_empty_poset(self):
        P = Poset.from_strict_pairs(0, [])
        assert P.n == 0 and P.hasse_edges() == []


class TestQueries:
    def test_leq(self, tpt, chain3):
        assert chain3.leq(0, 2)
        assert not tpt.leq(0, 3)
        assert all(tpt.leq(p, p) for p in range(4))

    def test_comparable(self, tpt, chain3):
        assert not tpt.comparable(1, 2)
        assert tpt.comparable(2, 3)
        assert all(chain3.comparable(p, q) for p in range(3) for q in range(3))

    def test_strict_downset(self, tpt, chain3, anti2):
        assert chain3.strict_downset(2) == {0, 1}
        assert tpt.strict_downset(1) == {0}
        assert anti2.strict_downset(0) == set()

    def test_strict_upset(self, chain3):
        assert chain3.strict_upset(0) == {1, 2}

    def test_incomparable_pairs(self, tpt):
        assert list(tpt.incomparable_pairs()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_linear_extension_prefers_small_indices(self, nposet):
        ext = nposet.linear_extension
        assert sorted(ext) == list(range(4))
        for i, p in enumerate(ext):
            assert all(q in ext[:i] for q in nposet.strict_downset(p))


class TestHasse:
    def test_chain(self, chain3):
        assert chain3.hasse_edges() == [(0, 1), (1, 2)]

    def test_two_plus_two(self, tpt):
        assert tpt.hasse_edges() == [(0, 1), (2, 3)]

    def test_towers_rank_one_covers(self):
        P = skew_towers(1)
        # layout: l0=0, l=1, r0=2, r=3, t0=4
        edges = set(P.hasse_edges())
        assert (2, 3) in edges  # r0 covered by r
        assert (3, 4) in edges  # r covered by t0
        assert edges == {(0, 1), (0, 4), (2, 3), (3, 4)}

    def test_reconstruction_round_trip(self, corpus):
        for n, posets in corpus.items():
            for P in posets:
                assert Poset.from_strict_pairs(n, P.hasse_edges()) == P


def brute_two_two(P: Poset):
    """Independent quadruple scan of the defining disjunction."""
    for a in range(P.n):
        for b in range(P.n):
            for c in range(P.n):
                for d in range(P.n):
                    if P.lt(a, b) and P.lt(c, d) and not P.leq(a, d) and not P.leq(c, b):
                        return (a, b, c, d)
    return None


class TestTwoTwoSearch:
    def test_tpt_is_its_own_witness(self, tpt):
        assert tpt.find_two_two() == TwoTwoWitness(0, 1, 2, 3)

    def test_nposet_is_free(self, nposet):
        assert nposet.find_two_two() is None
        assert brute_two_two(nposet) is None

    def test_chain_is_free(self, chain3):
        assert chain3.find_two_two() is None

    def test_witness_invariants(self, topped):
        w = topped.find_two_two()
        assert w is not None
        assert topped.lt(w.a, w.b) and topped.lt(w.c, w.d)
        assert not topped.leq(w.a, w.d) and not topped.leq(w.c, w.b)

    def test_matches_brute_scan_on_corpus(self, corpus):
        for posets in corpus.values():
            for P in posets:
                assert P.find_two_two() == brute_two_two(P)

    def test_matches_brute_scan_at_six(self):
        from satorder.verify import all_posets

        for P in all_posets(6):
            assert (P.find_two_two() is None) == (brute_two_two(P) is None)


class TestGenerators:
    def test_chain_antichain(self):
        assert chain(4).hasse_edges() == [(0, 1), (1, 2), (2, 3)]
        assert antichain(3).hasse_edges() == []

    def test_n_poset_relations(self, nposet):
        strict = {(p, q) for p in range(4) for q in range(4) if nposet.lt(p, q)}
        assert strict == {(0, 1), (2, 1), (2, 3)}

    def test_topped_two_two_relations(self, topped):
        strict = {(p, q) for p in range(5) for q in range(5) if topped.lt(p, q)}
        assert strict == {(0, 1), (2, 3), (2, 4), (1, 4), (0, 4)}

    def test_towers_size_and_caps(self):
        for k in (1, 2, 3):
            P = skew_towers(k)
            assert P.n == 3 * k + 2
            left_cap = k
            tops = range(2 * k + 2, 3 * k + 2)
            for t in tops:
                assert not P.leq(left_cap, t)
                assert not P.leq(t, left_cap)

    def test_towers_rank_one_exact(self):
        P = skew_towers(1)
        expected = Poset.from_strict_pairs(5, [(0, 1), (2, 3), (3, 4), (0, 4)])
        assert P == expected

    def test_towers_names(self):
        assert skew_towers_names(2) == ("l0", "l1", "l", "r0", "r1", "r", "t0", "t1")

    def test_towers_rejects_zero(self):
        with pytest.raises(ValueError):
            skew_towers(0)

    def test_random_deterministic(self):
        assert random_poset(5, 0.3, seed=1) == random_poset(5, 0.3, seed=1)

    def test_random_seed_sensitivity(self):
        posets = {random_poset(6, 0.5, seed=s) for s in range(20)}
        assert len(posets) > 1

    def test_random_density_extremes(self):
        assert random_poset(5, 0.0, seed=0) == antichain(5)
        assert random_poset(5, 1.0, seed=0) == chain(5)

    def test_generate_dispatch(self):
        P, names = generate("two-plus-two")
        assert P == two_plus_two() and names == ("a", "b", "c", "d")
        P, names = generate("skew-towers", k=2)
        assert P == skew_towers(2) and names == skew_towers_names(2)
        P, names = generate("random", n=5, density=0.3, seed=1)
        assert P == random_poset(5, 0.3, 1) and names is None

    def test_generate_unknown_kind(self):
        with pytest.raises(ValueError):
            generate("zigzag")

    def test_generate_missing_parameter(self):
        with pytest.raises(ValueError):
            generate("chain")

    def test_topped_two_two_layout_doc(self, topped):
        assert topped.leq(0, 4)  # forced by closure


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=9),
    density=st.sampled_from([0.1, 0.25, 0.5, 0.75, 0.9]),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_random_posets_satisfy_axioms(n, density, seed):
    P = random_poset(n, density, seed)
    assert_order_axioms(P)
    assert Poset.from_strict_pairs(P.n, P.hasse_edges()) == P


def test_corpus_satisfies_axioms(corpus):
    for posets in corpus.values():
        for P in posets:
            assert_order_axioms(P)
