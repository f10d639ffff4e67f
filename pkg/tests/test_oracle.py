"""Tests for the exhaustive search and the conjecture checker."""

import math

import pytest

from seatmatch import (
    LengthList,
    check_conjecture,
    check_coprime_theorem,
    count_solutions,
    enumerate_lists,
    oracle_solve,
)


class TestOracleSolve:
    def test_finds_known_matching(self):
        lst = LengthList.parse("1^5,7^4", 9)
        found, stats = oracle_solve(lst, 18)
        assert found is not None
        assert found.length_list() == lst
        assert stats.solutions_found == 1
        assert stats.nodes_expanded > 0 and stats.wall_time >= 0

    def test_exhausts_on_infeasible(self):
        found, stats = oracle_solve(LengthList.parse("2^3", 3), 6)
        assert found is None and stats.solutions_found == 0

    def test_deterministic(self):
        lst = LengthList.parse("1^2,2^2,3^2", 6)
        a, _ = oracle_solve(lst, 12)
        b, _ = oracle_solve(lst, 12)
        assert a == b

    def test_pruned_search_matches_prunefree_enumeration(self):
        # oracle_solve carries symmetry and parity-propagation pruning;
        # count_solutions carries neither, so exhaustive agreement over every
        # list with v <= 12 validates both reductions
        for n in range(1, 7):
            import itertools
            for combo in itertools.combinations_with_replacement(range(1, n + 1), n):
                lst = LengthList.from_lengths(combo, n)
                with_sym, _ = oracle_solve(lst, 2 * n, use_symmetry=True)
                without, _ = oracle_solve(lst, 2 * n, use_symmetry=False)
                assert (with_sym is None) == (without is None), lst
                count, _ = count_solutions(lst, 2 * n)
                assert (count > 0) == (with_sym is not None), lst

    def test_odd_order_near_matching(self):
        # K_9 with lengths {1^4}: pair eight vertices, leave one free
        found, _ = oracle_solve(LengthList.from_counts({1: 4}, 4), 9)
        assert found is not None
        assert len(found.edges) == 4
        assert len(found.vertices()) == 8

    def test_rejects_mismatched_list(self):
        with pytest.raises(ValueError):
            oracle_solve(LengthList.parse("1^4", 4), 10)


class TestCountSolutions:
    def test_known_count(self):
        # {1^2, 3} in K_6: rotations of {0,1},{2,5},{3,4}
        count, _ = count_solutions(LengthList.parse("1^2,3", 3), 6)
        assert count == 3

    def test_total_over_all_lists_is_all_matchings(self):
        # summing counts over every list of K_6 gives the number of perfect
        # matchings of K_6: 5!! = 15
        total = sum(count_solutions(lst, 6)[0] for lst in enumerate_lists(3))
        assert total == 15

    def test_requires_even_order(self):
        with pytest.raises(ValueError):
            count_solutions(LengthList.parse("1^4", 4), 9)


class TestEnumerateLists:
    def test_counts(self):
        assert sum(1 for _ in enumerate_lists(4)) == math.comb(7, 4)
        assert sum(1 for _ in enumerate_lists(4, max_value=2)) == 5

    def test_predicate_filters(self):
        odd_only = list(enumerate_lists(3, predicate=lambda lst: all(
            m % 2 for m in lst.support)))
        assert all(all(m % 2 for m in lst.support) for lst in odd_only)
        assert len(odd_only) == 4  # multisets of size 3 over {1, 3}


class TestConjecture:
    def test_small_primes_agree(self):
        for p in (3, 5):
            report = check_conjecture(p)
            assert report.agrees and not report.counterexamples
            assert report.lists_checked == math.comb(2 * p - 2, p)
            assert report.to_dict()["agrees"] is True

    def test_workers_match_serial(self):
        serial = check_conjecture(5)
        parallel = check_conjecture(5, workers=2)
        assert serial == parallel

    def test_coprime_classification(self):
        for n in (4, 5, 6):
            assert check_coprime_theorem(n)
