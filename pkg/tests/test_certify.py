import itertools
import random

import pytest
from hypothesis import given, settings

from brooks_color.certify import (
    chromatic_number_bruteforce,
    colors_used,
    dsatur_baseline,
    exists_k_coloring_bruteforce,
    verify_coloring,
    verify_obstruction,
)
from brooks_color.generate import GenSpec, GenSpecError, generate, random_regular_graph, sub_seed
from brooks_color.graph import from_edge_list
from brooks_color.outcome import Clique, ContractError, OddCycle

from conftest import complete, graphs, k4_minus


def enumerate_colorings(g, k):
    """Independent of the backtracking oracle: plain product over all colorings."""
    return any(
        all(c[u] != c[v] for u, v in g.edges())
        for c in itertools.product(range(k), repeat=g.n)
    )


class TestVerifiers:
    def test_coloring(self, c6, k4):
        assert verify_coloring(c6, [0, 1, 0, 1, 0, 1], 2)
        assert not verify_coloring(k4, [0, 1, 2, 2], 3)

    def test_coloring_budget_rule(self, c6):
        assert not verify_coloring(c6, [0, 1, 0, 1, 0, 2], 2)
        assert not verify_coloring(c6, [0, 1, 0, 1, 0, -1], 2)
        assert not verify_coloring(c6, [0, 1, 0, 1, 0], 2)

    def test_clique(self, k4):
        assert verify_obstruction(k4, Clique((0, 1, 2, 3)), 3)
        assert not verify_obstruction(k4_minus(2, 3), Clique((0, 1, 2, 3)), 3)
        assert not verify_obstruction(k4, Clique((0, 1, 2)), 3)
        assert not verify_obstruction(k4, Clique((0, 1, 2, 3)), 4)

    def test_odd_cycle(self, c5):
        assert verify_obstruction(c5, OddCycle((0, 1, 2, 3, 4)), 2)
        assert not verify_obstruction(c5, OddCycle((0, 1, 2, 3, 4)), 3)

    def test_odd_cycle_with_chord_rejected(self, c5):
        assert not verify_obstruction(c5.with_edge(0, 2), OddCycle((0, 1, 2, 3, 4)), 2)

    def test_malformed_cycles_rejected(self, c6, k4):
        assert not verify_obstruction(c6, OddCycle((0, 1, 2, 3, 4, 5)), 2)
        assert not verify_obstruction(k4, OddCycle((0, 1, 0)), 2)
        assert not verify_obstruction(k4, OddCycle((0, 1, 9)), 2)
        assert not verify_obstruction(from_edge_list(3, [(0, 1), (1, 2)]), OddCycle((0, 1, 2)), 2)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=7))
    def test_certificates_imply_uncolorable(self, g):
        for size in range(3, g.n + 1):
            for vs in itertools.combinations(range(g.n), size):
                if verify_obstruction(g, Clique(vs), size - 1):
                    assert not exists_k_coloring_bruteforce(g, size - 1)
                if verify_obstruction(g, OddCycle(vs), 2):
                    assert not exists_k_coloring_bruteforce(g, 2)


class TestBruteForce:
    def test_examples(self, c5, k4):
        assert not exists_k_coloring_bruteforce(c5, 2)
        assert exists_k_coloring_bruteforce(c5, 3)
        assert not exists_k_coloring_bruteforce(k4, 3)

    def test_chromatic_numbers(self, k4, petersen):
        assert chromatic_number_bruteforce(k4) == 4
        assert chromatic_number_bruteforce(petersen) == 3
        assert chromatic_number_bruteforce(from_edge_list(5, [])) == 1
        assert chromatic_number_bruteforce(from_edge_list(0, [])) == 0

    def test_guard(self):
        with pytest.raises(ContractError):
            exists_k_coloring_bruteforce(from_edge_list(17, []), 2)
        with pytest.raises(ContractError):
            chromatic_number_bruteforce(from_edge_list(17, []))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=6))
    def test_matches_enumeration(self, g):
        for k in range(0, 4):
            assert exists_k_coloring_bruteforce(g, k) == enumerate_colorings(g, k)


class TestDsatur:
    def test_examples(self, c5, k4):
        assert colors_used(dsatur_baseline(c5)) == 3
        assert colors_used(dsatur_baseline(k4)) == 4
        assert colors_used(dsatur_baseline(from_edge_list(3, []))) == 1

    @given(graphs(max_n=8))
    def test_proper_and_never_below_chromatic(self, g):
        c = dsatur_baseline(g)
        assert verify_coloring(g, c, max(g.n, 1))
        if g.n:
            assert colors_used(c) >= chromatic_number_bruteforce(g)


class TestGenerate:
    def test_complete(self):
        assert generate(GenSpec("complete", 4)) == complete(4)

    def test_cycle(self):
        assert generate(GenSpec("cycle", 5)).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_petersen_is_cubic_and_triangle_free(self):
        g = generate(GenSpec("petersen", 10))
        assert g.m == 15 and all(g.degree(v) == 3 for v in range(10))
        assert not any(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
                       for a, b, c in itertools.combinations(range(10), 3))

    def test_regular_deterministic(self):
        spec = GenSpec("regular", 10, d=3, seed=1)
        g = generate(spec)
        assert all(g.degree(v) == 3 for v in range(10))
        assert generate(spec) == g
        assert generate(GenSpec("regular", 10, d=3, seed=2)) != g

    @pytest.mark.parametrize("n, d", [(11, 6), (12, 9), (50, 7), (1000, 3)])
    def test_regular_degrees(self, n, d):
        g = random_regular_graph(n, d, 3)
        assert all(g.degree(v) == d for v in range(n))

    def test_gnp_deterministic_and_bounds(self):
        a = generate(GenSpec("gnp", 12, p=0.5, seed=9))
        assert a == generate(GenSpec("gnp", 12, p=0.5, seed=9))
        assert generate(GenSpec("gnp", 12, p=0.0, seed=9)).m == 0
        assert generate(GenSpec("gnp", 12, p=1.0, seed=9)) == complete(12)

    def test_gnp_frozen_draw_order(self):
        # pins the documented draw order so corpora stay reproducible
        rng = random.Random(0)
        expected = [(u, v) for u in range(6) for v in range(u + 1, 6) if rng.random() < 0.5]
        assert generate(GenSpec("gnp", 6, p=0.5, seed=0)).edges() == expected

    def test_sub_seed_wraps(self):
        assert 0 <= sub_seed(2**64 - 1, 3) < 2**64

    @pytest.mark.parametrize(
        "spec",
        [
            GenSpec("regular", 5, d=3),
            GenSpec("regular", 4, d=4),
            GenSpec("regular", 4),
            GenSpec("gnp", 4, p=1.5),
            GenSpec("gnp", 4),
            GenSpec("star", 4),
            GenSpec("cycle", -1),
            GenSpec("petersen", 9),
            GenSpec("complete", 3, seed=-1),
        ],
    )
    def test_invalid(self, spec):
        with pytest.raises(GenSpecError):
            generate(spec)
