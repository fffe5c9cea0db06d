"""Conflict graph, circle DP, face augmentation and branch and bound."""

from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from src.augmentation.maximal import star_plus_tree
from src.drawing.rotation import Edge
from src.drawing.transform import mirror, relabel
from src.exceptions import LimitExceededError, PreconditionError
from src.generators.points import gen_convex, gen_perturbed, gen_random
from src.optimization.conflict import build_conflict_graph
from src.optimization.exact import exact_max, maximum_independent_set
from src.optimization.face_dp import face_chords, max_noncrossing_chords, maximize_connected
from src.structure.maximality import is_maximal
from src.structure.plane import PlaneSubgraph


def _interleave(a, b):
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def _brute_chords(chords):
    chords = list(chords)
    for size in range(len(chords), 0, -1):
        for subset in combinations(chords, size):
            if not any(_interleave(a, b) for a, b in combinations(subset, 2)):
                return size
    return 0


class TestConflictGraph:

    def test_convex_five(self, convex5):
        graph = build_conflict_graph(convex5)
        assert graph.number_of_nodes() == 10
        assert graph.number_of_edges() == 5
        assert graph.has_edge(Edge(1, 3), Edge(2, 4))


class TestCircleDP:

    def test_hexagon_diagonals(self):
        chords = [(i, j) for i, j in combinations(range(6), 2) if 2 <= j - i <= 4 and (i, j) != (0, 5)]
        assert len(max_noncrossing_chords(6, chords)) == 3

    def test_two_interleaving_chords(self):
        assert max_noncrossing_chords(4, [(0, 2), (1, 3)]) in ([(0, 2)], [(1, 3)])

    def test_small_polygons(self):
        assert max_noncrossing_chords(3, [(0, 2)]) == []
        assert max_noncrossing_chords(5, []) == []

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        k = 7
        diagonals = [(i, j) for i, j in combinations(range(k), 2)
                     if j - i >= 2 and (i, j) != (0, k - 1)]
        chosen = [c for c in diagonals if rng.random() < 0.5]
        result = max_noncrossing_chords(k, chosen)
        assert set(result) <= set(chosen)
        assert not any(_interleave(a, b) for a, b in combinations(result, 2))
        assert len(result) == _brute_chords(chosen)


class TestFaceAugmentation:

    def test_hull_of_convex_hexagon(self, convex6, hull6):
        chords = face_chords(hull6)
        assert sorted(len(c) for c in chords.values()) == [0, 9]
        F = maximize_connected(convex6, hull6)
        assert len(F) == 9
        assert is_maximal(F)[0]

    def test_needs_spanning_connected(self, convex6):
        with pytest.raises(PreconditionError):
            maximize_connected(convex6, PlaneSubgraph(convex6, [Edge(1, 2), Edge(2, 3)]))

    @pytest.mark.parametrize("d", [gen_random(7, seed=1), gen_random(8, seed=2),
                                   gen_perturbed(7, seed=3, inner=True)],
                             ids=["random7", "random8", "inner7"])
    def test_agrees_with_exact_search(self, d):
        for v in (1, d.n):
            F = star_plus_tree(d, v)
            assert len(maximize_connected(d, F)) == len(exact_max(d, F.edges))


class TestBranchAndBound:

    def test_small_graphs(self):
        assert len(maximum_independent_set(nx.cycle_graph(5))) == 2
        assert len(maximum_independent_set(nx.petersen_graph())) == 4
        assert len(maximum_independent_set(nx.empty_graph(4))) == 4

    def test_forced_nodes(self):
        graph = nx.path_graph(3)
        assert maximum_independent_set(graph, forced=[1]) == {1}
        with pytest.raises(PreconditionError):
            maximum_independent_set(graph, forced=[0, 1])
        with pytest.raises(PreconditionError):
            maximum_independent_set(graph, forced=[7])

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_convex_maximum_is_triangulation(self, n):
        F = exact_max(gen_convex(n))
        assert len(F) == 2 * n - 3

    def test_must_include(self, convex6):
        F = exact_max(convex6, must_include=[Edge(2, 5)])
        assert Edge(2, 5) in F and len(F) == 9

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            exact_max(gen_convex(13))
        with pytest.raises(LimitExceededError):
            exact_max(gen_convex(6), limit_n=5)

    def test_random_result_is_maximal(self, random9):
        F = exact_max(random9)
        assert is_maximal(F)[0]

    @pytest.mark.parametrize("seed", range(3))
    def test_invariant_under_relabeling(self, seed):
        d = gen_random(8, seed)
        size = len(exact_max(d))
        rng = np.random.default_rng(seed)
        for _ in range(3):
            perm = [int(x) + 1 for x in rng.permutation(d.n)]
            moved = relabel(d, perm)
            F = exact_max(moved)
            assert len(F) == size
            # the maximum maps back onto a plane subgraph of the original
            back = {x: i for i, x in enumerate(perm, start=1)}
            assert len(PlaneSubgraph(d, [Edge(back[e.u], back[e.v]) for e in F.edges])) == size
        assert len(exact_max(mirror(d))) == size
