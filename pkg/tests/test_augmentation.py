"""Uncrossed rays, ray ranges and maximal augmentation."""

import numpy as np
import pytest

from src.augmentation.maximal import (augment_maximal, greedy_maximal, maximal_connected_fast,
                                      star_plus_tree)
from src.augmentation.ranges import fr_ranges
from src.augmentation.rays import uncrossed_rays, uncrossed_rays_brute, uncrossed_rays_fast
from src.config import Settings, set_settings
from src.drawing.predicates import crossing_pairs
from src.drawing.rotation import Edge
from src.evaluation.properties import range_violations, ray_violations, sample_plane_subgraph
from src.exceptions import PreconditionError
from src.generators.points import gen_convex, gen_perturbed, gen_random
from src.structure.maximality import is_maximal, lower_bound
from src.structure.plane import PlaneSubgraph, is_plane


def _rays(*targets, v=1):
    return {Edge(v, t) for t in targets}


def _connected_plane_subgraphs(d):
    """Every nonempty, connected plane subgraph of d."""
    edges = d.edges()
    index = {e: i for i, e in enumerate(edges)}
    conflict = [0] * len(edges)
    for e, f in crossing_pairs(d):
        conflict[index[e]] |= 1 << index[f]
        conflict[index[f]] |= 1 << index[e]
    for mask in range(1, 1 << len(edges)):
        chosen = [i for i in range(len(edges)) if mask >> i & 1]
        if any(conflict[i] & mask for i in chosen):
            continue
        F = PlaneSubgraph(d, [edges[i] for i in chosen], check=False)
        if F.is_connected():
            yield F


class TestUncrossedRays:

    def test_path_below_vertex(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 3), Edge(3, 4), Edge(4, 5)])
        assert uncrossed_rays_brute(convex6, F, 1) == _rays(2, 3, 4, 5)
        assert uncrossed_rays_fast(convex6, F, 1) == _rays(2, 3, 4, 5)

    def test_single_edge(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 6)])
        assert uncrossed_rays_fast(convex6, F, 1) == _rays(2, 6)

    def test_blocked_ray_dropped(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 6), Edge(3, 6)])
        assert uncrossed_rays_brute(convex6, F, 1) == _rays(2, 6)
        assert uncrossed_rays_fast(convex6, F, 1) == _rays(2, 6)

    def test_vertex_on_the_subgraph(self, hull6):
        d = hull6.drawing
        assert uncrossed_rays_fast(d, hull6, 1) == _rays(2, 3, 4, 5, 6)
        assert uncrossed_rays_brute(d, hull6, 1) == _rays(2, 3, 4, 5, 6)

    def test_fast_needs_connected_subgraph(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(1, 2), Edge(4, 5)])
        with pytest.raises(PreconditionError):
            uncrossed_rays_fast(convex6, F, 3)
        assert uncrossed_rays(convex6, F, 3) == uncrossed_rays_brute(convex6, F, 3)

    def test_debug_oracle_agrees(self, random9):
        set_settings(Settings(debug_oracle=True))
        F = greedy_maximal(random9)
        for v in random9.vertices:
            uncrossed_rays_fast(random9, F, v)

    @pytest.mark.parametrize("seed", range(6))
    def test_fast_matches_brute_on_random_subgraphs(self, seed):
        d = gen_random(8, seed)
        rng = np.random.default_rng(seed)
        for size in (1, 3, 6, 10):
            F = sample_plane_subgraph(d, rng, size, connected=True)
            assert F.is_connected()
            assert ray_violations(d, F) == []

    def test_fast_matches_brute_on_moved_inner_point(self):
        d = gen_perturbed(7, seed=4, inner=True)
        F = PlaneSubgraph(d, d.star(7))
        assert ray_violations(d, F) == []

    def test_wedge_rays_start_after_the_bounding_edge(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(1, 2), Edge(1, 3), Edge(1, 4)])
        expected = {Edge(1, 3), Edge(2, 3), Edge(3, 4)}
        assert uncrossed_rays_brute(convex6, F, 3) == expected
        assert uncrossed_rays_fast(convex6, F, 3) == expected

    @pytest.mark.parametrize("d", [gen_convex(5), gen_random(5, seed=2),
                                   gen_perturbed(5, seed=1, inner=True)],
                             ids=["convex", "random", "perturbed"])
    def test_fast_matches_brute_on_every_connected_subgraph(self, d):
        for F in _connected_plane_subgraphs(d):
            assert ray_violations(d, F) == [], F.edges

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [gen_convex(6), gen_random(6, seed=4)], ids=["convex", "random"])
    def test_fast_matches_brute_on_every_connected_subgraph_six(self, d):
        for F in _connected_plane_subgraphs(d):
            assert ray_violations(d, F) == [], F.edges


class TestRanges:

    def test_single_edge_ranges(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 6)])
        ranges = fr_ranges(convex6, F, 1, 4)
        assert (ranges.e, ranges.p, ranges.q) == (Edge(2, 6), 6, 2)
        assert ranges.cw == [Edge(1, 5), Edge(1, 6)]
        assert ranges.ccw == [Edge(1, 3), Edge(1, 2)]

    def test_uncrossed_probe_rejected(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 6)])
        with pytest.raises(PreconditionError):
            fr_ranges(convex6, F, 1, 2)

    def test_disconnected_subgraph(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(2, 4), Edge(5, 6)])
        assert range_violations(convex6, F) == []

    @pytest.mark.parametrize("seed", range(6))
    def test_each_range_holds_an_uncrossed_ray(self, seed):
        d = gen_random(8, seed)
        rng = np.random.default_rng(100 + seed)
        for size in (2, 4, 8):
            F = sample_plane_subgraph(d, rng, size)
            assert range_violations(d, F) == []


class TestMaximal:

    def test_greedy_on_convex(self, convex6):
        F = greedy_maximal(convex6)
        assert len(F) == 9
        assert is_maximal(F)[0]

    def test_greedy_keeps_seed(self, convex6):
        F = greedy_maximal(convex6, [Edge(2, 5)])
        assert Edge(2, 5) in F and is_maximal(F)[0]

    def test_greedy_rejects_crossing_seed(self, convex6):
        with pytest.raises(PreconditionError):
            greedy_maximal(convex6, [Edge(1, 4), Edge(2, 5)])

    def test_fast_from_hull(self, hull6):
        F = maximal_connected_fast(hull6.drawing, hull6)
        assert len(F) == 9
        assert set(hull6.edges) <= set(F.edges)
        assert is_maximal(F)[0]

    def test_fast_needs_connected(self, convex6):
        with pytest.raises(PreconditionError):
            maximal_connected_fast(convex6, PlaneSubgraph(convex6, [Edge(1, 2), Edge(4, 5)]))

    def test_augment_dispatch(self, convex6):
        F = augment_maximal(convex6, PlaneSubgraph(convex6, [Edge(1, 2), Edge(4, 5)]))
        assert is_maximal(F)[0]
        assert Edge(4, 5) in F

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_random_outputs_meet_bound(self, n):
        d = gen_random(n, seed=n)
        for F in (greedy_maximal(d), maximal_connected_fast(d, PlaneSubgraph(d, d.star(1)))):
            assert is_maximal(F)[0]
            assert len(F) >= lower_bound(n)

    @pytest.mark.parametrize("seed", range(4))
    def test_fast_single_pass_is_maximal(self, seed):
        d = gen_random(13, seed)
        for v in (1, 7):
            F = maximal_connected_fast(d, PlaneSubgraph(d, d.star(v)))
            assert is_maximal(F)[0]
            assert is_plane(d, F.edges)

    @pytest.mark.parametrize("d", [gen_convex(7), gen_random(9, seed=5)], ids=["convex", "random"])
    def test_star_plus_tree(self, d):
        for v in d.vertices:
            F = star_plus_tree(d, v)
            assert len(F) == 2 * d.n - 3
            assert is_plane(d, F.edges)
            assert set(d.star(v)) <= set(F.edges)
