"""Point-set drawings, the tight family and the segment gadget."""

import logging

import pytest

from src.drawing.geometry import orientation
from src.drawing.predicates import crosses
from src.drawing.validation import validate
from src.exceptions import PreconditionError
from src.generators.points import gen_convex, gen_perturbed, gen_random, rotation_from_points
from src.generators.seg_reduction import gen_seg_reduction, role_label
from src.generators.segments import (SegmentInstance, crossing_pattern, gen_random_segments,
                                     has_triangular_hull, hull_size, max_disjoint_segments,
                                     triangular_hull, validate_segments)
from src.generators.tight import gen_tight
from src.optimization.exact import exact_max
from src.structure.maximality import is_maximal, lower_bound
from src.structure.plane import PlaneSubgraph

CROSSING_PAIR = SegmentInstance.from_list([[(0.0, 0.0), (4.0, 3.0)], [(0.5, 2.9), (3.7, 0.2)]])
DISJOINT_PAIR = SegmentInstance.from_list([[(0.0, 0.0), (1.0, 3.0)], [(3.0, 0.2), (4.1, 2.7)]])

# three segments, one outer endpoint per corner of the hull triangle
RADIAL = SegmentInstance.from_list(
    [[(0, 10), (0.3, 3)], [(10, -6), (3, -2.2)], [(-10, -6), (-3, -1.7)]])
ONE_CROSSING = SegmentInstance.from_list(
    [[(0, 10), (1.2, -1)], [(10, -6), (-1, 0.8)], [(-10, -6), (-3, -3)]])
CROSSING_PATH = SegmentInstance.from_list(
    [[(0, 10), (1, -4.5)], [(10, -6), (-6, -1)], [(-10, -6), (-3, 2)]])
ALL_CROSSING = SegmentInstance.from_list(
    [[(0, 10), (0.8, -4.5)], [(10, -6), (-5, 1.5)], [(-10, -6), (4, 1)]])
THREE_SEGMENT_PATTERNS = [(RADIAL, 3), (ONE_CROSSING, 2), (CROSSING_PATH, 2), (ALL_CROSSING, 1)]
PATTERN_IDS = ["disjoint", "one-crossing", "path", "triangle"]

# the middle segment pokes out of the hull until the others are stretched
SQUEEZED = SegmentInstance.from_list(
    [[(0, 0.3), (0, 0.8)], [(1.5, 0), (2, -1.2)], [(-1, -0.6), (-2, -1.2)]])


class TestPointDrawings:

    def test_convex_needs_three(self):
        with pytest.raises(PreconditionError):
            gen_convex(2)

    @pytest.mark.parametrize("n", [5, 8, 13])
    def test_perturbed_keeps_convex_rotations(self, n):
        assert gen_perturbed(n, seed=n) == gen_convex(n)

    def test_inner_point_changes_rotations(self):
        d = gen_perturbed(8, seed=1, inner=True)
        assert d != gen_convex(8)
        assert validate(d).ok

    def test_random_is_reproducible(self):
        assert gen_random(10, seed=42) == gen_random(10, seed=42)
        assert gen_random(10, seed=42).coords == gen_random(10, seed=42).coords
        assert validate(gen_random(10, seed=42)).ok

    def test_collinear_points_rejected(self):
        with pytest.raises(PreconditionError):
            rotation_from_points([(0, 0), (1, 1), (2, 2), (0, 1)])
        with pytest.raises(PreconditionError):
            rotation_from_points([(0, 0), (1, 0), (0, 0)])


class TestTightFamily:

    @pytest.mark.parametrize("n, size", [(8, 12), (9, 14), (10, 15), (11, 17)])
    def test_designated_subgraph_meets_bound(self, n, size):
        tight = gen_tight(n)
        assert validate(tight.drawing).ok
        F = PlaneSubgraph(tight.drawing, tight.designated)
        assert len(F) == size == lower_bound(n)
        assert is_maximal(F) == (True, None)

    def test_labels(self):
        tight = gen_tight(9)
        assert tight.labels["u0"] == 1
        assert tight.labels["u0'"] == 2
        assert tight.labels["v1"] == 9

    def test_too_small(self):
        with pytest.raises(PreconditionError):
            gen_tight(7)


class TestSegments:

    def test_max_disjoint(self):
        assert max_disjoint_segments(CROSSING_PAIR) == 1
        assert max_disjoint_segments(DISJOINT_PAIR) == 2

    def test_validation(self):
        validate_segments(CROSSING_PAIR)
        with pytest.raises(PreconditionError):
            validate_segments(SegmentInstance(tuple()))
        with pytest.raises(PreconditionError):
            validate_segments(SegmentInstance(CROSSING_PAIR.segments, k=3))
        with pytest.raises(PreconditionError):
            validate_segments(SegmentInstance.from_list([[(0, 0), (2, 2)], [(1, 1), (3, 0)]]))

    def test_hull_of_crossing_pair(self):
        assert hull_size(CROSSING_PAIR) == 4

    def test_random_segments(self):
        inst = gen_random_segments(4, seed=9)
        assert inst.s == 4
        validate_segments(inst)

    @pytest.mark.parametrize("inst, k", THREE_SEGMENT_PATTERNS, ids=PATTERN_IDS)
    def test_three_segment_patterns(self, inst, k):
        validate_segments(inst)
        assert max_disjoint_segments(inst) == k
        assert has_triangular_hull(inst)
        assert triangular_hull(inst) is inst

    def test_stretch_to_triangular_hull(self):
        assert hull_size(SQUEEZED) == 4
        stretched = triangular_hull(SQUEEZED)
        assert has_triangular_hull(stretched)
        assert crossing_pattern(stretched) == crossing_pattern(SQUEEZED)
        for (a, b), (c, d) in zip(SQUEEZED.segments, stretched.segments):
            assert abs(orientation(a, b, c)) < 1e-9
            assert abs(orientation(a, b, d)) < 1e-9

    def test_two_segments_keep_their_hull(self, caplog):
        with caplog.at_level(logging.WARNING, logger="src.generators.segments"):
            assert triangular_hull(CROSSING_PAIR) is CROSSING_PAIR
        assert "no triangular endpoint hull" in caplog.text


class TestSegmentGadget:

    def test_single_segment(self):
        out = gen_seg_reduction(SegmentInstance.from_list([[(0.0, 0.0), (3.0, 1.0)]]))
        assert out.drawing.n == 4
        assert (out.k, out.target) == (1, 6)
        assert len(exact_max(out.drawing)) == 6

    def test_roles(self):
        assert [role_label(r, 2) for r in "vuwt"] == [5, 6, 7, 8]

    @pytest.mark.parametrize("inst, k", [(CROSSING_PAIR, 1), (DISJOINT_PAIR, 2)],
                             ids=["crossing", "disjoint"])
    def test_two_segments(self, inst, k):
        out = gen_seg_reduction(inst)
        d = out.drawing
        assert d.n == 8
        assert validate(d).ok
        assert out.k == k and out.target == 16 + k
        assert out.roles[role_label("u", 2)] == "u2"
        for e in out.protected_edges:
            assert not any(crosses(d, e, f) for f in d.edges())
        assert not out.hull_triangle
        # two segments never span a triangle, so the target only bounds from above
        assert len(exact_max(d)) <= out.target

    @pytest.mark.parametrize("inst, k", THREE_SEGMENT_PATTERNS, ids=PATTERN_IDS)
    def test_three_segments(self, inst, k):
        out = gen_seg_reduction(inst)
        assert out.drawing.n == 12
        assert out.hull_triangle
        assert (out.k, out.target) == (k, 27 + k)
        assert validate(out.drawing).ok

    def test_stretched_instance_is_used(self):
        out = gen_seg_reduction(SQUEEZED)
        assert out.hull_triangle
        assert out.instance is not None and has_triangular_hull(out.instance)
        assert out.target == 30

    @pytest.mark.slow
    @pytest.mark.parametrize("inst, k", THREE_SEGMENT_PATTERNS, ids=PATTERN_IDS)
    def test_three_segment_maximum_meets_target(self, inst, k):
        out = gen_seg_reduction(inst)
        assert len(exact_max(out.drawing)) == 11 * 3 - 6 + k
