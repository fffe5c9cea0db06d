"""Plane subgraphs, faces, maximality and the structural checkers."""

import networkx as nx
import pytest

from src.augmentation.maximal import greedy_maximal
from src.drawing.rotation import Edge
from src.exceptions import PreconditionError
from src.generators.points import gen_convex, gen_random
from src.structure.connectivity import (adjacent_degree_two, connectivity_report,
                                        degree_two_deletion_ok, essentially_3ec_violation,
                                        separation_pair_violations, separation_pairs,
                                        structure_report)
from src.structure.cycles import compatible_diagonal_count, cycle_diagonals
from src.structure.faces import LocationKind, corner_of, inside_edges, locate_edge, trace_faces
from src.structure.maximality import is_maximal, lower_bound
from src.structure.plane import PlaneSubgraph, find_crossing, is_plane


@pytest.fixture
def fan6(convex6, hull6):
    """Triangulation of the hexagon by the diagonals at vertex 1."""
    return hull6.with_edges([Edge(1, 3), Edge(1, 4), Edge(1, 5)])


class TestPlaneSubgraph:

    def test_crossing_members_rejected(self, convex6):
        with pytest.raises(PreconditionError):
            PlaneSubgraph(convex6, [Edge(1, 4), Edge(2, 5)])
        assert find_crossing(convex6, [Edge(1, 4), Edge(2, 5)]) == (Edge(1, 4), Edge(2, 5))
        assert is_plane(convex6, [Edge(1, 4), Edge(4, 6)])

    def test_unknown_vertex_rejected(self, convex6):
        with pytest.raises(PreconditionError):
            PlaneSubgraph(convex6, [Edge(1, 7)])

    def test_neighbours_follow_rotation(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(4, 2), Edge(4, 6), Edge(4, 1)])
        assert F.neighbors(4) == [6, 1, 2]
        assert F.degree(4) == 3 and F.degree(3) == 0
        assert F.vertices() == [1, 2, 4, 6]

    def test_spanning_and_connected(self, convex6, hull6):
        assert hull6.is_spanning() and hull6.is_connected()
        two_pieces = PlaneSubgraph(convex6, [Edge(1, 2), Edge(4, 5)])
        assert not two_pieces.is_connected()
        assert not PlaneSubgraph(convex6).is_connected()

    def test_with_edges_checks_new_pairs(self, hull6):
        assert len(hull6.with_edges([Edge(1, 4)])) == 7
        with pytest.raises(PreconditionError):
            hull6.with_edges([Edge(1, 4), Edge(2, 5)])


class TestFaces:

    def test_hull_cycle_has_two_faces(self, hull6):
        faces = trace_faces(hull6)
        assert len(faces) == 2
        assert sorted(len(walk) for walk in faces.faces) == [6, 6]
        assert faces.euler_ok(hull6)

    def test_star_has_one_face(self, convex6):
        star = PlaneSubgraph(convex6, convex6.star(1))
        faces = trace_faces(star)
        assert len(faces) == 1
        assert len(faces.faces[0]) == 10
        assert faces.euler_ok(star)

    def test_every_dart_in_one_face(self, random9):
        F = greedy_maximal(random9)
        faces = trace_faces(F)
        darts = [dart for walk in faces.faces for dart in walk]
        assert len(darts) == 2 * len(F) == len(set(darts))
        assert faces.euler_ok(F)

    def test_corner_of(self, convex6):
        F = PlaneSubgraph(convex6, [Edge(1, 2), Edge(1, 4)])
        assert F.neighbors(1) == [2, 4]
        assert corner_of(F, 1, 3) == (1, 0)
        assert corner_of(F, 1, 5) == (1, 1)
        assert corner_of(F, 1, 4) == (1, 1)

    def test_locate_edge(self, hull6):
        F = hull6.with_edges([Edge(1, 4)])
        faces = trace_faces(F)
        assert locate_edge(F, faces, Edge(1, 2)).kind == LocationKind.MEMBER
        crossing = locate_edge(F, faces, Edge(2, 5))
        assert crossing.kind == LocationKind.CROSSES_SUBGRAPH
        assert crossing.witness == Edge(1, 4)
        a = locate_edge(F, faces, Edge(1, 3))
        b = locate_edge(F, faces, Edge(2, 4))
        c = locate_edge(F, faces, Edge(4, 6))
        assert a.kind == b.kind == c.kind == LocationKind.INSIDE_FACE
        assert a.face == b.face != c.face

    def test_inside_edges_of_hull(self, hull6):
        groups = inside_edges(hull6, trace_faces(hull6))
        assert sorted(len(g) for g in groups.values()) == [0, 9]


class TestMaximality:

    @pytest.mark.parametrize("n, bound", [(3, 3), (4, 5), (6, 9), (8, 12), (9, 14), (11, 17)])
    def test_lower_bound(self, n, bound):
        assert lower_bound(n) == bound

    def test_hull_is_not_maximal(self, hull6):
        assert is_maximal(hull6) == (False, Edge(1, 3))

    def test_triangulation_is_maximal(self, fan6):
        assert is_maximal(fan6) == (True, None)


class TestConnectivity:

    def test_fan_passes_every_check(self, fan6):
        report = structure_report(fan6)
        assert report.ok, report.failures()
        assert report.connectivity.min_degree == 2
        assert report.connectivity.edge_count == 9

    def test_hull_failures(self, hull6):
        report = structure_report(hull6)
        assert not report.ok
        assert any(msg.startswith("not maximal") for msg in report.failures())
        assert report.adjacent_degree_two

    def test_path_is_not_two_connected(self, convex6):
        path = PlaneSubgraph(convex6, [Edge(i, i + 1) for i in range(1, 6)])
        report = connectivity_report(path)
        assert report.spanning and report.connected
        assert not report.two_connected

    def test_two_triangles_joined_twice(self):
        graph = nx.Graph([(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4), (2, 5)])
        assert essentially_3ec_violation(graph) == (Edge(2, 5), Edge(3, 4))
        assert essentially_3ec_violation(nx.complete_graph(4)) is None

    def test_separation_pairs_of_hull(self, hull6):
        pairs = separation_pairs(hull6)
        assert len(pairs) == 9
        assert separation_pair_violations(hull6) == pairs

    def test_fan_separation_pairs_have_good_sides(self, fan6):
        assert separation_pairs(fan6) == [(1, 3), (1, 4), (1, 5)]
        assert separation_pair_violations(fan6) == []

    def test_degree_two_vertices(self, fan6, hull6):
        assert adjacent_degree_two(fan6) == []
        assert len(adjacent_degree_two(hull6)) == 6
        assert degree_two_deletion_ok(fan6) == (True, None)

    @pytest.mark.parametrize("seed", range(3))
    def test_greedy_output_on_random_drawings(self, seed):
        d = gen_random(8, seed)
        report = structure_report(greedy_maximal(d))
        assert report.ok, report.failures()


class TestCycles:

    def test_hull_diagonals_lie_inside(self, convex6):
        diags = cycle_diagonals(convex6, range(1, 7))
        assert sorted(len(side) for side in diags.sides) == [0, 9]
        assert diags.crossing == []
        assert diags.empty_face_ok()

    def test_non_plane_cycle(self, convex6):
        with pytest.raises(PreconditionError):
            cycle_diagonals(convex6, [1, 3, 2, 4])

    def test_repeated_vertex(self, convex6):
        with pytest.raises(PreconditionError):
            cycle_diagonals(convex6, [1, 2, 1, 3])

    @pytest.mark.parametrize("k, expected", [(6, 3), (7, 4), (8, 5)])
    def test_compatible_diagonals_of_convex_polygon(self, k, expected):
        assert compatible_diagonal_count(gen_convex(k), range(1, k + 1)) == expected
