"""
Diagonals of plane cycles.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Sequence, Tuple

import networkx as nx

from ..drawing.predicates import crosses
from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError
from ..optimization.exact import maximum_independent_set
from .faces import LocationKind, locate_edge, trace_faces
from .plane import PlaneSubgraph


@dataclass
class CycleDiagonals:
    """Diagonals of a plane cycle, split by the face of the cycle they lie in."""

    cycle: Tuple[int, ...]
    sides: Tuple[List[Edge], List[Edge]]
    crossing: List[Edge] = field(default_factory=list)

    def empty_face_ok(self) -> bool:
        """An empty side forces every diagonal into the other side."""
        if self.sides[0] and self.sides[1]:
            return True
        return not self.crossing

    def uncrossed(self) -> List[Edge]:
        return sorted(self.sides[0] + self.sides[1])


def cycle_edges(cycle: Sequence[int]) -> List[Edge]:
    k = len(cycle)
    return [Edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def cycle_diagonals(d: Drawing, cycle: Sequence[int]) -> CycleDiagonals:
    """
    Locate every diagonal of a plane cycle.

    Args:
        d: Drawing
        cycle: Distinct vertices in cycle order (k >= 3)

    Raises:
        PreconditionError: if the cycle is too short, repeats a vertex or is not plane
    """
    cycle = tuple(cycle)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise PreconditionError("a cycle needs at least 3 distinct vertices")
    F = PlaneSubgraph(d, cycle_edges(cycle))
    faces = trace_faces(F)
    sides: Tuple[List[Edge], List[Edge]] = ([], [])
    crossing = []
    members = set(F.edges)
    for a, b in combinations(cycle, 2):
        e = Edge(a, b)
        if e in members:
            continue
        loc = locate_edge(F, faces, e)
        if loc.kind == LocationKind.CROSSES_SUBGRAPH:
            crossing.append(e)
        else:
            sides[loc.face].append(e)
    return CycleDiagonals(cycle, (sorted(sides[0]), sorted(sides[1])), sorted(crossing))


def compatible_diagonal_count(d: Drawing, cycle: Sequence[int]) -> int:
    """Largest set of pairwise non-crossing diagonals that avoid the cycle."""
    diagonals = cycle_diagonals(d, cycle).uncrossed()
    graph = nx.Graph()
    graph.add_nodes_from(diagonals)
    for e, f in combinations(diagonals, 2):
        if crosses(d, e, f):
            graph.add_edge(e, f)
    return len(maximum_independent_set(graph))
