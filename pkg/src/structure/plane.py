"""
Plane subgraphs of a drawing.
"""

from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from ..drawing.predicates import crosses
from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError


def find_crossing(d: Drawing, edges: Iterable[Edge]) -> Optional[Tuple[Edge, Edge]]:
    """First crossing pair among the edges, or None."""
    members = sorted(set(edges))
    for e, f in combinations(members, 2):
        if crosses(d, e, f):
            return e, f
    return None


def is_plane(d: Drawing, edges: Iterable[Edge]) -> bool:
    """True iff no two of the edges cross."""
    return find_crossing(d, edges) is None


class PlaneSubgraph:
    """
    A crossing-free edge set of a drawing.

    `edges` is a sorted tuple; neighbours of each vertex are listed in the
    order of the vertex's rotation.
    """

    def __init__(self, drawing: Drawing, edges: Iterable[Edge] = (), check: bool = True):
        """
        Initialize a plane subgraph.

        Args:
            drawing: Underlying drawing
            edges: Member edges
            check: Verify that no two members cross

        Raises:
            PreconditionError: if check is on and two members cross
        """
        self.drawing = drawing
        self.edges: Tuple[Edge, ...] = tuple(sorted(set(edges)))
        for e in self.edges:
            if e.v > drawing.n:
                raise PreconditionError(f"edge {e} names a vertex outside 1..{drawing.n}")
        if check:
            pair = find_crossing(drawing, self.edges)
            if pair is not None:
                raise PreconditionError(f"edges {pair[0]} and {pair[1]} cross")

        self._edge_set = frozenset(self.edges)
        adj: Dict[int, List[int]] = {v: [] for v in drawing.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        for v, nbrs in adj.items():
            nbrs.sort(key=lambda x, v=v: drawing.position(v, x))
        self._adj = adj

    # ---------------------------------------------------------------- queries

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return e in self._edge_set

    def __repr__(self) -> str:
        return f"PlaneSubgraph(n={self.drawing.n}, edges={len(self.edges)})"

    def neighbors(self, v: int) -> List[int]:
        """Neighbours of v in clockwise rotation order."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def vertices(self) -> List[int]:
        """Vertices incident to at least one member edge."""
        return [v for v in self.drawing.vertices if self._adj[v]]

    def is_spanning(self) -> bool:
        return all(self._adj[v] for v in self.drawing.vertices)

    def to_networkx(self, all_vertices: bool = False) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.drawing.vertices if all_vertices else self.vertices())
        graph.add_edges_from((e.u, e.v) for e in self.edges)
        return graph

    def is_connected(self) -> bool:
        """Nonempty and connected on the vertices it touches."""
        return bool(self.edges) and nx.is_connected(self.to_networkx())

    # ---------------------------------------------------------------- updates

    def with_edges(self, extra: Iterable[Edge], check: bool = True) -> "PlaneSubgraph":
        """New subgraph with extra edges; only pairs involving new edges are checked."""
        new = [e for e in set(extra) if e not in self._edge_set]
        if check:
            for i, e in enumerate(new):
                for f in list(self.edges) + new[i + 1:]:
                    if crosses(self.drawing, e, f):
                        raise PreconditionError(f"edges {e} and {f} cross")
        return PlaneSubgraph(self.drawing, self.edges + tuple(new), check=False)

    def without_vertex(self, v: int) -> List[Edge]:
        return [e for e in self.edges if v not in e]
