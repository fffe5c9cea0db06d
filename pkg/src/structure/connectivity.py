"""
Connectivity checks for plane subgraphs.

Maximal plane subgraphs are spanning, 2-connected and essentially
3-edge-connected; a degree-2 vertex can be removed without losing
maximality, no two degree-2 vertices are adjacent, and every separation
pair leaves at least one 2-connected side. The functions here test each of
those properties on a concrete subgraph.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from ..drawing.rotation import Edge
from ..drawing.transform import sub_drawing
from .maximality import is_maximal, lower_bound
from .plane import PlaneSubgraph

log = logging.getLogger(__name__)


@dataclass
class ConnectivityReport:
    spanning: bool
    connected: bool
    two_connected: bool
    essentially_3ec: bool
    min_degree: int
    edge_count: int
    cut_pair: Optional[Tuple[Edge, Edge]] = None


def _graph(F: PlaneSubgraph) -> nx.Graph:
    return F.to_networkx(all_vertices=F.is_spanning())


def essentially_3ec_violation(graph: nx.Graph) -> Optional[Tuple[Edge, Edge]]:
    """
    A pair of edges whose removal leaves two non-trivial components and
    which do not meet at a degree-2 vertex, or None.
    """
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        return None
    edges = sorted(Edge(a, b) for a, b in graph.edges())
    for i, e1 in enumerate(edges):
        rest = graph.copy()
        rest.remove_edge(e1.u, e1.v)
        if nx.is_connected(rest):
            partners = {Edge(a, b) for a, b in nx.bridges(rest)}
        else:
            partners = set(edges)
        for e2 in edges[i + 1:]:
            if e2 not in partners:
                continue
            shared = set(e1) & set(e2)
            if shared and graph.degree(shared.pop()) == 2:
                continue
            cut = rest.copy()
            cut.remove_edge(e2.u, e2.v)
            if any(len(c) == 1 for c in nx.connected_components(cut)):
                continue
            return e1, e2
    return None


def connectivity_report(F: PlaneSubgraph) -> ConnectivityReport:
    """Spanning, connectivity and essential 3-edge-connectivity of F."""
    graph = _graph(F)
    connected = F.is_connected()
    two_connected = connected and graph.number_of_nodes() >= 3 and nx.is_biconnected(graph)
    cut_pair = essentially_3ec_violation(graph) if connected else None
    return ConnectivityReport(
        spanning=F.is_spanning(),
        connected=connected,
        two_connected=two_connected,
        essentially_3ec=connected and cut_pair is None,
        min_degree=min(F.degree(v) for v in F.drawing.vertices),
        edge_count=len(F),
        cut_pair=cut_pair,
    )


def separation_pairs(F: PlaneSubgraph) -> List[Tuple[int, int]]:
    """Vertex pairs whose removal disconnects the graph of F."""
    graph = _graph(F)
    pairs = []
    for a, b in combinations(sorted(graph.nodes()), 2):
        rest = graph.subgraph(set(graph.nodes()) - {a, b})
        if rest.number_of_nodes() and not nx.is_connected(rest):
            pairs.append((a, b))
    return pairs


def separation_pair_violations(F: PlaneSubgraph) -> List[Tuple[int, int]]:
    """Separation pairs none of whose sides induces a 2-connected graph."""
    graph = _graph(F)
    bad = []
    for a, b in separation_pairs(F):
        rest = graph.subgraph(set(graph.nodes()) - {a, b})
        sides = [graph.subgraph(set(comp) | {a, b}) for comp in nx.connected_components(rest)]
        if not any(side.number_of_nodes() >= 3 and nx.is_biconnected(side) for side in sides):
            bad.append((a, b))
    return bad


def adjacent_degree_two(F: PlaneSubgraph) -> List[Edge]:
    """Member edges joining two degree-2 vertices."""
    return [e for e in F.edges if F.degree(e.u) == 2 and F.degree(e.v) == 2]


def degree_two_deletion_ok(F: PlaneSubgraph) -> Tuple[bool, Optional[int]]:
    """
    Remove each degree-2 vertex v and test maximality in the drawing minus v.

    Returns:
        (True, None), or (False, the first v whose removal breaks maximality)
    """
    d = F.drawing
    if d.n <= 3:
        return True, None
    for v in d.vertices:
        if F.degree(v) != 2:
            continue
        sub, label = sub_drawing(d, [x for x in d.vertices if x != v])
        remaining = [Edge(label[e.u], label[e.v]) for e in F.without_vertex(v)]
        ok, _ = is_maximal(PlaneSubgraph(sub, remaining, check=False))
        if not ok:
            return False, v
    return True, None


@dataclass
class StructureReport:
    connectivity: ConnectivityReport
    maximal: bool
    addable: Optional[Edge]
    bound: int
    meets_bound: bool
    adjacent_degree_two: List[Edge] = field(default_factory=list)
    degree_two_deletion_ok: bool = True
    degree_two_witness: Optional[int] = None
    separation_violations: List[Tuple[int, int]] = field(default_factory=list)

    def failures(self) -> List[str]:
        """Properties a maximal plane subgraph must have but F lacks."""
        c = self.connectivity
        problems = []
        if not self.maximal:
            problems.append(f"not maximal: {self.addable} can be added")
        if not c.spanning:
            problems.append("not spanning")
        if not c.two_connected:
            problems.append("not 2-connected")
        if not c.essentially_3ec:
            problems.append(f"not essentially 3-edge-connected: cut pair {c.cut_pair}")
        if not self.meets_bound:
            problems.append(f"{c.edge_count} edges, below the bound {self.bound}")
        if self.adjacent_degree_two:
            problems.append(f"adjacent degree-2 vertices on {self.adjacent_degree_two[0]}")
        if not self.degree_two_deletion_ok:
            problems.append(f"removing degree-2 vertex {self.degree_two_witness} breaks maximality")
        if self.separation_violations:
            problems.append(f"separation pair {self.separation_violations[0]} has no 2-connected side")
        return problems

    @property
    def ok(self) -> bool:
        return not self.failures()


def structure_report(F: PlaneSubgraph) -> StructureReport:
    """Run every structural check on F."""
    maximal, addable = is_maximal(F)
    conn = connectivity_report(F)
    bound = lower_bound(F.drawing.n)
    deletion_ok, witness = degree_two_deletion_ok(F) if maximal else (True, None)
    report = StructureReport(
        connectivity=conn,
        maximal=maximal,
        addable=addable,
        bound=bound,
        meets_bound=len(F) >= bound,
        adjacent_degree_two=adjacent_degree_two(F),
        degree_two_deletion_ok=deletion_ok,
        degree_two_witness=witness,
        separation_violations=separation_pair_violations(F) if conn.two_connected else [],
    )
    if not report.ok:
        log.info("structure check failed: %s", "; ".join(report.failures()))
    return report
