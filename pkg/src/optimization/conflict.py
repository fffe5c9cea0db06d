"""
Conflict graph of a drawing: one node per edge of K_n, adjacent when the
two edges cross. Plane subgraphs are exactly its independent sets.
"""

import networkx as nx

from ..drawing.predicates import crossing_pairs
from ..drawing.rotation import Drawing


def build_conflict_graph(d: Drawing) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(d.edges())
    graph.add_edges_from(crossing_pairs(d))
    return graph
