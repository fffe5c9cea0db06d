"""
Exact maximum plane subgraphs by branch and bound.

The search runs on the conflict graph with vertex sets encoded as integer
bitmasks. Pruning uses the better of two upper bounds: a greedy clique
cover, and the edge count bound |R| - ceil(m / max_degree).
"""

import logging
import math
from typing import Dict, Hashable, Iterable, List, Optional, Set

import networkx as nx

from ..augmentation.maximal import greedy_maximal
from ..config import get_settings
from ..drawing.rotation import Drawing, Edge
from ..exceptions import LimitExceededError, PreconditionError
from ..structure.plane import PlaneSubgraph
from .conflict import build_conflict_graph

log = logging.getLogger(__name__)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    """Branch and bound over bitmask-encoded candidate sets."""

    def __init__(self, adj: List[int]):
        self.adj = adj
        self.best = 0
        self.best_mask = 0
        self.nodes_visited = 0

    def upper_bound(self, cand: int) -> int:
        size = _popcount(cand)
        if size <= 1:
            return size
        degrees = [_popcount(self.adj[i] & cand) for i in _bits(cand)]
        max_deg = max(degrees)
        if max_deg == 0:
            return size
        edge_bound = size - math.ceil(sum(degrees) / 2 / max_deg)

        cliques: List[int] = []
        for i in _bits(cand):
            for c, members in enumerate(cliques):
                if members & ~self.adj[i] == 0:
                    cliques[c] = members | (1 << i)
                    break
            else:
                cliques.append(1 << i)
            if len(cliques) >= edge_bound:
                return edge_bound
        return min(edge_bound, len(cliques))

    def run(self, cand: int, chosen: int) -> None:
        self.nodes_visited += 1
        # vertices with at most one candidate neighbour belong to some optimum
        changed = True
        while changed:
            changed = False
            for i in _bits(cand):
                nbrs = self.adj[i] & cand
                if _popcount(nbrs) <= 1:
                    chosen |= 1 << i
                    cand &= ~(nbrs | (1 << i))
                    changed = True
                    break

        if cand == 0:
            if _popcount(chosen) > self.best:
                self.best = _popcount(chosen)
                self.best_mask = chosen
            return
        if _popcount(chosen) + self.upper_bound(cand) <= self.best:
            return

        pivot = max(_bits(cand), key=lambda i: (_popcount(self.adj[i] & cand), -i))
        self.run(cand & ~(self.adj[pivot] | (1 << pivot)), chosen | (1 << pivot))
        self.run(cand & ~(1 << pivot), chosen)


def maximum_independent_set(graph: nx.Graph, forced: Iterable[Hashable] = (),
                            initial: Iterable[Hashable] = ()) -> Set[Hashable]:
    """
    Maximum independent set containing the forced nodes.

    Args:
        graph: Undirected graph with sortable nodes
        forced: Nodes that must be in the answer
        initial: A known independent set containing forced, used as lower bound

    Returns:
        Set of nodes

    Raises:
        PreconditionError: if two forced nodes are adjacent
    """
    order = sorted(graph.nodes())
    index: Dict[Hashable, int] = {node: i for i, node in enumerate(order)}
    adj = [0] * len(order)
    for a, b in graph.edges():
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]

    chosen = 0
    for node in forced:
        if node not in index:
            raise PreconditionError(f"forced node {node} is not in the graph")
        chosen |= 1 << index[node]
    for i in _bits(chosen):
        if adj[i] & chosen:
            raise PreconditionError("forced nodes conflict with each other")

    cand = (1 << len(order)) - 1
    for i in _bits(chosen):
        cand &= ~(adj[i] | (1 << i))

    search = _Search(adj)
    start = [index[node] for node in initial]
    start_mask = sum(1 << i for i in start)
    if start and start_mask & chosen == chosen and not any(adj[i] & start_mask for i in start):
        search.best = _popcount(start_mask)
        search.best_mask = start_mask
    search.run(cand, chosen)
    log.debug("branch and bound visited %d nodes, optimum %d", search.nodes_visited, search.best)
    return {order[i] for i in _bits(search.best_mask)}


def exact_max(d: Drawing, must_include: Iterable[Edge] = (),
              limit_n: Optional[int] = None) -> PlaneSubgraph:
    """
    Maximum-cardinality plane subgraph containing must_include.

    Raises:
        LimitExceededError: if d.n exceeds limit_n
        PreconditionError: if must_include is not plane
    """
    limit = get_settings().limit_n if limit_n is None else limit_n
    if d.n > limit:
        raise LimitExceededError(f"exact search limited to n <= {limit}, got n={d.n}")
    forced = PlaneSubgraph(d, must_include).edges
    initial = greedy_maximal(d, forced).edges
    best = maximum_independent_set(build_conflict_graph(d), forced, initial)
    return PlaneSubgraph(d, best, check=False)
