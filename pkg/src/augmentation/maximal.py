"""
Maximal plane subgraphs: greedy construction, fast augmentation of
connected subgraphs, and the star-plus-tree witness.
"""

import logging
from typing import Iterable, List

import networkx as nx

from ..drawing.predicates import crosses_any
from ..drawing.rotation import Drawing, Edge
from ..exceptions import InvariantError, PreconditionError
from ..structure.faces import trace_faces
from ..structure.plane import PlaneSubgraph
from .rays import uncrossed_rays_fast

log = logging.getLogger(__name__)


def greedy_maximal(d: Drawing, seed: Iterable[Edge] = ()) -> PlaneSubgraph:
    """
    Grow a plane seed into a maximal plane subgraph.

    Vertices are visited in increasing order; at each vertex the edges of
    its star are tried in rotation order and kept when they cross nothing
    chosen so far. An empty seed starts from the edge (1,2).

    Raises:
        PreconditionError: if the seed is not plane
    """
    edges: List[Edge] = list(PlaneSubgraph(d, seed).edges) or [Edge(1, 2)]
    chosen = set(edges)
    for v in d.vertices:
        for e in d.star(v):
            if e in chosen or crosses_any(d, e, edges):
                continue
            edges.append(e)
            chosen.add(e)
    log.debug("greedy maximal subgraph: %d edges on n=%d", len(edges), d.n)
    return PlaneSubgraph(d, edges, check=False)


def maximal_connected_fast(d: Drawing, F: PlaneSubgraph) -> PlaneSubgraph:
    """
    Augment a connected plane subgraph to a maximal one.

    One pass per vertex adds all its uncrossed rays; F stays connected, so
    the fast ray walk applies throughout.

    Raises:
        PreconditionError: if F is empty or disconnected
    """
    if not F.is_connected():
        raise PreconditionError("fast augmentation needs a connected, nonempty subgraph")
    for v in d.vertices:
        rays = uncrossed_rays_fast(d, F, v, trace_faces(F))
        F = F.with_edges(rays, check=False)
    return F


def augment_maximal(d: Drawing, F: PlaneSubgraph) -> PlaneSubgraph:
    """Fast augmentation for connected F, the greedy pass otherwise."""
    if F.is_connected():
        return maximal_connected_fast(d, F)
    return greedy_maximal(d, F.edges)


def star_plus_tree(d: Drawing, v: int) -> PlaneSubgraph:
    """
    The star of v together with a spanning tree of the other vertices.

    The star is augmented to a maximal (hence 2-connected) plane subgraph;
    a breadth-first tree of that subgraph minus v completes the witness.
    """
    star = PlaneSubgraph(d, d.star(v), check=False)
    full = maximal_connected_fast(d, star)
    rest = full.to_networkx(all_vertices=True)
    rest.remove_node(v)
    if not nx.is_connected(rest):
        raise InvariantError(f"maximal subgraph minus vertex {v} is disconnected")
    root = min(rest.nodes())
    tree = [Edge(a, b) for a, b in nx.bfs_edges(rest, root)]
    return PlaneSubgraph(d, list(star.edges) + tree, check=False)
