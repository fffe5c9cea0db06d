"""
Crossing predicates read off a rotation system.

`crosses` looks the induced 4-vertex pattern up in the K4 table.
`crossing_order` decides which of two non-crossing edges meets a third
edge first. Both rules close a curve out of edge pieces and a full edge of
K_n and count how often an edge passes through it, so every decision comes
down to rotation positions and smaller `crosses` queries.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from ..config import get_settings
from ..exceptions import InvariantError, PreconditionError
from .k4_table import K4Kind, matching_index
from .rotation import Drawing, Edge

log = logging.getLogger(__name__)


class CrossingOrder(Enum):
    F_FIRST = "f_first"
    G_FIRST = "g_first"


def crosses(d: Drawing, e: Edge, f: Edge) -> bool:
    """
    Whether edges e and f cross in the drawing.

    Raises:
        InvariantError: if the four endpoints induce a non-realizable pattern
    """
    eu, ev, fu, fv = e.u, e.v, f.u, f.v
    if eu == fu or eu == fv or ev == fu or ev == fv:
        return False
    quad = sorted((eu, ev, fu, fv))
    kind = d.k4_kind(quad)
    if kind is None:
        raise InvariantError(f"non-realizable K4 pattern on {{{','.join(map(str, quad))}}}")
    if kind == K4Kind.PLANAR:
        return False
    return matching_index(quad.index(eu), quad.index(ev)) == kind


def crosses_any(d: Drawing, e: Edge, edges: Iterable[Edge]) -> bool:
    return any(crosses(d, e, f) for f in edges)


def crossing_pairs(d: Drawing) -> List[Tuple[Edge, Edge]]:
    """All crossing edge pairs, one per crossing 4-subset, sorted."""
    pairs = []
    for quad in combinations(range(1, d.n + 1), 4):
        kind = d.k4_kind(quad)
        if kind is None:
            raise InvariantError(f"non-realizable K4 pattern on {set(quad)}")
        if kind == K4Kind.PLANAR:
            continue
        q0, q1, q2, q3 = quad
        if kind == K4Kind.CROSS_01_23:
            pair = (Edge(q0, q1), Edge(q2, q3))
        elif kind == K4Kind.CROSS_02_13:
            pair = (Edge(q0, q2), Edge(q1, q3))
        else:
            pair = (Edge(q0, q3), Edge(q1, q2))
        pairs.append(pair)
    return sorted(pairs)


def _first_via_loop(d: Drawing, a: int, b: int, w: int, c: int, x: int,
                    depth: int, max_depth: int) -> bool:
    """
    Edge ab from a is crossed by wc and wx; True iff wc comes first.

    Closes the loop w -> (along wc) -> ab -> a -> w and asks whether wx
    passes through the piece of ab between a and the crossing with wc.
    """
    start_g = d.between_cw(w, c, x, a)
    start_x = d.between_cw(a, w, x, b)
    through = (crosses(d, Edge(a, x), Edge(w, c))
               and _order_shared(d, w, c, a, x, b, depth + 1, max_depth))
    return start_g == (start_x != through)


def _order_shared(d: Drawing, a: int, b: int, w: int, c: int, x: int,
                  depth: int, max_depth: int) -> bool:
    """True iff wc crosses ab nearer to a than wx does."""
    if depth > max_depth:
        raise InvariantError(
            f"crossing order recursion exceeded depth {max_depth} on edge ({a},{b})"
        )
    m = d.n - 1
    pa = d.position(w, a)
    pb = (d.position(w, b) - pa) % m
    pc = (d.position(w, c) - pa) % m
    px = (d.position(w, x) - pa) % m
    in_c = pc < pb
    in_x = px < pb
    if in_c == in_x:
        return (pc < px) == in_c

    # Same loop seen from either end of ab with either edge closing it;
    # pick one whose auxiliary edge pair does not cross.
    if not crosses(d, Edge(a, x), Edge(w, c)):
        return _first_via_loop(d, a, b, w, c, x, depth, max_depth)
    if not crosses(d, Edge(a, c), Edge(w, x)):
        return not _first_via_loop(d, a, b, w, x, c, depth, max_depth)
    if not crosses(d, Edge(b, x), Edge(w, c)):
        return not _first_via_loop(d, b, a, w, c, x, depth, max_depth)
    if not crosses(d, Edge(b, c), Edge(w, x)):
        return _first_via_loop(d, b, a, w, x, c, depth, max_depth)
    log.debug("crossing order on (%d,%d) via w=%d needs recursion", a, b, w)
    return _first_via_loop(d, a, b, w, c, x, depth, max_depth)


def _order_disjoint(d: Drawing, a: int, b: int, f: Edge, g: Edge,
                    depth: int, max_depth: int) -> bool:
    """
    True iff f crosses ab nearer to a than g, for vertex-disjoint f and g.

    The loop is a -> (along ab) -> f -> c -> (edge ca) -> a, where c is an
    endpoint of f; g crosses the ab piece iff its endpoints lie on
    different sides, corrected by whether g crosses the edge ca.
    """
    c, dd = f.u, f.v
    h, k = g.u, g.v

    def side(z: int) -> bool:
        inside = d.between_cw(a, b, z, c)
        if crosses(d, Edge(a, z), f) and _order_shared(d, c, dd, a, z, b, depth + 1, max_depth):
            inside = not inside
        return inside

    g_first = (side(h) != side(k)) != crosses(d, g, Edge(a, c))
    return not g_first


def _f_first(d: Drawing, a: int, b: int, f: Edge, g: Edge, max_depth: int) -> bool:
    shared = set(f) & set(g)
    if shared:
        w = shared.pop()
        return _order_shared(d, a, b, w, f.other(w), g.other(w), 0, max_depth)
    return _order_disjoint(d, a, b, f, g, 0, max_depth)


def crossing_order(d: Drawing, e: Edge, frm: int, f: Edge, g: Edge,
                   check: bool = True) -> CrossingOrder:
    """
    Which of f, g crosses e nearer to the endpoint frm.

    Args:
        d: Drawing
        e: Edge crossed by both f and g
        frm: Endpoint of e to measure from
        f: First crossing edge
        g: Second crossing edge, not crossing f
        check: Verify the preconditions

    Returns:
        CrossingOrder.F_FIRST or CrossingOrder.G_FIRST

    Raises:
        PreconditionError: when check is on and the configuration is invalid
    """
    if check:
        if frm not in e:
            raise PreconditionError(f"vertex {frm} is not an endpoint of {e}")
        if f == g:
            raise PreconditionError("crossing order needs two distinct edges")
        if not crosses(d, e, f) or not crosses(d, e, g):
            raise PreconditionError(f"{f} and {g} must both cross {e}")
        if crosses(d, f, g):
            raise PreconditionError(f"{f} and {g} cross each other")
    max_depth = get_settings().order_depth
    if _f_first(d, frm, e.other(frm), f, g, max_depth):
        return CrossingOrder.F_FIRST
    return CrossingOrder.G_FIRST


def first_crossed_edge(d: Drawing, frm: int, to: int, F) -> Optional[Edge]:
    """
    The member of F whose crossing with edge (frm, to) is nearest frm.

    Args:
        d: Drawing
        frm: Start of the ray
        to: Far end of the ray
        F: PlaneSubgraph or iterable of pairwise non-crossing edges

    Returns:
        Edge, or None when the ray crosses nothing in F
    """
    ray = Edge(frm, to)
    max_depth = get_settings().order_depth
    best: Optional[Edge] = None
    for h in getattr(F, "edges", F):
        if not crosses(d, ray, h):
            continue
        if best is None or _f_first(d, frm, to, h, best, max_depth):
            best = h
    return best
