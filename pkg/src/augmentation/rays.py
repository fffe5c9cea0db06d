"""
Uncrossed rays: edges from a vertex v to the vertices of a plane subgraph
F that cross no edge of F.

The brute-force version tests every candidate against every member. The
fast version needs F connected. It walks the boundary of the face holding
v (or of each face at v when v is in F) clockwise, in step with the rays
of v. Candidates that reach their corner without meeting a boundary edge
are kept. A second, counterclockwise pass over the candidates removes
those blocked from the other side.
"""

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..config import get_settings
from ..drawing.predicates import crosses, crosses_any, first_crossed_edge
from ..drawing.rotation import Drawing, Edge
from ..exceptions import InvariantError, PreconditionError
from ..structure.faces import Corner, Dart, FaceStructure, corner_of, trace_faces
from ..structure.plane import PlaneSubgraph

log = logging.getLogger(__name__)

WalkItem = Tuple[Dart, Optional[Corner]]


def uncrossed_rays_brute(d: Drawing, F: PlaneSubgraph, v: int) -> Set[Edge]:
    """Edges from v to F-vertices crossing no member of F."""
    rays = set()
    for w in F.vertices():
        if w == v:
            continue
        e = Edge(v, w)
        if e in F or not crosses_any(d, e, F.edges):
            rays.add(e)
    return rays


def _clockwise_walk(faces: FaceStructure, face: int, j0: int) -> List[WalkItem]:
    """
    Boundary items met when walking clockwise (as seen from inside the face)
    backwards from dart j0: each item is a reversed dart and the corner it ends at.
    """
    walk = faces.faces[face]
    corners = faces.corners[face]
    m = len(walk)
    items = []
    for c in range(m):
        u, x = walk[(j0 - c) % m]
        items.append(((x, u), corners[(j0 - c - 1) % m]))
    return items


def _counterclockwise_walk(faces: FaceStructure, face: int, start: int, count: int) -> List[WalkItem]:
    walk = faces.faces[face]
    corners = faces.corners[face]
    m = len(walk)
    return [(walk[(start + c) % m], corners[(start + c) % m]) for c in range(count)]


def _sweep(d: Drawing, F: PlaneSubgraph, faces: FaceStructure, v: int, face: int,
           rays: Sequence[int], walk: Sequence[WalkItem],
           kappa: Dict[int, Optional[Corner]]) -> List[int]:
    """Advance rays and boundary items together; keep rays reaching their own corner."""
    kept = []
    r = t = 0
    while r < len(rays):
        w = rays[r]
        corner = kappa.get(w)
        if corner is None or faces.corner_face.get(corner) != face:
            r += 1
            continue
        if t >= len(walk):
            r += 1
            continue
        (a, b), item_corner = walk[t]
        if crosses(d, Edge(v, w), Edge(a, b)):
            r += 1
        elif item_corner == corner:
            kept.append(w)
            r += 1
            t += 1
        else:
            t += 1
    return kept


def _kappa(F: PlaneSubgraph, v: int, candidates: Sequence[int]) -> Dict[int, Optional[Corner]]:
    return {w: corner_of(F, w, v) if F.degree(w) else None for w in candidates}


def _rays_outside(d: Drawing, F: PlaneSubgraph, faces: FaceStructure, v: int) -> Set[int]:
    rotation = d.rotation(v)
    start = next(i for i, w in enumerate(rotation) if F.degree(w))
    w1 = rotation[start]
    rays = [rotation[(start + c) % len(rotation)] for c in range(1, len(rotation))]
    kappa = _kappa(F, v, rotation)

    e = first_crossed_edge(d, v, w1, F)
    if e is not None:
        p, q = e.u, e.v
        dart = (q, p) if d.between_cw(v, p, w1, q) else (p, q)
        face, j0 = faces.dart_face[dart]
        m = len(faces.faces[face])
        walk_cw = _clockwise_walk(faces, face, j0) + [((dart[1], dart[0]), None)]
        walk_ccw = _counterclockwise_walk(faces, face, j0, m) + [(dart, None)]
        sigma: List[int] = []
        log.debug("vertex %d sits in face %d behind edge %s", v, face, e)
    else:
        w_corner = kappa[w1]
        face = faces.corner_face[w_corner]
        nbr = F.neighbors(w1)
        j0 = faces.dart_face[(nbr[w_corner[1]], w1)][1]
        m = len(faces.faces[face])
        walk_cw = _clockwise_walk(faces, face, j0)
        walk_ccw = _counterclockwise_walk(faces, face, j0 + 1, m)
        sigma = [w1]
        log.debug("vertex %d sees %d directly, face %d", v, w1, face)

    sigma += _sweep(d, F, faces, v, face, rays, walk_cw, kappa)
    return set(_sweep(d, F, faces, v, face, sigma[::-1], walk_ccw, kappa))


def _rays_inside(d: Drawing, F: PlaneSubgraph, faces: FaceStructure, v: int) -> Set[int]:
    kept: Set[int] = set(F.neighbors(v))
    nbr = F.neighbors(v)
    kappa = _kappa(F, v, d.rotation(v))
    for i in range(len(nbr)):
        a, b = nbr[i], nbr[(i + 1) % len(nbr)]
        # clockwise from a, not from the start of the stored rotation
        rays = sorted((w for w in d.rotation(v) if d.between_cw(v, a, w, b)),
                      key=lambda w: d.cw_offset(v, a, w))
        if not rays:
            continue
        face, j0 = faces.dart_face[(a, v)]
        m = len(faces.faces[face])
        sigma = _sweep(d, F, faces, v, face, rays, _clockwise_walk(faces, face, j0), kappa)
        walk_ccw = _counterclockwise_walk(faces, face, j0 + 1, m)
        kept.update(_sweep(d, F, faces, v, face, sigma[::-1], walk_ccw, kappa))
    return kept


def uncrossed_rays_fast(d: Drawing, F: PlaneSubgraph, v: int,
                        faces: Optional[FaceStructure] = None) -> Set[Edge]:
    """
    Uncrossed rays of v by a walk around the face boundary.

    Args:
        d: Drawing
        F: Connected, nonempty plane subgraph
        v: Anchor vertex, in F or not
        faces: Face structure of F, traced when omitted

    Returns:
        Set of edges (v, w)

    Raises:
        PreconditionError: if F is empty or disconnected
        InvariantError: on disagreement with brute force when the debug oracle is on
    """
    if not F.is_connected():
        raise PreconditionError("fast uncrossed rays need a connected, nonempty subgraph")
    if faces is None:
        faces = trace_faces(F)

    if F.degree(v):
        found = _rays_inside(d, F, faces, v)
    else:
        found = _rays_outside(d, F, faces, v)
    result = {Edge(v, w) for w in found}

    if get_settings().debug_oracle:
        expected = uncrossed_rays_brute(d, F, v)
        if result != expected:
            raise InvariantError(
                f"uncrossed rays of {v} disagree with brute force: "
                f"missing {sorted(expected - result)}, extra {sorted(result - expected)}"
            )
    return result


def uncrossed_rays(d: Drawing, F: PlaneSubgraph, v: int, fast: Optional[bool] = None) -> Set[Edge]:
    """Fast walk when F is connected and nonempty, brute force otherwise."""
    if fast is None:
        fast = F.is_connected()
    if fast:
        return uncrossed_rays_fast(d, F, v)
    return uncrossed_rays_brute(d, F, v)
