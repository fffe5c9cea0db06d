"""
Faces of a plane subgraph on the sphere.

A dart (u, v) is an edge traversed from u to v. The successor of (u, v) is
(v, x) where x follows u clockwise around v, so every face walk keeps its
face on the left. The corner (v, i) is the wedge at v between the
neighbours nbr[i] and nbr[i+1] (indices modulo the degree); it is entered
by the dart (nbr[i], v).
"""

import logging
from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..drawing.predicates import crosses, crosses_any
from ..drawing.rotation import Edge
from ..exceptions import InvariantError, PreconditionError
from .plane import PlaneSubgraph

log = logging.getLogger(__name__)

Dart = Tuple[int, int]
Corner = Tuple[int, int]


@dataclass
class FaceStructure:
    """Face walks with their corners, and lookup maps."""

    faces: List[List[Dart]]
    corners: List[List[Corner]]
    dart_face: Dict[Dart, Tuple[int, int]] = field(default_factory=dict)
    corner_face: Dict[Corner, int] = field(default_factory=dict)
    component: Dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.faces)

    def walk_vertices(self, face: int) -> List[int]:
        """Tail vertices of the face walk, in walk order."""
        return [u for u, _ in self.faces[face]]

    def euler_ok(self, F: PlaneSubgraph) -> bool:
        """V - E + W = 2 on every connected component."""
        for comp in nx.connected_components(F.to_networkx()):
            edges = [e for e in F.edges if e.u in comp]
            walks = {self.dart_face[(e.u, e.v)][0] for e in edges}
            walks |= {self.dart_face[(e.v, e.u)][0] for e in edges}
            if len(comp) - len(edges) + len(walks) != 2:
                return False
        return True


def trace_faces(F: PlaneSubgraph) -> FaceStructure:
    """
    Trace all face walks of F.

    Raises:
        InvariantError: if a dart is reached twice (corrupt rotations)
    """
    faces: List[List[Dart]] = []
    corners: List[List[Corner]] = []
    dart_face: Dict[Dart, Tuple[int, int]] = {}
    corner_face: Dict[Corner, int] = {}
    index = {v: {x: i for i, x in enumerate(F.neighbors(v))} for v in F.vertices()}

    for e in F.edges:
        for start in ((e.u, e.v), (e.v, e.u)):
            if start in dart_face:
                continue
            fid = len(faces)
            walk: List[Dart] = []
            walk_corners: List[Corner] = []
            dart = start
            while True:
                if dart in dart_face:
                    raise InvariantError(f"dart {dart} visited twice while tracing faces")
                dart_face[dart] = (fid, len(walk))
                walk.append(dart)
                u, v = dart
                nbrs = F.neighbors(v)
                i = index[v][u]
                corner = (v, i)
                walk_corners.append(corner)
                corner_face[corner] = fid
                dart = (v, nbrs[(i + 1) % len(nbrs)])
                if dart == start:
                    break
            faces.append(walk)
            corners.append(walk_corners)

    component = {}
    for cid, comp in enumerate(nx.connected_components(F.to_networkx())):
        component.update({v: cid for v in comp})
    structure = FaceStructure(faces, corners, dart_face, corner_face, component)
    log.debug("traced %d faces over %d edges", len(faces), len(F.edges))
    return structure


def corner_of(F: PlaneSubgraph, w: int, v: int) -> Corner:
    """
    The corner at w whose wedge contains the direction towards v.

    w must have an F-neighbour; when v itself is a neighbour nbr[i], the
    corner (w, i) is returned.
    """
    nbrs = F.neighbors(w)
    if not nbrs:
        raise PreconditionError(f"vertex {w} is not in the subgraph")
    d = F.drawing
    base = nbrs[0]
    offsets = [d.cw_offset(w, base, x) for x in nbrs]
    i = bisect_right(offsets, d.cw_offset(w, base, v)) - 1
    return (w, i)


class LocationKind(Enum):
    CROSSES_SUBGRAPH = "crosses_subgraph"
    MEMBER = "member"
    INSIDE_FACE = "inside_face"


@dataclass(frozen=True)
class EdgeLocation:
    kind: LocationKind
    face: Optional[int] = None
    corners: Tuple[Optional[Corner], Optional[Corner]] = (None, None)
    witness: Optional[Edge] = None


def _anchor_corner(F: PlaneSubgraph, x: int) -> Corner:
    """Corner of some F-vertex seeing x through an uncrossed edge."""
    for w in F.vertices():
        if not crosses_any(F.drawing, Edge(x, w), F.edges):
            return corner_of(F, w, x)
    raise InvariantError(f"vertex {x} has no uncrossed edge to the subgraph")


def locate_edge(F: PlaneSubgraph, faces: FaceStructure, e: Edge) -> EdgeLocation:
    """
    Classify e against F: crossing a member, a member, or inside one face.

    When the endpoints lie in different components of F, the face is the
    one seen from e.u.

    Raises:
        InvariantError: if the two endpoint corners name different faces
    """
    if e in F:
        return EdgeLocation(LocationKind.MEMBER)
    for f in F.edges:
        if crosses(F.drawing, e, f):
            return EdgeLocation(LocationKind.CROSSES_SUBGRAPH, witness=f)
    if not F.edges:
        raise PreconditionError("an empty subgraph has no face walks")

    ends = []
    for x, y in ((e.u, e.v), (e.v, e.u)):
        ends.append(corner_of(F, x, y) if F.degree(x) else None)

    found = [faces.corner_face[c] for c in ends if c is not None]
    if not found:
        face = faces.corner_face[_anchor_corner(F, e.u)]
    elif (len(found) == 2 and found[0] != found[1]
          and faces.component[e.u] == faces.component[e.v]):
        raise InvariantError(
            f"edge {e} is uncrossed but its endpoints see faces {found[0]} and {found[1]}"
        )
    else:
        face = found[0]
    return EdgeLocation(LocationKind.INSIDE_FACE, face=face, corners=tuple(ends))


def inside_edges(F: PlaneSubgraph, faces: FaceStructure) -> Dict[int, List[Edge]]:
    """Non-member edges crossing nothing in F, grouped by face."""
    groups: Dict[int, List[Edge]] = {fid: [] for fid in range(len(faces))}
    for e in F.drawing.edges():
        loc = locate_edge(F, faces, e)
        if loc.kind == LocationKind.INSIDE_FACE:
            groups[loc.face].append(e)
    return groups
