"""
Maximum augmentation of a connected spanning plane subgraph, face by face.

Inside one face, the available edges behave like chords of a polygon whose
corners are the slots of the face walk: two of them cross exactly when
their slot pairs interleave. Giving available chords weight 0 and every
other polygon diagonal weight 1, a minimum-weight triangulation uses as
many available chords as possible.
"""

import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError
from ..structure.faces import FaceStructure, LocationKind, locate_edge, trace_faces
from ..structure.plane import PlaneSubgraph

log = logging.getLogger(__name__)

Chord = Tuple[int, int]


def max_noncrossing_chords(k: int, chords: Iterable[Chord]) -> List[Chord]:
    """
    Largest set of pairwise non-interleaving chords of a k-gon.

    Args:
        k: Number of slots 0..k-1 around the circle
        chords: Available slot pairs

    Returns:
        Chosen chords as sorted (i, j) pairs with i < j
    """
    available: Set[Chord] = {(min(a, b), max(a, b)) for a, b in chords if a != b}
    if k < 4:
        return []

    weight = np.ones((k, k), dtype=np.int64)
    for i, j in available:
        weight[i, j] = 0
    cost = np.zeros((k, k), dtype=np.int64)
    split = np.full((k, k), -1, dtype=np.int64)

    for span in range(2, k):
        for i in range(0, k - span):
            j = i + span
            inner = cost[i, i + 1:j] + cost[i + 1:j, j]
            t = int(np.argmin(inner))
            split[i, j] = i + 1 + t
            side = i == 0 and j == k - 1
            cost[i, j] = inner[t] + (0 if side else weight[i, j])

    chosen: List[Chord] = []
    stack = [(0, k - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        if (i, j) != (0, k - 1) and (i, j) in available:
            chosen.append((i, j))
        t = int(split[i, j])
        stack.extend(((i, t), (t, j)))
    return sorted(chosen)


def face_chords(F: PlaneSubgraph,
                faces: Optional[FaceStructure] = None) -> Dict[int, Dict[Chord, Edge]]:
    """Per face, available edges keyed by their slot pair on the face walk."""
    if faces is None:
        faces = trace_faces(F)
    slot = {corner: (fid, idx)
            for fid, corners in enumerate(faces.corners)
            for idx, corner in enumerate(corners)}
    per_face: Dict[int, Dict[Chord, Edge]] = {fid: {} for fid in range(len(faces))}
    for e in F.drawing.edges():
        loc = locate_edge(F, faces, e)
        if loc.kind != LocationKind.INSIDE_FACE:
            continue
        (_, sa), (_, sb) = slot[loc.corners[0]], slot[loc.corners[1]]
        per_face[loc.face][(min(sa, sb), max(sa, sb))] = e
    return per_face


def maximize_connected(d: Drawing, F: PlaneSubgraph) -> PlaneSubgraph:
    """
    Plane superset of F with the most edges, for connected spanning F.

    Raises:
        PreconditionError: if F is not connected and spanning
    """
    if not F.is_spanning() or not F.is_connected():
        raise PreconditionError("face augmentation needs a connected, spanning subgraph")
    faces = trace_faces(F)
    added: List[Edge] = []
    for fid, chords in face_chords(F, faces).items():
        k = len(faces.faces[fid])
        picked = max_noncrossing_chords(k, chords)
        added.extend(chords[c] for c in picked)
        log.debug("face %d: %d slots, %d available, %d added", fid, k, len(chords), len(picked))
    return PlaneSubgraph(d, list(F.edges) + added, check=False)
