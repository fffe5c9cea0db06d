"""
Clockwise and counterclockwise ray ranges around a crossed probe ray.

Let the ray vr first cross the member e = pq of F, with vr, vp, vq in
clockwise order around v. The clockwise range runs from vr (exclusive) to
the last ray between vp and vq that crosses e closer to p than vr does,
or to vp when there is none. The counterclockwise range is the mirror
image built towards q. Each range holds at least one ray crossing no
member of F, whether or not F is connected.
"""

from dataclasses import dataclass
from typing import List, Optional

from ..drawing.predicates import CrossingOrder, crosses, crossing_order, first_crossed_edge
from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError
from ..structure.plane import PlaneSubgraph


@dataclass(frozen=True)
class RayRanges:
    v: int
    r: int
    e: Edge
    p: int
    q: int
    cw: List[Edge]
    ccw: List[Edge]


def _cw_from(d: Drawing, v: int, start: int) -> List[int]:
    """Rotation of v read clockwise, starting just after start."""
    rot = d.rotation(v)
    i = d.position(v, start)
    return [rot[(i + c) % len(rot)] for c in range(1, len(rot))]


def fr_ranges(d: Drawing, F: PlaneSubgraph, v: int, r: int) -> RayRanges:
    """
    Ray ranges for the probe ray vr.

    Raises:
        PreconditionError: if vr crosses no member of F
    """
    e = first_crossed_edge(d, v, r, F)
    if e is None:
        raise PreconditionError(f"ray ({v},{r}) crosses no edge of the subgraph")
    p, q = e.u, e.v
    if not d.between_cw(v, r, p, q):
        p, q = q, p

    probe = Edge(v, r)
    inner = [z for z in _cw_from(d, v, p) if d.between_cw(v, p, z, q)]

    def nearer(z: int, end: int) -> bool:
        ray = Edge(v, z)
        return (crosses(d, ray, e)
                and crossing_order(d, e, end, ray, probe, check=False) == CrossingOrder.F_FIRST)

    toward_p = [z for z in inner if nearer(z, p)]
    toward_q = [z for z in inner if nearer(z, q)]
    last: Optional[int] = toward_p[-1] if toward_p else p
    first: Optional[int] = toward_q[0] if toward_q else q

    clockwise = _cw_from(d, v, r)
    cw = clockwise[: clockwise.index(last) + 1]
    counter = clockwise[::-1]
    ccw = counter[: counter.index(first) + 1]
    return RayRanges(v, r, e, p, q, [Edge(v, z) for z in cw], [Edge(v, z) for z in ccw])
