"""
Drawing gadget for the maximum independent set of segments.

Each segment v_i t_i gets two helper points u_i and w_i close to v_i, just
counterclockwise and just clockwise of the direction to t_i. Starting from
the straight-line drawing on the 4s points, every edge u_i p that crosses
v_i w_i is redrawn along u_i v_i, around v_i and out along v_i p; the same
happens to every edge w_i q crossing v_i u_i (turning the other way) and to
u_i w_i. The edges u_i v_i and w_i v_i end up crossed by nothing.

When the 4s points span a triangle the largest plane subgraph has
11s - 6 + k edges, k being the most segments that can be chosen pairwise
disjoint. Instances are stretched towards such a hull first; that needs
at least three segments, and below that the count can fall short of the
target.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from ..drawing.geometry import Point, convex_hull, point_line_distance, segments_cross
from ..drawing.predicates import crosses
from ..drawing.rotation import Drawing, Edge
from ..drawing.validation import validate
from ..exceptions import InvariantError, PreconditionError
from .points import rotation_from_points
from .segments import (MAX_BRUTE_SEGMENTS, SegmentInstance, max_disjoint_segments,
                       triangular_hull, validate_segments)

log = logging.getLogger(__name__)

MAX_HALVINGS = 30
MAX_FLIP_SEARCH = 12


def role_label(role: str, i: int) -> int:
    """Vertex id of v_i, u_i, w_i or t_i (i is 1-based)."""
    return 4 * i - 3 + "vuwt".index(role)


@dataclass(frozen=True)
class ReductionOutput:
    """Rerouted drawing, vertex roles and the target edge count."""

    drawing: Drawing
    roles: Dict[int, str]
    k: Optional[int]
    target: Optional[int]
    flips: int = 0
    points: Tuple[Point, ...] = field(default_factory=tuple)
    rerouted: Tuple[Edge, ...] = field(default_factory=tuple)
    instance: Optional[SegmentInstance] = None

    @property
    def hull_triangle(self) -> bool:
        """Whether the 4s points span a triangle, the case where target is exact."""
        return len(convex_hull(self.points)) == 3

    @property
    def protected_edges(self) -> List[Edge]:
        """The edges u_i v_i and w_i v_i."""
        s = self.drawing.n // 4
        edges = []
        for i in range(1, s + 1):
            v = role_label("v", i)
            edges += [Edge(v, role_label("u", i)), Edge(v, role_label("w", i))]
        return edges


def _disc(inst: SegmentInstance, i: int) -> Tuple[float, float]:
    """
    Radius and angular offset for the helpers of segment i (0-based).

    The radius is half the distance from v_i to the nearest line through two
    other endpoints, so no such line meets the disc.
    """
    v, t = inst.segments[i]
    others = [p for seg in inst.segments for p in seg if p != v]
    reach = min(math.hypot(p[0] - v[0], p[1] - v[1]) for p in others)
    for a, b in combinations(others, 2):
        reach = min(reach, point_line_distance(v, a, b))

    theta = math.atan2(t[1] - v[1], t[0] - v[0])
    gap = math.pi
    for p in others:
        if p == t:
            continue
        diff = abs(math.atan2(p[1] - v[1], p[0] - v[0]) - theta) % (2 * math.pi)
        gap = min(gap, diff, 2 * math.pi - diff)
    # helpers stay inside the angle between t_i and its angular neighbours
    return 0.5 * reach, min(1.0 / (8 * inst.s), gap / 2)


def gadget_points(inst: SegmentInstance, shrink: int = 0) -> List[Point]:
    """The 4s points v_i, u_i, w_i, t_i in label order."""
    pts: List[Point] = []
    for i, (v, t) in enumerate(inst.segments):
        radius, eps = _disc(inst, i)
        radius /= 2 ** shrink
        theta = math.atan2(t[1] - v[1], t[0] - v[0])
        u = (v[0] + radius * math.cos(theta + eps), v[1] + radius * math.sin(theta + eps))
        w = (v[0] + radius * math.cos(theta - eps), v[1] + radius * math.sin(theta - eps))
        pts.extend((v, u, w, t))
    return pts


def _placement_ok(base: Drawing, s: int) -> bool:
    """Around every v_i the rotation reads u_i, t_i, w_i consecutively."""
    for i in range(1, s + 1):
        v, u, w, t = (role_label(r, i) for r in "vuwt")
        if base.cw_offset(v, u, t) != 1 or base.cw_offset(v, t, w) != 1:
            return False
    return True


def _straight_drawing(inst: SegmentInstance) -> Tuple[List[Point], Drawing]:
    for shrink in range(MAX_HALVINGS):
        pts = gadget_points(inst, shrink)
        try:
            base = rotation_from_points(pts)
        except PreconditionError:
            continue
        if _placement_ok(base, inst.s):
            if shrink:
                log.debug("helper discs halved %d times", shrink)
            return pts, base
    raise PreconditionError("could not place helper points around the segment endpoints")


def _reroute_sets(pts: List[Point], s: int) -> Tuple[Dict[int, List[int]], Dict[int, List[int]]]:
    """Per segment: far ends of edges at u_i crossing v_i w_i, and at w_i crossing v_i u_i."""
    n = 4 * s
    from_u: Dict[int, List[int]] = {}
    from_w: Dict[int, List[int]] = {}
    for i in range(1, s + 1):
        v, u, w = role_label("v", i), role_label("u", i), role_label("w", i)
        pv, pu, pw = pts[v - 1], pts[u - 1], pts[w - 1]
        rest = [x for x in range(1, n + 1) if x not in (v, u, w)]
        from_u[i] = [p for p in rest if segments_cross(pu, pts[p - 1], pv, pw)]
        from_w[i] = [q for q in rest if segments_cross(pw, pts[q - 1], pv, pu)]
    return from_u, from_w


def _conflict(pts: List[Point], s: int, from_u, from_w) -> Optional[str]:
    """Why this orientation cannot be rerouted, or None."""
    claimed: Set[Edge] = set()
    for i in range(1, s + 1):
        u, w = role_label("u", i), role_label("w", i)
        for e in [Edge(u, w)] + [Edge(u, p) for p in from_u[i]] + [Edge(w, q) for q in from_w[i]]:
            if e in claimed:
                return f"edge {e} would be rerouted twice"
            claimed.add(e)

    for i in range(1, s + 1):
        v = role_label("v", i)
        for p in from_u[i] + from_w[i]:
            for j in range(1, s + 1):
                if j == i:
                    continue
                vj = role_label("v", j)
                for helper in (role_label("u", j), role_label("w", j)):
                    if not {v, p} & {vj, helper} and segments_cross(
                            pts[v - 1], pts[p - 1], pts[vj - 1], pts[helper - 1]):
                        return f"leg ({v},{p}) crosses ({vj},{helper})"
    return None


def _reroute(base: Drawing, s: int, from_u, from_w) -> Tuple[Drawing, List[Edge]]:
    n = base.n
    key: List[Dict[int, float]] = [dict()] + [
        {y: float(base.position(x, y)) for y in base.rotation(x)} for x in range(1, n + 1)
    ]
    rerouted: List[Edge] = []
    step, arrive = 1.0 / (4 * n), 1.0 / (8 * n)

    for i in range(1, s + 1):
        v, u, w = role_label("v", i), role_label("u", i), role_label("w", i)
        bundle_u = sorted([w] + from_u[i], key=lambda y: base.cw_offset(v, u, y))
        for j, y in enumerate(bundle_u):
            key[u][y] = key[u][v] + (j + 1) * step
        bundle_w = sorted([u] + from_w[i], key=lambda y: base.cw_offset(v, y, w))
        for j, y in enumerate(bundle_w):
            key[w][y] = key[w][v] - (j + 1) * step
        for p in from_u[i]:
            key[p][u] = key[p][v] - arrive
        for q in from_w[i]:
            key[q][w] = key[q][v] + arrive
        rerouted += [Edge(u, w)] + [Edge(u, p) for p in from_u[i]] + [Edge(w, q) for q in from_w[i]]

    rotations = [sorted(key[x], key=key[x].get) for x in range(1, n + 1)]
    return Drawing(rotations), sorted(rerouted)


def _post_check(d: Drawing, out_protected: List[Edge]) -> Optional[str]:
    report = validate(d, max_reported=1)
    if not report.ok:
        return report.summary()
    for e in out_protected:
        for f in d.edges():
            if crosses(d, e, f):
                return f"protected edge {e} is crossed by {f}"
    return None


def gen_seg_reduction(inst: SegmentInstance) -> ReductionOutput:
    """
    Build the rerouted drawing for a segment instance.

    The instance is first stretched towards a triangular hull. Segment
    orientations (which endpoint plays v_i) are then searched until no edge
    would be rerouted from both ends.

    Raises:
        PreconditionError: on invalid instances or when no orientation works
        InvariantError: if every usable orientation fails the final checks
    """
    validate_segments(inst)
    inst = triangular_hull(inst)
    s = inst.s
    if s > MAX_FLIP_SEARCH:
        raise PreconditionError(f"orientation search limited to {MAX_FLIP_SEARCH} segments")
    k = inst.k
    if k is None and s <= MAX_BRUTE_SEGMENTS:
        k = max_disjoint_segments(inst)

    failure = None
    for mask in range(2 ** s):
        flipped = inst.flipped(mask)
        pts, base = _straight_drawing(flipped)
        from_u, from_w = _reroute_sets(pts, s)
        reason = _conflict(pts, s, from_u, from_w)
        if reason:
            log.debug("orientation %s rejected: %s", format(mask, f"0{s}b"), reason)
            continue
        drawing, rerouted = _reroute(base, s, from_u, from_w)
        roles = {role_label(r, i): f"{r}{i}" for i in range(1, s + 1) for r in "vuwt"}
        out = ReductionOutput(drawing, roles, k, None if k is None else 11 * s - 6 + k,
                              mask, tuple(pts), tuple(rerouted), flipped)
        failure = _post_check(drawing, out.protected_edges)
        if failure is None:
            log.info("segment gadget: n=%d, %d rerouted edges, orientation %s",
                     drawing.n, len(rerouted), format(mask, f"0{s}b"))
            return out
        log.warning("orientation %s fails final checks: %s", format(mask, f"0{s}b"), failure)

    if failure is not None:
        raise InvariantError(f"rerouted drawing failed its checks: {failure}")
    raise PreconditionError("every segment orientation reroutes some edge twice")
