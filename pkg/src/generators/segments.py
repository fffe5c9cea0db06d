"""
Segment instances: sets of segments that are pairwise disjoint or cross
properly, with a target number of pairwise disjoint segments.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..drawing.geometry import (Point, convex_hull, general_position_violation,
                                segments_cross)
from ..exceptions import PreconditionError

log = logging.getLogger(__name__)

Segment = Tuple[Point, Point]

MAX_BRUTE_SEGMENTS = 20
STRETCH_FACTORS = (2.0, 4.0, 8.0, 16.0, 32.0, 64.0)


@dataclass(frozen=True)
class SegmentInstance:
    """Segments (v_i, t_i) plus an optional target k."""

    segments: Tuple[Segment, ...]
    k: Optional[int] = None

    @classmethod
    def from_list(cls, segments: Sequence[Sequence[Sequence[float]]],
                  k: Optional[int] = None) -> "SegmentInstance":
        segs = tuple(
            ((float(a[0]), float(a[1])), (float(b[0]), float(b[1]))) for a, b in segments
        )
        return cls(segs, k)

    @property
    def s(self) -> int:
        return len(self.segments)

    def endpoints(self) -> List[Point]:
        pts: List[Point] = []
        for a, b in self.segments:
            pts.extend((a, b))
        return pts

    def flipped(self, mask: int) -> "SegmentInstance":
        """Swap the endpoints of segment i whenever bit i of mask is set."""
        segs = tuple((b, a) if mask >> i & 1 else (a, b)
                     for i, (a, b) in enumerate(self.segments))
        return SegmentInstance(segs, self.k)


def crossing_graph(inst: SegmentInstance) -> nx.Graph:
    """Graph on segment indices, adjacent when the segments cross."""
    graph = nx.Graph()
    graph.add_nodes_from(range(inst.s))
    for i, j in combinations(range(inst.s), 2):
        (a, b), (c, d) = inst.segments[i], inst.segments[j]
        if segments_cross(a, b, c, d):
            graph.add_edge(i, j)
    return graph


def hull_size(inst: SegmentInstance) -> int:
    return len(convex_hull(inst.endpoints()))


def crossing_pattern(inst: SegmentInstance) -> frozenset:
    return frozenset(tuple(sorted(e)) for e in crossing_graph(inst).edges())


def has_triangular_hull(inst: SegmentInstance) -> bool:
    """Endpoint hull is a triangle with its corners on three different segments."""
    hull = convex_hull(inst.endpoints())
    return len(hull) == 3 and len({j // 2 for j in hull}) == 3


def _stretched(inst: SegmentInstance, ends: Dict[int, int], factor: float) -> SegmentInstance:
    """Move endpoint ends[i] of segment i away from the other endpoint, factor times as far."""
    segs = list(inst.segments)
    for i, end in ends.items():
        anchor, moving = segs[i][1 - end], segs[i][end]
        far = (anchor[0] + factor * (moving[0] - anchor[0]),
               anchor[1] + factor * (moving[1] - anchor[1]))
        segs[i] = (far, anchor) if end == 0 else (anchor, far)
    return SegmentInstance(tuple(segs), inst.k)


def triangular_hull(inst: SegmentInstance) -> SegmentInstance:
    """
    Stretch three segments outward until the endpoint hull is a triangle
    with corners on three different segments.

    Each stretched segment keeps its line and its inner endpoint, and a
    stretch is only accepted when every crossing and every disjoint pair
    survives. Instances that already qualify come back unchanged, and so do
    instances with no acceptable stretch (always the case below three
    segments), with a warning.
    """
    if has_triangular_hull(inst):
        return inst
    if inst.s >= 3:
        pattern = crossing_pattern(inst)
        for factor in STRETCH_FACTORS:
            for trio in combinations(range(inst.s), 3):
                for ends in product((0, 1), repeat=3):
                    candidate = _stretched(inst, dict(zip(trio, ends)), factor)
                    if (has_triangular_hull(candidate)
                            and crossing_pattern(candidate) == pattern
                            and general_position_violation(candidate.endpoints()) is None):
                        log.info("stretched segments %s by %g for a triangular hull",
                                 list(trio), factor)
                        return candidate
    if inst.s > 1:
        log.warning("no triangular endpoint hull for %d segments (hull has %d vertices)",
                    inst.s, hull_size(inst))
    return inst


def validate_segments(inst: SegmentInstance) -> None:
    """
    Check general position and the disjoint-or-crossing condition.

    Raises:
        PreconditionError: on the first violation
    """
    if inst.s < 1:
        raise PreconditionError("segment instance is empty")
    problem = general_position_violation(inst.endpoints())
    if problem:
        raise PreconditionError(f"segment endpoints not in general position: {problem}")
    # general position already rules out touching and overlapping segments
    if inst.k is not None and not 0 <= inst.k <= inst.s:
        raise PreconditionError(f"target k={inst.k} outside 0..{inst.s}")

def max_disjoint_segments(inst: SegmentInstance) -> int:
    """Largest number of pairwise disjoint segments, by subset enumeration."""
    if inst.s > MAX_BRUTE_SEGMENTS:
        raise PreconditionError(f"brute force limited to {MAX_BRUTE_SEGMENTS} segments")
    graph = crossing_graph(inst)
    for size in range(inst.s, 0, -1):
        for subset in combinations(range(inst.s), size):
            if not any(graph.has_edge(i, j) for i, j in combinations(subset, 2)):
                return size
    return 0


def gen_random_segments(s: int, seed: int, attempts: int = 1000) -> SegmentInstance:
    """Random segments with endpoints in the unit square, in general position."""
    if s < 1:
        raise PreconditionError(f"need at least one segment, got s={s}")
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        inst = SegmentInstance.from_list(rng.random((s, 2, 2)).tolist())
        if general_position_violation(inst.endpoints()) is None:
            return inst
    raise PreconditionError(f"no general-position segment sample after {attempts} attempts")
