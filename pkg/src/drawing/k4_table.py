"""
Crossing behaviour of four-vertex rotation systems.

Every 4-subset of a good drawing of K_n induces a rotation system of K4.
Writing the subset as q0 < q1 < q2 < q3, vertex q_j gets one orientation
bit: 0 when its three neighbours appear clockwise in increasing label order,
1 otherwise. The 4-bit pattern decides which (if any) pair of opposite edges
crosses. The table is derived by sampling straight-line K4 drawings rather
than written down by hand.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import InvariantError
from .geometry import Point, clockwise_order, segments_cross

log = logging.getLogger(__name__)

PATTERN_COUNT = 16


class K4Kind(IntEnum):
    """Image of a sign pattern: a crossing matching, or planar."""

    CROSS_01_23 = 0  # q0q1 crosses q2q3
    CROSS_02_13 = 1  # q0q2 crosses q1q3
    CROSS_03_12 = 2  # q0q3 crosses q1q2
    PLANAR = 3


def matching_index(i: int, j: int) -> int:
    """Index of the perfect matching of {0,1,2,3} containing the pair (i, j)."""
    a, b = (i, j) if i < j else (j, i)
    if (a, b) in ((0, 1), (2, 3)):
        return 0
    if (a, b) in ((0, 2), (1, 3)):
        return 1
    return 2


def pattern_index(bits: Sequence[int]) -> int:
    """Pack four orientation bits (bit j for q_j) into an integer 0..15."""
    return sum((b & 1) << j for j, b in enumerate(bits))


def orientation_bit(cyclic: Sequence[int], x: int, y: int, z: int) -> int:
    """
    Bit for three labels x < y < z inside a clockwise cyclic sequence.

    Returns 0 when x, y, z occur clockwise in that order.
    """
    m = len(cyclic)
    pos = {label: idx for idx, label in enumerate(cyclic)}
    return 0 if (pos[y] - pos[x]) % m < (pos[z] - pos[x]) % m else 1


@dataclass(frozen=True)
class K4Table:
    """Frozen map from the 16 sign patterns to K4Kind (None = non-realizable)."""

    entries: Tuple[Optional[K4Kind], ...]

    def lookup(self, index: int) -> Optional[K4Kind]:
        return self.entries[index]

    def realizable(self) -> List[int]:
        return [i for i, kind in enumerate(self.entries) if kind is not None]

    def crossing_patterns(self) -> List[int]:
        return [i for i, kind in enumerate(self.entries)
                if kind is not None and kind != K4Kind.PLANAR]

    def planar_patterns(self) -> List[int]:
        return [i for i, kind in enumerate(self.entries) if kind == K4Kind.PLANAR]

    def is_mirror_symmetric(self) -> bool:
        """Flipping all four bits (mirror image) keeps the image."""
        return all(self.entries[i] == self.entries[i ^ 0b1111] for i in range(PATTERN_COUNT))


def _labelled_pattern(points: Sequence[Point]) -> Tuple[int, K4Kind]:
    """Sign pattern and crossing kind for four labelled points (label = index)."""
    bits = []
    for j in range(4):
        x, y, z = [k for k in range(4) if k != j]
        bits.append(orientation_bit(clockwise_order(points, j), x, y, z))

    kind = K4Kind.PLANAR
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        if segments_cross(points[a], points[b], points[c], points[d]):
            kind = K4Kind(matching_index(a, b))
    return pattern_index(bits), kind


def _sample_configurations() -> List[List[Point]]:
    """Convex quadrilateral and triangle-with-inner-point shapes, plus mirrors."""
    square = [(0.0, 1.0), (1.0, 0.1), (0.1, -1.0), (-1.0, 0.0)]
    triangle = [(0.0, 1.0), (0.9, -0.6), (-0.8, -0.5), (0.05, 0.0)]
    shapes = []
    for base in (square, triangle):
        for mirrored in (False, True):
            pts = [(-x, y) for x, y in base] if mirrored else list(base)
            for perm in permutations(range(4)):
                shapes.append([pts[perm[k]] for k in range(4)])
    return shapes


def build_k4_table() -> K4Table:
    """
    Derive the K4 table from straight-line samples.

    Raises:
        InvariantError: if samples disagree or fail to cover 8 patterns
    """
    seen: Dict[int, K4Kind] = {}
    for pts in _sample_configurations():
        index, kind = _labelled_pattern(pts)
        if index in seen and seen[index] != kind:
            raise InvariantError(f"K4 sampling is inconsistent for pattern {index:04b}")
        seen[index] = kind

    table = K4Table(tuple(seen.get(i) for i in range(PATTERN_COUNT)))
    crossing, planar = len(table.crossing_patterns()), len(table.planar_patterns())
    if crossing != 6 or planar != 2:
        raise InvariantError(
            f"K4 sampling covered {crossing} crossing and {planar} planar patterns, expected 6 and 2"
        )
    log.debug("K4 table built: realizable patterns %s", table.realizable())
    return table


@lru_cache(maxsize=1)
def get_k4_table() -> K4Table:
    """Shared table instance, built on first use."""
    return build_k4_table()
