"""
Planar point helpers for straight-line drawings.

Orientation tests, proper segment crossing and clockwise angular order.
The y axis points up, so clockwise means decreasing polar angle.
"""

import math
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

Point = Tuple[float, float]

EPS = 1e-12


def orientation(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of abc; positive for a counterclockwise turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """
    Proper crossing test for segments ab and cd.

    Touching at endpoints or collinear overlap does not count.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def intersection_point(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Crossing point of ab and cd, or None when they do not cross properly."""
    if not segments_cross(a, b, c, d):
        return None
    denom = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
    t = ((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / denom
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def clockwise_order(points: Sequence[Point], center: int) -> List[int]:
    """
    Indices of all other points sorted clockwise around points[center].

    Args:
        points: Point list (0-based)
        center: Index of the pivot

    Returns:
        0-based indices, starting from the largest polar angle
    """
    cx, cy = points[center]
    others = [j for j in range(len(points)) if j != center]
    return sorted(others, key=lambda j: -math.atan2(points[j][1] - cy, points[j][0] - cx))


def general_position_violation(points: Sequence[Point]) -> Optional[str]:
    """
    Describe the first degeneracy in a point set, or None.

    Checks duplicate points and collinear triples (1-based labels in messages).
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n < 3:
        return None

    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    np.fill_diagonal(dist, np.inf)
    i, j = np.unravel_index(np.argmin(dist), dist.shape)
    if dist[i, j] <= EPS:
        return f"duplicate points {min(i, j) + 1} and {max(i, j) + 1}"

    scale = max(1.0, float(np.abs(pts).max()))
    for a, b in combinations(range(n), 2):
        ab = pts[b] - pts[a]
        rest = pts - pts[a]
        cross = ab[0] * rest[:, 1] - ab[1] * rest[:, 0]
        cross[[a, b]] = np.inf
        c = int(np.argmin(np.abs(cross)))
        if abs(cross[c]) <= EPS * scale * scale:
            triple = sorted((a + 1, b + 1, c + 1))
            return f"collinear points {triple[0]}, {triple[1]}, {triple[2]}"
    return None


def convex_hull(points: Sequence[Point]) -> List[int]:
    """Hull vertex indices in counterclockwise order (monotone chain)."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    if len(order) < 3:
        return order

    def half(seq):
        chain: List[int] = []
        for i in seq:
            while len(chain) >= 2 and orientation(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def point_line_distance(p: Point, a: Point, b: Point) -> float:
    """Distance from p to the infinite line through a and b."""
    return abs(orientation(a, b, p)) / math.hypot(b[0] - a[0], b[1] - a[1])
