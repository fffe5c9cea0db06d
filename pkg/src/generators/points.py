"""
Straight-line drawings from point sets.
"""

import logging
import math
from typing import List, Sequence

import numpy as np

from ..drawing.geometry import Point, clockwise_order, general_position_violation
from ..drawing.rotation import Drawing
from ..exceptions import PreconditionError

log = logging.getLogger(__name__)

MAX_RESAMPLES = 1000


def rotation_from_points(points: Sequence[Point]) -> Drawing:
    """
    Rectilinear drawing: each rotation is the clockwise angular order.

    Raises:
        PreconditionError: on fewer than 3 points, duplicates or collinear triples
    """
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 3:
        raise PreconditionError(f"need at least 3 points, got {len(pts)}")
    problem = general_position_violation(pts)
    if problem:
        raise PreconditionError(f"points not in general position: {problem}")
    rotations = [[j + 1 for j in clockwise_order(pts, i)] for i in range(len(pts))]
    return Drawing(rotations, pts)


def circle_points(n: int, radius: float = 1.0) -> List[Point]:
    """n points on a circle, labelled clockwise starting at the top."""
    return [(radius * math.sin(2 * math.pi * i / n), radius * math.cos(2 * math.pi * i / n))
            for i in range(n)]


def gen_convex(n: int) -> Drawing:
    """Convex position: vertex i sees i+1, ..., n, 1, ..., i-1 clockwise."""
    if n < 3:
        raise PreconditionError(f"drawings need n >= 3, got n={n}")
    rotations = [[(i + c - 1) % n + 1 for c in range(1, n)] for i in range(1, n + 1)]
    return Drawing(rotations, circle_points(n))


def gen_perturbed(n: int, seed: int, inner: bool = False) -> Drawing:
    """
    Convex points jittered radially (same rotation system as gen_convex).

    With inner=True the last point is pulled towards the centre so that it
    leaves the convex hull, which changes the rotation system.
    """
    if n < 3:
        raise PreconditionError(f"drawings need n >= 3, got n={n}")
    rng = np.random.default_rng(seed)
    # small enough that every point stays outside the chord of its neighbours
    amplitude = min(0.05, 0.2 * (1.0 - math.cos(2 * math.pi / n)))
    radii = 1.0 + rng.uniform(-amplitude, amplitude, size=n)
    pts = [(r * x, r * y) for r, (x, y) in zip(radii, circle_points(n))]
    if inner:
        x, y = pts[-1]
        pts[-1] = (0.3 * x + 0.01, 0.3 * y + 0.01)
    return rotation_from_points(pts)


def gen_random(n: int, seed: int) -> Drawing:
    """Uniform points in the unit square, resampled until in general position."""
    if n < 3:
        raise PreconditionError(f"drawings need n >= 3, got n={n}")
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_RESAMPLES):
        pts = [tuple(map(float, p)) for p in rng.random((n, 2))]
        if general_position_violation(pts) is None:
            if attempt:
                log.debug("random points in general position after %d resamples", attempt)
            return rotation_from_points(pts)
    raise PreconditionError(f"no general-position sample after {MAX_RESAMPLES} attempts")
