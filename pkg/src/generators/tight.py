"""
Drawings whose smallest maximal plane subgraphs meet the ceil(3n/2) bound.

Points u0, u1, ..., uk, v_{k+1}, vk, ..., v1 sit clockwise in convex
position. The diagonals u_i v_{i+1} and v_i u_{i+1} (1 <= i < k) and the
edge u0 v_{k+1} leave the hull and run outside it, behaving like chords of
an outer disk; every other edge is straight. For odd n an extra point u0'
sits between u0 and u1 with straight edges only.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Set

from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TightInstance:
    """Drawing, its designated maximal plane subgraph, and vertex names."""

    drawing: Drawing
    designated: List[Edge]
    labels: Dict[str, int] = field(default_factory=dict)
    rerouted: List[Edge] = field(default_factory=list)


def _hull_names(n: int) -> List[str]:
    odd = n % 2 == 1
    k = (n - 3) // 2 if odd else (n - 2) // 2
    names = ["u0"] + (["u0'"] if odd else [])
    names += [f"u{i}" for i in range(1, k + 1)]
    names += [f"v{i}" for i in range(k + 1, 0, -1)]
    return names


def gen_tight(n: int) -> TightInstance:
    """
    Build the tight-bound drawing on n >= 8 vertices.

    Raises:
        PreconditionError: for n < 8
    """
    if n < 8:
        raise PreconditionError(f"the tight family starts at n=8, got n={n}")
    names = _hull_names(n)
    label = {name: i for i, name in enumerate(names, start=1)}
    k = (n - 3) // 2 if n % 2 else (n - 2) // 2

    rerouted: Set[Edge] = {Edge(label["u0"], label[f"v{k + 1}"])}
    for i in range(1, k):
        rerouted.add(Edge(label[f"u{i}"], label[f"v{i + 1}"]))
        rerouted.add(Edge(label[f"v{i}"], label[f"u{i + 1}"]))

    rotations = []
    for x in range(1, n + 1):
        forward = [(x + c - 1) % n + 1 for c in range(1, n)]
        straight = [y for y in forward if Edge(x, y) not in rerouted]
        outside = [y for y in reversed(forward) if Edge(x, y) in rerouted]
        rotations.append(straight + outside)
    drawing = Drawing(rotations)

    designated = {Edge(x, x % n + 1) for x in range(1, n + 1)}
    designated |= {Edge(label[f"u{i}"], label[f"v{i}"]) for i in range(1, k + 1)}
    designated.add(Edge(label["u0"], label[f"v{k + 1}"]))
    if n % 2:
        designated.add(Edge(label["u0"], label["u1"]))
    log.debug("tight drawing n=%d: %d rerouted edges, %d designated", n, len(rerouted),
              len(designated))
    return TightInstance(drawing, sorted(designated), label, sorted(rerouted))
