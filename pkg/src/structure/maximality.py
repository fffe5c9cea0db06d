"""
Maximality of plane subgraphs and the edge-count lower bound.
"""

import math
from typing import Optional, Tuple

from ..drawing.predicates import crosses_any
from ..drawing.rotation import Edge
from .plane import PlaneSubgraph


def lower_bound(n: int) -> int:
    """Fewest edges a maximal plane subgraph of K_n can have (n >= 3)."""
    return min(math.ceil(3 * n / 2), 2 * n - 3)


def addable_edge(F: PlaneSubgraph) -> Optional[Edge]:
    """First non-member edge crossing no member, or None."""
    for e in F.drawing.edges():
        if e not in F and not crosses_any(F.drawing, e, F.edges):
            return e
    return None


def is_maximal(F: PlaneSubgraph) -> Tuple[bool, Optional[Edge]]:
    """
    Check maximality by testing every non-member edge.

    Returns:
        (True, None) when maximal, else (False, an addable edge)
    """
    witness = addable_edge(F)
    return witness is None, witness
