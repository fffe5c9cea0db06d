"""
Derived drawings: induced sub-drawings, relabelings and mirror images.
"""

from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from ..exceptions import PreconditionError
from .rotation import Drawing

Permutation = Union[Mapping[int, int], Sequence[int]]


def sub_drawing(d: Drawing, vertices: Iterable[int]) -> Tuple[Drawing, Dict[int, int]]:
    """
    Drawing induced on a vertex subset.

    Args:
        d: Source drawing
        vertices: Kept vertices (at least three)

    Returns:
        (sub-drawing labelled 1..k in increasing old order, old -> new label map)
    """
    kept = sorted(set(vertices))
    if len(kept) < 3:
        raise PreconditionError(f"sub-drawing needs at least 3 vertices, got {len(kept)}")
    label = {old: new for new, old in enumerate(kept, start=1)}
    rotations = [[label[x] for x in d.rotation(v) if x in label] for v in kept]
    coords = [d.coords[v - 1] for v in kept] if d.coords is not None else None
    return Drawing(rotations, coords), label


def _as_map(n: int, perm: Permutation) -> Dict[int, int]:
    if isinstance(perm, Mapping):
        mapping = {int(k): int(v) for k, v in perm.items()}
    else:
        mapping = {i: int(p) for i, p in enumerate(perm, start=1)}
    if sorted(mapping) != list(range(1, n + 1)) or sorted(mapping.values()) != list(range(1, n + 1)):
        raise PreconditionError(f"relabeling is not a permutation of 1..{n}")
    return mapping


def relabel(d: Drawing, perm: Permutation) -> Drawing:
    """Rename vertex i to perm[i]; crossings move with the labels."""
    mapping = _as_map(d.n, perm)
    rotations = [[] for _ in range(d.n)]
    coords = [None] * d.n if d.coords is not None else None
    for v in d.vertices:
        rotations[mapping[v] - 1] = [mapping[x] for x in d.rotation(v)]
        if coords is not None:
            coords[mapping[v] - 1] = d.coords[v - 1]
    return Drawing(rotations, coords)


def mirror(d: Drawing) -> Drawing:
    """Mirror image: every rotation reversed, coordinates reflected in x."""
    rotations = [list(reversed(d.rotation(v))) for v in d.vertices]
    coords = [(-x, y) for x, y in d.coords] if d.coords is not None else None
    return Drawing(rotations, coords)
