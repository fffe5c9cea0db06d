"""
Rotation systems of complete graphs.

A Drawing stores, for every vertex 1..n, the clockwise cyclic order of the
other n-1 vertices, together with the inverse table giving the position of
j in the rotation of i. Rotations are kept in canonical form: the rotation
of i starts at the smallest label greater than i (wrapping to 1 for i = n).
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import PreconditionError
from .geometry import Point
from .k4_table import K4Kind, get_k4_table, pattern_index

Quad = Tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge with canonical endpoints u < v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise PreconditionError(f"loop edge at vertex {self.u}")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(a, b)

    def other(self, x: int) -> int:
        """Endpoint opposite to x."""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise PreconditionError(f"vertex {x} is not an endpoint of {self}")

    def shares_vertex(self, other: "Edge") -> bool:
        return self.u in (other.u, other.v) or self.v in (other.u, other.v)

    def __contains__(self, x: int) -> bool:
        return x == self.u or x == self.v

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


def canonical_rotation(vertex: int, rotation: Sequence[int]) -> Tuple[int, ...]:
    """Rotate a cyclic sequence so it starts at the smallest label above vertex."""
    if not rotation:
        return tuple()
    larger = [x for x in rotation if x > vertex]
    start_label = min(larger) if larger else min(rotation)
    start = list(rotation).index(start_label)
    return tuple(rotation[start:]) + tuple(rotation[:start])


class Drawing:
    """
    Immutable rotation system of K_n, optionally backed by coordinates.

    Rotations are given for vertices 1..n in order. Entries that are not a
    permutation of the other vertices are tolerated here so that
    `validate` can report them; predicates assume a valid drawing.
    """

    def __init__(self, rotations: Sequence[Sequence[int]],
                 coords: Optional[Sequence[Point]] = None):
        """
        Initialize a drawing.

        Args:
            rotations: rotations[i-1] is the clockwise rotation of vertex i
            coords: Optional coordinates, coords[i-1] for vertex i
        """
        n = len(rotations)
        if n < 3:
            raise PreconditionError(f"drawings need n >= 3, got n={n}")
        for i, rot in enumerate(rotations, start=1):
            if len(rot) != n - 1:
                raise PreconditionError(
                    f"rotation of vertex {i} has {len(rot)} entries, expected {n - 1}"
                )
            for x in rot:
                if not 1 <= int(x) <= n:
                    raise PreconditionError(f"rotation of vertex {i} names unknown vertex {x}")
        if coords is not None and len(coords) != n:
            raise PreconditionError(f"{len(coords)} coordinates given for n={n}")

        self.n = n
        # as given, kept for writing the drawing back out
        self._given: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in rot) for rot in rotations
        )
        self._rot: List[Tuple[int, ...]] = [tuple()] + [
            canonical_rotation(i, rot) for i, rot in enumerate(self._given, start=1)
        ]
        self.coords: Optional[Tuple[Point, ...]] = (
            tuple((float(x), float(y)) for x, y in coords) if coords is not None else None
        )

        # position of j in the rotation of i; -1 when absent
        self._pos: List[List[int]] = [[-1] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            row = self._pos[i]
            for idx, x in enumerate(self._rot[i]):
                if row[x] < 0:
                    row[x] = idx
        self._kinds: Dict[Quad, Optional[K4Kind]] = {}
        self._inverse: Optional[np.ndarray] = None

    # ------------------------------------------------------------------ access

    @property
    def rotations(self) -> Tuple[Tuple[int, ...], ...]:
        """Canonical rotations, index 0 holds vertex 1."""
        return tuple(self._rot[1:])

    def rotation(self, v: int) -> Tuple[int, ...]:
        return self._rot[v]

    @property
    def given_rotations(self) -> Tuple[Tuple[int, ...], ...]:
        """Rotations in the cyclic starting point they were supplied with."""
        return self._given

    def given_rotation(self, v: int) -> Tuple[int, ...]:
        return self._given[v - 1]

    @property
    def inverse(self) -> np.ndarray:
        """Read-only (n+1) x (n+1) array; inverse[i, j] = position of j at i."""
        if self._inverse is None:
            arr = np.array(self._pos, dtype=np.int64)
            arr.flags.writeable = False
            self._inverse = arr
        return self._inverse

    @property
    def has_coords(self) -> bool:
        return self.coords is not None

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def position(self, center: int, x: int) -> int:
        return self._pos[center][x]

    def edges(self) -> List[Edge]:
        """All C(n,2) edges in canonical order."""
        return [Edge(a, b) for a, b in combinations(range(1, self.n + 1), 2)]

    def star(self, v: int) -> List[Edge]:
        """Edges at v in rotation order."""
        return [Edge(v, x) for x in self._rot[v]]

    # ---------------------------------------------------------- cyclic order

    def cw_offset(self, center: int, a: int, x: int) -> int:
        """Clockwise steps from a to x in the rotation of center."""
        pos = self._pos[center]
        return (pos[x] - pos[a]) % (self.n - 1)

    def between_cw(self, center: int, a: int, x: int, b: int) -> bool:
        """
        True iff x lies strictly clockwise after a and before b around center.

        With a == b the interval is the full turn minus a itself.
        """
        pos = self._pos[center]
        m = self.n - 1
        off_x = (pos[x] - pos[a]) % m
        if a == b:
            return off_x > 0
        return 0 < off_x < (pos[b] - pos[a]) % m

    # -------------------------------------------------------------- K4 layer

    def k4_bits(self, quad: Sequence[int]) -> Tuple[int, int, int, int]:
        """Orientation bits of the sub-rotation system on four vertices."""
        q = sorted(quad)
        m = self.n - 1
        bits = []
        for j in range(4):
            x, y, z = [q[k] for k in range(4) if k != j]
            pos = self._pos[q[j]]
            bits.append(0 if (pos[y] - pos[x]) % m < (pos[z] - pos[x]) % m else 1)
        return tuple(bits)

    def k4_kind(self, quad: Sequence[int]) -> Optional[K4Kind]:
        """K4Kind of the induced pattern (None if non-realizable); memoized."""
        key = tuple(sorted(quad))
        try:
            return self._kinds[key]
        except KeyError:
            kind = get_k4_table().lookup(pattern_index(self.k4_bits(key)))
            self._kinds[key] = kind
            return kind

    # ------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, Drawing):
            return NotImplemented
        return self.n == other.n and self._rot == other._rot

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._rot)))

    def __repr__(self) -> str:
        kind = "coords" if self.has_coords else "rotation-only"
        return f"Drawing(n={self.n}, {kind})"
