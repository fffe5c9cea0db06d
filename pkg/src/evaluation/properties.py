"""
Property suites over drawings and plane subgraphs.

Every check returns a list of human-readable violations; an empty list
means the property holds. Samplers take a numpy Generator so that runs
are reproducible from a seed.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..augmentation.maximal import greedy_maximal, maximal_connected_fast, star_plus_tree
from ..augmentation.ranges import fr_ranges
from ..augmentation.rays import uncrossed_rays_brute, uncrossed_rays_fast
from ..drawing.geometry import segments_cross
from ..drawing.predicates import crosses, crosses_any
from ..drawing.rotation import Drawing, Edge
from ..structure.connectivity import structure_report
from ..structure.cycles import compatible_diagonal_count, cycle_diagonals
from ..structure.plane import PlaneSubgraph

log = logging.getLogger(__name__)


def sample_plane_subgraph(d: Drawing, rng: np.random.Generator, size: Optional[int] = None,
                          connected: bool = False) -> PlaneSubgraph:
    """
    Random plane subgraph with at most size edges.

    Edges are tried in random order and kept when they cross nothing kept so
    far; with connected=True an edge must also touch the vertices reached.
    """
    order = [d.edges()[i] for i in rng.permutation(d.n * (d.n - 1) // 2)]
    limit = len(order) if size is None else size
    chosen: List[Edge] = []
    reached = set()
    progress = True
    while progress and len(chosen) < limit:
        progress = False
        for e in order:
            if len(chosen) >= limit:
                break
            if e in chosen or (connected and reached and not (e.u in reached or e.v in reached)):
                continue
            if crosses_any(d, e, chosen):
                continue
            chosen.append(e)
            reached.update(e)
            progress = True
        if not connected:
            break
    return PlaneSubgraph(d, chosen, check=False)


def crossing_oracle_violations(d: Drawing) -> List[str]:
    """Disagreements between the rotation crossing test and segment geometry."""
    pts = d.coords
    problems = []
    edges = d.edges()
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if e.shares_vertex(f):
                continue
            geometric = segments_cross(pts[e.u - 1], pts[e.v - 1], pts[f.u - 1], pts[f.v - 1])
            if crosses(d, e, f) != geometric:
                problems.append(f"{e} and {f}: rotation says {not geometric}, geometry {geometric}")
    return problems


def ray_violations(d: Drawing, F: PlaneSubgraph) -> List[str]:
    """
    Uncrossed rays for connected F.

    The fast walk must match brute force at every vertex, and each vertex
    outside F must see at least two uncrossed rays.
    """
    problems = []
    for v in d.vertices:
        brute = uncrossed_rays_brute(d, F, v)
        fast = uncrossed_rays_fast(d, F, v)
        if brute != fast:
            missing = sorted(brute - fast)
            extra = sorted(fast - brute)
            problems.append(f"vertex {v}: fast walk misses {missing}, adds {extra}")
        if F.degree(v) == 0 and len(brute) < 2:
            problems.append(f"vertex {v} outside F has {len(brute)} uncrossed rays")
    return problems


def range_violations(d: Drawing, F: PlaneSubgraph) -> List[str]:
    """Each range of every crossed probe ray holds an uncrossed ray."""
    problems = []
    for v in d.vertices:
        free = uncrossed_rays_brute(d, F, v)
        for r in d.rotation(v):
            probe = Edge(v, r)
            if probe in free or probe in F or not crosses_any(d, probe, F.edges):
                continue
            ranges = fr_ranges(d, F, v, r)
            if not any(e in free for e in ranges.cw):
                problems.append(f"ray ({v},{r}): clockwise range has no uncrossed ray")
            if not any(e in free for e in ranges.ccw):
                problems.append(f"ray ({v},{r}): counterclockwise range has no uncrossed ray")
    return problems


def maximal_violations(F: PlaneSubgraph) -> List[str]:
    """Structural properties every maximal plane subgraph has."""
    return structure_report(F).failures()


def star_tree_violations(d: Drawing) -> List[str]:
    """The star of each vertex plus a tree on the rest is plane with 2n-3 edges."""
    problems = []
    for v in d.vertices:
        witness = star_plus_tree(d, v)
        if len(witness) != 2 * d.n - 3:
            problems.append(f"star plus tree at {v} has {len(witness)} edges")
    return problems


def cycle_violations(d: Drawing, cycle: Sequence[int]) -> List[str]:
    """Empty-face and diagonal-count properties of a plane cycle."""
    problems = []
    diags = cycle_diagonals(d, cycle)
    if not diags.empty_face_ok():
        problems.append(f"cycle {list(cycle)}: diagonals on both sides although one side is empty")
    k = len(cycle)
    if k >= 6:
        count = compatible_diagonal_count(d, cycle)
        if count < (k + 1) // 2:
            problems.append(f"cycle {list(cycle)}: only {count} compatible diagonals")
    return problems


@dataclass
class SuiteResult:
    """Counts of checked objects and the violations found."""

    drawings: int = 0
    subgraphs: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def run_suite(drawings: Sequence[Drawing], seed: int, samples: int = 3) -> SuiteResult:
    """
    Run every property over the drawings with sampled subgraphs.

    Per drawing: the crossing oracle (when coordinates exist), the star
    witnesses, both maximal constructions, and samples of connected and
    arbitrary plane subgraphs for the ray properties.
    """
    rng = np.random.default_rng(seed)
    result = SuiteResult()
    for d in drawings:
        result.drawings += 1
        found: List[str] = []
        if d.has_coords:
            found += crossing_oracle_violations(d)
        found += star_tree_violations(d)
        for F in (greedy_maximal(d), maximal_connected_fast(d, PlaneSubgraph(d, d.star(1)))):
            found += maximal_violations(F)
            result.subgraphs += 1
        for _ in range(samples):
            size = int(rng.integers(1, d.n))
            found += ray_violations(d, sample_plane_subgraph(d, rng, size, connected=True))
            found += range_violations(d, sample_plane_subgraph(d, rng, size))
            result.subgraphs += 2
        result.violations += [f"n={d.n}: {msg}" for msg in found]
    if result.violations:
        log.warning("property suite: %d violations", len(result.violations))
    return result
