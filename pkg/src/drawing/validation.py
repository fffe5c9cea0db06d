"""
Necessary-condition validator for rotation systems.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from .rotation import Drawing


@dataclass
class ValidationReport:
    """Outcome of `validate`; violations are plain messages."""

    violations: List[str] = field(default_factory=list)
    bad_quads: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(self.violations)


def validate(d: Drawing, max_reported: Optional[int] = None) -> ValidationReport:
    """
    Check permutations, the inverse table and the K4 condition.

    Args:
        d: Drawing to check
        max_reported: Stop listing K4 violations after this many (None = all)

    Returns:
        ValidationReport
    """
    report = ValidationReport()
    n = d.n
    perm_ok = True

    for v in d.vertices:
        rot = d.rotation(v)
        if sorted(rot) != [x for x in range(1, n + 1) if x != v]:
            report.violations.append(f"not a permutation at vertex {v}")
            perm_ok = False
            continue
        inv = d.inverse[v]
        if any(rot[int(inv[x])] != x for x in rot):
            report.violations.append(f"inverse rotation inconsistent at vertex {v}")
            perm_ok = False

    if not perm_ok:
        return report

    for quad in combinations(range(1, n + 1), 4):
        if d.k4_kind(quad) is None:
            report.bad_quads.append(quad)
            if max_reported is None or len(report.bad_quads) <= max_reported:
                a, b, c, e = quad
                report.violations.append(f"non-realizable K4 pattern on {{{a},{b},{c},{e}}}")
    return report
