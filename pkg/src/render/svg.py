"""
SVG 1.1 output for drawings that carry point coordinates.

Edges are drawn as straight segments between the points; the rotation
system is not consulted, so only rectilinear drawings render faithfully.
"""

import logging
from itertools import combinations
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..drawing.geometry import segments_cross
from ..drawing.rotation import Drawing, Edge
from ..exceptions import PreconditionError

log = logging.getLogger(__name__)

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width).3f" height="%(height).3f" viewBox="0 0 %(width).3f %(height).3f" \
version="1.1" xmlns="http://www.w3.org/2000/svg">
<g transform="translate(%(trans_x).3f,%(trans_y).3f)">
<rect x="%(neg_trans_x).3f" y="%(neg_trans_y).3f" width="%(width).3f" height="%(height).3f" \
style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</g></svg>
"""

EDGE_STROKE = "#9e9e9e"
HIGHLIGHT_STROKE = "#d62728"


class SVG:
    """Accumulates drawing commands and tracks the bounding box."""

    def __init__(self, scale: float = 200.0):
        self.scale = scale
        self.min_x: Optional[float] = None
        self.max_x: Optional[float] = None
        self.min_y: Optional[float] = None
        self.max_y: Optional[float] = None
        self.commands: List[str] = []

    def _map(self, x: float, y: float):
        # SVG y grows downwards
        return x * self.scale, -y * self.scale

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def line(self, a, b, stroke: str = EDGE_STROKE, width: float = 1.0,
             title: Optional[str] = None) -> None:
        x1, y1 = self._map(*a)
        x2, y2 = self._map(*b)
        self.require(x1, y1)
        self.require(x2, y2)
        body = f"<title>{title}</title>" if title else ""
        self.commands.append(
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            f'stroke="{stroke}" stroke-width="{width:.1f}">{body}</line>'
        )

    def circle(self, p, radius: float = 4.0, fill: str = "#000000") -> None:
        x, y = self._map(*p)
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        self.commands.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{radius:.1f}" fill="{fill}"/>')

    def text(self, p, label: str, size: float = 12.0) -> None:
        x, y = self._map(*p)
        x, y = x + 6.0, y - 6.0
        self.require(x, y - size)
        self.require(x + size * len(label), y)
        self.commands.append(
            f'<text x="{x:.3f}" y="{y:.3f}" font-family="sans-serif" '
            f'font-size="{size:.1f}">{label}</text>'
        )

    def document(self) -> str:
        if self.min_x is None:
            return PREAMBLE % dict(width=0.0, height=0.0, trans_x=0.0, trans_y=0.0,
                                   neg_trans_x=0.0, neg_trans_y=0.0) + POSTAMBLE
        pad = max(self.max_x - self.min_x, self.max_y - self.min_y) * 0.1
        width = self.max_x - self.min_x + pad * 2
        height = self.max_y - self.min_y + pad * 2
        trans_x = -self.min_x + pad
        trans_y = -self.min_y + pad
        header = PREAMBLE % dict(width=width, height=height, trans_x=trans_x, trans_y=trans_y,
                                 neg_trans_x=-trans_x, neg_trans_y=-trans_y)
        return header + "".join(item + "\n" for item in self.commands) + POSTAMBLE

    def save(self, filename: Union[str, Path]) -> None:
        Path(filename).write_text(self.document())


def render_svg(d: Drawing, highlight: Iterable[Edge] = ()) -> str:
    """
    Render every edge of a coordinate-backed drawing as a straight segment.

    Args:
        d: Drawing with coordinates
        highlight: Edges drawn in a distinct, heavier stroke (usually a plane subgraph)

    Returns:
        The SVG document as a string

    Raises:
        PreconditionError: if d carries no coordinates or highlight names a non-edge
    """
    if not d.has_coords:
        raise PreconditionError("drawing has no coordinates; rotation-only drawings are not rendered")
    marked = set()
    for e in highlight:
        if not (1 <= e.u <= d.n and 1 <= e.v <= d.n):
            raise PreconditionError(f"highlighted edge {e} is not an edge of K_{d.n}")
        marked.add(e)

    svg = SVG()
    pts = d.coords
    for e in d.edges():
        if e not in marked:
            svg.line(pts[e.u - 1], pts[e.v - 1], title=str(e))
    # highlighted edges go on top
    for e in sorted(marked):
        svg.line(pts[e.u - 1], pts[e.v - 1], stroke=HIGHLIGHT_STROKE, width=2.5, title=str(e))
    for v in d.vertices:
        svg.circle(pts[v - 1])
        svg.text(pts[v - 1], str(v))
    log.debug("rendered %d edges, %d highlighted", d.n * (d.n - 1) // 2, len(marked))
    return svg.document()


def geometric_crossings(d: Drawing) -> int:
    """Number of properly crossing pairs among the straight segments of d."""
    if not d.has_coords:
        raise PreconditionError("drawing has no coordinates")
    pts = d.coords
    return sum(
        1 for e, f in combinations(d.edges(), 2)
        if not e.shares_vertex(f)
        and segments_cross(pts[e.u - 1], pts[e.v - 1], pts[f.u - 1], pts[f.v - 1])
    )
