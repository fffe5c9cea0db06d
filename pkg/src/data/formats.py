"""
Text formats for drawings, edge sets, segment instances and point sets.

.rot  first non-comment line n, then n lines "i: a1 ... a_{n-1}"
.edg  one "i j" pair per line
.seg  optional "k <int>" line, then one "x1 y1 x2 y2" per line
.pts  one "x y" per line

'#' starts a comment everywhere. Serializers emit single spaces and a
trailing newline.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from ..drawing.geometry import Point
from ..drawing.rotation import Drawing, Edge
from ..exceptions import ParseError, PreconditionError
from ..generators.segments import SegmentInstance


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(line number, stripped content) for every non-empty, non-comment line."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line=line)


def _float(token: str, line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"expected a number, got {token!r}", line=line)


def _fmt(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------- rotations

def parse_rotation(text: str) -> Drawing:
    """
    Parse a .rot document.

    Raises:
        ParseError: on malformed input or n < 3
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty rotation file")
    head_line, head = lines[0]
    n = _int(head, head_line)
    if n < 3:
        raise ParseError(f"drawings need n >= 3, got n={n}", line=head_line)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rotation lines, found {len(body)}")

    rotations: List[Optional[List[int]]] = [None] * n
    for number, content in body:
        if ":" not in content:
            raise ParseError("rotation line must look like 'i: a1 a2 ...'", line=number)
        label, rest = content.split(":", 1)
        v = _int(label.strip(), number)
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} outside 1..{n}", line=number)
        if rotations[v - 1] is not None:
            raise ParseError(f"rotation of vertex {v} given twice", line=number)
        entries = [_int(tok, number) for tok in rest.split()]
        if len(entries) != n - 1:
            raise ParseError(f"rotation of vertex {v} has {len(entries)} entries, expected {n - 1}",
                             line=number)
        if any(not 1 <= x <= n for x in entries):
            raise ParseError(f"rotation of vertex {v} names a vertex outside 1..{n}", line=number)
        rotations[v - 1] = entries

    try:
        return Drawing(rotations)
    except PreconditionError as exc:
        raise ParseError(str(exc))


def serialize_rotation(d: Drawing) -> str:
    lines = [str(d.n)]
    for v in d.vertices:
        lines.append(f"{v}: " + " ".join(str(x) for x in d.given_rotation(v)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- edge sets

def parse_edges(text: str, n: Optional[int] = None) -> List[Edge]:
    """Parse a .edg document; n, when given, bounds the vertex labels."""
    edges = set()
    for number, content in _content_lines(text):
        tokens = content.split()
        if len(tokens) != 2:
            raise ParseError("edge line must hold two vertex ids", line=number)
        a, b = _int(tokens[0], number), _int(tokens[1], number)
        if a == b:
            raise ParseError(f"loop edge at vertex {a}", line=number)
        if min(a, b) < 1 or (n is not None and max(a, b) > n):
            raise ParseError(f"edge ({a},{b}) names a vertex outside the drawing", line=number)
        edges.add(Edge(a, b))
    return sorted(edges)


def serialize_edges(edges: Iterable[Edge]) -> str:
    return "".join(f"{e.u} {e.v}\n" for e in sorted(set(edges)))


# ------------------------------------------------------------------ segments

def parse_segments(text: str) -> SegmentInstance:
    lines = _content_lines(text)
    k = None
    if lines and lines[0][1].split()[0].lower() == "k":
        number, content = lines[0]
        tokens = content.split()
        if len(tokens) != 2:
            raise ParseError("target line must look like 'k <int>'", line=number)
        k = _int(tokens[1], number)
        lines = lines[1:]

    segments = []
    for number, content in lines:
        tokens = content.split()
        if len(tokens) != 4:
            raise ParseError("segment line must hold four numbers", line=number)
        x1, y1, x2, y2 = (_float(t, number) for t in tokens)
        segments.append(((x1, y1), (x2, y2)))
    if not segments:
        raise ParseError("segment file holds no segments")
    return SegmentInstance(tuple(segments), k)


def serialize_segments(inst: SegmentInstance) -> str:
    lines = [] if inst.k is None else [f"k {inst.k}"]
    for (a, b) in inst.segments:
        lines.append(" ".join(_fmt(x) for x in (a[0], a[1], b[0], b[1])))
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------------- points

def parse_points(text: str) -> List[Point]:
    points = []
    for number, content in _content_lines(text):
        tokens = content.split()
        if len(tokens) != 2:
            raise ParseError("point line must hold two numbers", line=number)
        points.append((_float(tokens[0], number), _float(tokens[1], number)))
    return points


def serialize_points(points: Sequence[Point]) -> str:
    return "".join(f"{_fmt(x)} {_fmt(y)}\n" for x, y in points)
