"""
Instance Loader
Reads and writes drawings, edge sets, segment instances and point sets.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from ..drawing.geometry import Point
from ..drawing.rotation import Drawing, Edge
from ..generators.segments import SegmentInstance
from . import formats

log = logging.getLogger(__name__)

PathLike = Union[str, Path]


class InstanceLoader:
    """Load and save instance files relative to a data directory."""

    def __init__(self, data_dir: PathLike = "."):
        """
        Initialize instance loader.

        Args:
            data_dir: Directory that relative paths are resolved against
        """
        self.data_dir = Path(data_dir)

    def _resolve(self, name: PathLike) -> Path:
        path = Path(name)
        return path if path.is_absolute() else self.data_dir / path

    def _read(self, name: PathLike) -> str:
        path = self._resolve(name)
        if not path.exists():
            raise FileNotFoundError(f"Instance file not found: {path}")
        log.debug("reading %s", path)
        return path.read_text(encoding="utf-8")

    def _write(self, name: PathLike, text: str) -> Path:
        path = self._resolve(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        log.info("wrote %s", path)
        return path

    def load_drawing(self, name: PathLike, points: Optional[PathLike] = None) -> Drawing:
        """
        Load a .rot drawing, optionally attaching coordinates from a .pts file.

        Args:
            name: Rotation file
            points: Optional point file with one point per vertex

        Returns:
            Drawing
        """
        drawing = formats.parse_rotation(self._read(name))
        if points is not None:
            coords = self.load_points(points)
            drawing = Drawing(drawing.given_rotations, coords)
        return drawing

    def load_edges(self, name: PathLike, n: Optional[int] = None) -> List[Edge]:
        return formats.parse_edges(self._read(name), n)

    def load_segments(self, name: PathLike) -> SegmentInstance:
        return formats.parse_segments(self._read(name))

    def load_points(self, name: PathLike) -> List[Point]:
        return formats.parse_points(self._read(name))

    def save_drawing(self, name: PathLike, drawing: Drawing) -> Path:
        return self._write(name, formats.serialize_rotation(drawing))

    def save_edges(self, name: PathLike, edges: Iterable[Edge]) -> Path:
        return self._write(name, formats.serialize_edges(edges))

    def save_segments(self, name: PathLike, inst: SegmentInstance) -> Path:
        return self._write(name, formats.serialize_segments(inst))

    def save_points(self, name: PathLike, points: Sequence[Point]) -> Path:
        return self._write(name, formats.serialize_points(points))
