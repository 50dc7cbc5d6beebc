"""Minimal SVG writer for tilings, decorations and Ammann patterns."""

__all__ = ["SVG", "Layer", "serialize_svg", "tiling_layer", "segment_layer", "plane_layer", "ring_layers"]

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .models.config import DEFAULT_STYLES, LayerStyle
from .models.pattern import AmmannPattern, GridPlane, Window
from .models.tiling import Tiling

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width).3fmm" height="%(height).3fmm" viewBox="%(min_x).6f %(min_y).6f %(width).6f %(height).6f" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="%(min_x).6f" y="%(min_y).6f" width="%(width).6f" height="%(height).6f" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""


@dataclass
class Layer:
    """Named group of polylines; `closed` layers are drawn as polygons."""

    name: str
    style: LayerStyle
    paths: list[np.ndarray] = field(default_factory=list)
    closed: bool = False


class SVG:
    def __init__(self, scale: float = 10.0):
        self.scale = scale
        self.min = None
        self.max = None
        self.commands: list[str] = []

    def require(self, points: np.ndarray):
        lo, hi = points.min(axis=0), points.max(axis=0)
        self.min = lo if self.min is None else np.minimum(self.min, lo)
        self.max = hi if self.max is None else np.maximum(self.max, hi)

    def _points(self, points: np.ndarray) -> str:
        return " ".join("%.6f,%.6f" % (x, y) for x, y in points)

    def path(self, points: np.ndarray, style: LayerStyle, closed: bool = False):
        # y grows downwards in SVG
        points = np.asarray(points, dtype=float) * np.array([self.scale, -self.scale])
        self.require(points)
        tag = "polygon" if closed else "polyline"
        self.commands.append(
            '<%s points="%s" style="fill:none;stroke:%s;stroke-width:%.3f;stroke-linejoin:round" />'
            % (tag, self._points(points), style.stroke, style.width)
        )

    def group(self, name: str):
        self.commands.append(f'<g id="{name}">')

    def end_group(self):
        self.commands.append("</g>")

    def to_string(self) -> str:
        if self.min is None:
            min_x = min_y = 0.0
            width = height = 1.0
        else:
            pad = float(max(self.max - self.min)) * 0.05 + 1.0
            min_x, min_y = (self.min - pad).tolist()
            width, height = (self.max - self.min + 2 * pad).tolist()
        return PREAMBLE % locals() + "".join(c + "\n" for c in self.commands) + POSTAMBLE

    def save(self, filename):
        with open(filename, "w", encoding="utf-8") as f:
            f.write(self.to_string())


def serialize_svg(layers: Sequence[Layer], scale: float = 10.0) -> str:
    """SVG document with one group per layer, painted in the given order."""
    svg = SVG(scale)
    for layer in layers:
        svg.group(layer.name)
        for p in layer.paths:
            svg.path(p, layer.style, layer.closed)
        svg.end_group()
    return svg.to_string()


def tiling_layer(tiling: Tiling, display: Callable, style: LayerStyle = DEFAULT_STYLES["tiling"]) -> Layer:
    paths = [np.array([display(p) for p in tiling.polygon(f)]) for f in tiling.faces]
    return Layer("tiling", style, paths, closed=True)


def segment_layer(name: str, segments: Iterable, display: Callable, style: LayerStyle) -> Layer:
    return Layer(name, style, [np.array([display(p), display(q)]) for p, q in segments])


def plane_layer(pattern: AmmannPattern, planes: Sequence[GridPlane], window: Window, style: LayerStyle = DEFAULT_STYLES["ammann"]) -> Layer:
    """Ammann lines of a 2D pattern, cut to the window's bounding disk."""
    unit = float(pattern.mean_step / pattern.scale)
    radius = float(window.radius_sq) ** 0.5
    paths = []
    for p in planes:
        a = np.array([float(x) for x in pattern.star.directions[p.j]])
        g = np.array([float(x) for x in pattern.metric])
        length = float(pattern.star.norm_sq) ** 0.5
        # unit normal and signed distance in display units
        normal = a * np.sqrt(g) / length
        dist = float(p.offset) / unit
        half = max(radius * radius - dist * dist, 0.0) ** 0.5
        tangent = np.array([-normal[1], normal[0]])
        centre = normal * dist
        paths.append(np.array([centre - half * tangent, centre + half * tangent]))
    return Layer("ammann", style, paths)


def ring_layers(rings: Sequence[np.ndarray], style: LayerStyle = DEFAULT_STYLES["roots"]) -> list[Layer]:
    """One closed layer `ring-k` per ring of 2D points, innermost first.

    The points of a ring are joined in order of angle."""
    layers = []
    for k, points in enumerate(rings):
        points = np.asarray(points, dtype=float)
        order = np.argsort(np.arctan2(points[:, 1], points[:, 0]))
        layers.append(Layer(f"ring-{k}", style, [points[order]], closed=True))
    return layers
