__all__ = ["_MixinExport"]

import logging
from pathlib import Path
from typing import Optional, Union

from ..models import DEFAULT_STYLES, AmmannPattern, LayerStyle, PrototileSet, Tiling, Window
from ..svg import plane_layer, segment_layer, serialize_svg, tiling_layer
from ..utils.converter import serialize_tiling
from ..utils.parser import parse_window
from . import BaseClass
from ._ammann import _MixinAmmann


class _MixinExport(_MixinAmmann, BaseClass):
    def tiling_json(self, pattern: AmmannPattern, tiling: Tiling, prototiles: Optional[PrototileSet] = None) -> str:
        """Exact JSON document of a tiling; identical inputs give identical bytes."""
        return serialize_tiling(tiling, pattern.display, prototiles)

    def tiling_svg(
        self,
        pattern: AmmannPattern,
        tiling: Tiling,
        segments: Optional[list] = None,
        overlay: Optional[Tiling] = None,
        styles: Optional[dict[str, LayerStyle]] = None,
    ) -> str:
        """SVG with the tiling, then its Ammann decoration, then an inflation overlay."""
        styles = styles or DEFAULT_STYLES
        layers = [tiling_layer(tiling, pattern.display, styles["tiling"])]
        if segments:
            layers.append(segment_layer("decoration", segments, pattern.display, styles["decoration"]))
        if overlay is not None:
            overlay_layer = tiling_layer(overlay, pattern.display, styles["inflation"])
            overlay_layer.name = "inflation"
            layers.append(overlay_layer)
        return serialize_svg(layers)

    def pattern_svg(self, pattern: AmmannPattern, window: Union[str, Window], styles: Optional[dict[str, LayerStyle]] = None) -> str:
        window = parse_window(window) if isinstance(window, str) else window
        styles = styles or DEFAULT_STYLES
        return serialize_svg([plane_layer(pattern, self.planes(pattern, window), window, styles["ammann"])])

    def write(self, text: str, name: Union[str, Path]) -> Path:
        """Write an artifact; relative names land in the output directory."""
        path = Path(name)
        if not path.is_absolute() and path.parent == Path("."):
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logging.info(f"wrote {path}")
        return path
