__all__ = ["_MixinTiling"]

import logging
from collections import Counter
from typing import Literal, Optional, Union

from ..ammann import refine_pattern
from ..dual import check_wall_to_wall, decorate, decoration_segments, dualize, halve_pattern, inflation_rules, shape_key
from ..models import AmmannPattern, PrototileClass, PrototileSet, Tiling, WallToWallReport, Window
from ..utils.parser import parse_window
from . import BaseClass

Decorate = Literal["none", "ammann", "inflation", "both"]


class _MixinTiling(BaseClass):
    def tiling(self, pattern: AmmannPattern, window: Union[str, Window]) -> Tiling:
        """Dual tiling of a 2D pattern, clipped to the window."""
        self.v.planar(pattern.spec.symmetry or "", "dualize")
        window = parse_window(window) if isinstance(window, str) else window
        return dualize(pattern, window)

    def prototiles(
        self,
        pattern: AmmannPattern,
        window: Union[str, Window],
        tiling: Optional[Tiling] = None,
        decorate_by: Decorate = "both",
    ) -> PrototileSet:
        """Prototile classes of the dual tiling.

        Parameters:
          decorate_by: "none" (shapes only), "ammann" (refined Ammann
            segments), "inflation" or "both" (inflation patches, compared
            with the Ammann decorations).
        """
        self.v(decorate=decorate_by)
        window = parse_window(window) if isinstance(window, str) else window
        tiling = tiling or self.tiling(pattern, window)
        if decorate_by == "none":
            shapes = Counter(shape_key(f, pattern.J, self.chiral) for f in tiling.faces)
            return PrototileSet([PrototileClass(i, s, count=shapes[s]) for i, s in enumerate(sorted(shapes))])
        if decorate_by == "ammann":
            return decorate(pattern, tiling, window, chiral=self.chiral)
        result = inflation_rules(pattern, window, tiling, chiral=self.chiral)
        if not result.bijection:
            logging.warning("decoration and inflation classes do not match one to one")
        return result

    def decoration_segments(self, pattern: AmmannPattern, tiling: Tiling, window: Union[str, Window]) -> list:
        """Refined Ammann segments of every tile, flattened for drawing."""
        window = parse_window(window) if isinstance(window, str) else window
        return [s for per_face in decoration_segments(pattern, tiling, window) for s in per_face]

    def inflation_overlay(self, pattern: AmmannPattern, window: Union[str, Window]) -> Tiling:
        """Dual tiling of the refined pattern; its tiles are the children of one inflation step."""
        window = parse_window(window) if isinstance(window, str) else window
        return dualize(refine_pattern(pattern), window)

    def wall_to_wall(self, pattern: AmmannPattern, window: Union[str, Window], halved: bool = False) -> WallToWallReport:
        window = parse_window(window) if isinstance(window, str) else window
        if halved:
            pattern = halve_pattern(pattern)
        report = check_wall_to_wall(pattern, window)
        logging.info(f"wall-to-wall{' (halved)' if halved else ''}: {report.wall_to_wall}")
        return report
