__all__ = ["_MixinAmmann"]

import logging
from dataclasses import replace
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..ammann import ammann_spec, build_pattern, detect_singular, inflate, planes_in_window, sample_q0
from ..exceptions import SingularPhaseError
from ..models import AmmannPattern, GridPlane, SingularPoint, Window
from ..quasilattice1d import get_class
from ..utils.decorators import experimental
from ..utils.parser import parse_q0, parse_window
from ..utils.validation import ValidationError
from . import BaseClass


def rational_q0(d: int) -> tuple[Fraction, ...]:
    """Fixed generic slice origin: small rationals with distinct odd denominators."""
    return tuple(Fraction((-1) ** k, 2 * k + 7) for k in range(d))


class _MixinAmmann(BaseClass):
    def pattern(
        self,
        symmetry: str,
        row: str,
        *,
        q0: Union[str, Sequence, None] = "random",
        window: Union[str, Window, None] = None,
        inflate_by: int = 0,
    ) -> AmmannPattern:
        """Minimal Ammann pattern of a symmetry and a quasilattice row.

        Parameters:
          symmetry: "10", "8", "12", "h3" or "h4".
          row: a row whose quadratic field matches the symmetry.
          q0: "random[:seed]" (the default, seeded by the instance seed),
            "rationals" for a fixed generic origin, or explicit rational
            coefficients on the fundamental roots.
          window: used to reject random q0 with singular phases nearby.
          inflate_by: number of inflation steps applied to the result.

        Returns:
          AmmannPattern: per-direction quasilattices.
        """
        symmetry, row = self.v.pairing(symmetry, row)
        if symmetry in ("h3", "h4"):
            return self._pattern_higher(symmetry, row, q0, inflate_by)
        return self._pattern(symmetry, row, q0, window, inflate_by)

    def _pattern(self, symmetry, row, q0, window, inflate_by) -> AmmannPattern:
        window = parse_window(window) if isinstance(window, str) else window
        spec = ammann_spec(symmetry, get_class(row), window=window)
        d = len(spec.q0)
        if q0 is None or isinstance(q0, str):
            mode, value = parse_q0(q0)
        else:
            mode, value = "explicit", tuple(Fraction(x) for x in q0)
        if mode == "random":
            spec = sample_q0(spec, self.seed if value is None else value, window)
        elif mode == "explicit":
            if len(value) != d:
                raise ValidationError(f"q0 needs {d} coefficients, got {len(value)}")
            spec = replace(spec, q0=value)
        else:
            spec = replace(spec, q0=rational_q0(d))
        pattern = build_pattern(spec)
        if inflate_by:
            pattern = inflate(pattern, self.v.positive("inflate", inflate_by))
        return pattern

    @experimental("3D and 4D patterns give planes only, no dual tiling")
    def _pattern_higher(self, symmetry, row, q0, inflate_by) -> AmmannPattern:
        """3D and 4D patterns: planes only, no dual tiling."""
        return self._pattern(symmetry, row, q0, None, inflate_by)

    def planes(self, pattern: AmmannPattern, window: Union[str, Window]) -> list[GridPlane]:
        window = parse_window(window) if isinstance(window, str) else window
        return planes_in_window(pattern, window)

    def singular_points(self, pattern: AmmannPattern, window: Union[str, Window]) -> list[SingularPoint]:
        """Points where three or more Ammann lines meet inside the window."""
        window = parse_window(window) if isinstance(window, str) else window
        return detect_singular(pattern, window)

    def is_singular(self, pattern: AmmannPattern, window: Union[str, Window]) -> bool:
        try:
            return bool(self.singular_points(pattern, window))
        except SingularPhaseError as e:
            logging.warning(f"singular phase: {e}")
            return True
