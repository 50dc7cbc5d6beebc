__all__ = ["parse_window", "parse_q0", "parse_group"]

import re
from fractions import Fraction
from typing import Literal, Optional, Union

from ..models.pattern import Window

RE_RANDOM = r"^random(?::(-?\d+))?$"


def parse_window(text: Union[str, int, Fraction]) -> Window:
    """Window from "R" (disk) or "x0:x1:y0:y1[:...]" (box).

    Raises:
        ValueError: unparsable text or an odd number of bounds.
    """
    if not isinstance(text, str):
        return Window.disk(text)
    parts = [p for p in re.split(r"\s*:\s*", text.strip())]
    values = [Fraction(p) for p in parts]
    if len(values) == 1:
        return Window.disk(values[0])
    if len(values) % 2:
        raise ValueError(f"box window {text!r} needs lo:hi pairs")
    return Window.box(*zip(values[::2], values[1::2]))


def parse_q0(text: Optional[str]) -> tuple[Literal["rationals", "random", "explicit"], Union[int, tuple[Fraction, ...], None]]:
    """("rationals", None), ("random", seed or None) or ("explicit", coefficients).

    No text means "random". Explicit coefficients are comma separated
    rationals on the fundamental roots of theta.

    Raises:
        ValueError: unparsable coefficients.
    """
    if not text:
        return "random", None
    if text == "rationals":
        return "rationals", None
    m = re.match(RE_RANDOM, text.strip())
    if m:
        return "random", int(m.group(1)) if m.group(1) is not None else None
    return "explicit", tuple(Fraction(p.strip()) for p in text.split(","))


def parse_group(text: str) -> str:
    """Normalise "H4", "h3", "I2:5", "i2(5)" to h4 / h3 / i2:n."""
    t = text.strip().lower().replace(" ", "")
    m = re.match(r"^i2[:(](\d+)\)?$", t)
    if m:
        return f"i2:{int(m.group(1))}"
    return t
