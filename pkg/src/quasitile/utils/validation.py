import re
from typing import Any

from ..models.quasilattice import ROW_IDS


class ValidationError(Exception):
    pass


class Validation:
    regex = {
        "symmetry": r"^(10|8|12|h3|h4)$",
        "row": r"^R?(1|2[ab]|3[abc]|4[abcd])$",
        "window": r"^-?\d+(/\d+)?(:-?\d+(/\d+)?)*$",
        "q0": r"^(rationals|random(:-?\d+)?|-?\d+(/\d+)?(,-?\d+(/\d+)?)*)$",
        "group": r"^(h4|h3|i2[:(]\d+\)?)$",
        "format": r"^(svg|json|csv)$",
        "decorate": r"^(none|ammann|inflation|both)$",
    }

    # symmetry -> rows whose quadratic field matches
    ROWS_FOR_SYMMETRY = {
        "10": ("1", "4a", "4b", "4c", "4d"),
        "h3": ("1", "4a", "4b", "4c", "4d"),
        "h4": ("1", "4a", "4b", "4c", "4d"),
        "8": ("2a", "2b"),
        "12": ("3a", "3b", "3c"),
    }

    def __val(self, value: Any, regex: str, error: str):
        if value is None:
            return value
        if not re.match(regex, str(value).strip(), re.IGNORECASE):
            raise ValidationError(error)
        return value

    def __call__(self, **kwargs: Any):
        """Check the values of the kwargs against their patterns.

        Returns:
            Any: if only one key is passed
            dict[str, Any]: if more than one key is passed
        """
        for target, value in kwargs.items():
            self.__val(value, self.regex[target], f"{target} {value!r} is invalid")
        if len(kwargs) == 1:
            return list(kwargs.values())[0]
        return kwargs

    def row(self, row: str) -> str:
        """Row id without the "R" prefix."""
        self(row=row)
        row = row.strip().lower()
        row = row[1:] if row[0] == "r" else row
        if row not in ROW_IDS:
            raise ValidationError(f"row {row!r} is invalid")
        return row

    def pairing(self, symmetry: str, row: str) -> tuple[str, str]:
        """Check that the row lives in the quadratic field of the symmetry."""
        symmetry = self(symmetry=symmetry).strip().lower()
        row = self.row(row)
        if row not in self.ROWS_FOR_SYMMETRY[symmetry]:
            allowed = ", ".join(self.ROWS_FOR_SYMMETRY[symmetry])
            raise ValidationError(f"row {row} does not fit symmetry {symmetry} (use one of {allowed})")
        return symmetry, row

    def planar(self, symmetry: str, command: str) -> str:
        if symmetry in ("h3", "h4"):
            raise ValidationError(f"{command} needs a 2D pattern, got symmetry {symmetry}")
        return symmetry

    def positive(self, name: str, value: int) -> int:
        if value < 0:
            raise ValidationError(f"{name} must be >= 0")
        return value
