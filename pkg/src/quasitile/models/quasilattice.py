__all__ = [
    "RowId",
    "ROW_IDS",
    "QuasilatticeClass",
    "QuasilatticeSpec",
    "Quasilattice1DWindow",
    "SelfSimilarityReport",
    "class_table",
]

from dataclasses import dataclass, field
from typing import Literal

from typing_extensions import Self

import polars as pl
from prettytable import PrettyTable

from ..exactfield import QuadNum, quad

RowId = Literal["1", "2a", "2b", "3a", "3b", "3c", "4a", "4b", "4c", "4d"]
ROW_IDS: tuple[str, ...] = ("1", "2a", "2b", "3a", "3b", "3c", "4a", "4b", "4c", "4d")


@dataclass(frozen=True)
class QuasilatticeClass:
    """One row of the table of self-similar 1D quasilattices of degree two.

    Properties:
      row_id: "1", "2a", ... "4d".
      ratio_plus: m2+/m1+, the ratio of the two interval lengths.
      ratio_minus: its Galois conjugate.
      lambda_plus: inflation factor, a unit of the ring of integers.
      lambda_minus: its Galois conjugate, |lambda_minus| < 1.
      wall_to_wall: whether inflation maps points onto points.
    """

    row_id: RowId
    ratio_plus: QuadNum
    ratio_minus: QuadNum
    lambda_plus: QuadNum
    lambda_minus: QuadNum
    wall_to_wall: bool

    def __post_init__(self):
        if self.ratio_minus != self.ratio_plus.conjugate():
            raise ValueError(f"row {self.row_id}: ratio_minus is not the conjugate")
        if self.lambda_minus != self.lambda_plus.conjugate():
            raise ValueError(f"row {self.row_id}: lambda_minus is not the conjugate")

    @property
    def D(self) -> int:
        return self.lambda_plus.D

    @property
    def label(self) -> str:
        return f"R{self.row_id}"

    def conjugate(self) -> Self:
        return QuasilatticeClass(
            self.row_id,
            self.ratio_minus,
            self.ratio_plus,
            self.lambda_minus,
            self.lambda_plus,
            self.wall_to_wall,
        )


@dataclass(frozen=True)
class QuasilatticeSpec:
    """Parameters of one 1D quasilattice

        x_n = scale * [m1+ (n - chi1+) + (m2+ - m1+)(floor(kappa1 (n - chi1-)) + 1/2)]

    `scale` is 1 for a pattern and 1/lambda+ per refinement level.
    """

    qclass: QuasilatticeClass
    m1_plus: QuadNum
    m2_plus: QuadNum
    m1_minus: QuadNum
    m2_minus: QuadNum
    chi1_plus: QuadNum
    chi1_minus: QuadNum
    scale: QuadNum = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        D = self.qclass.D
        if self.scale is None:
            object.__setattr__(self, "scale", quad(1, D))
        for name in ("m1_plus", "m2_plus", "m1_minus", "m2_minus", "chi1_plus", "chi1_minus", "scale"):
            object.__setattr__(self, name, quad(getattr(self, name), D))

    @property
    def D(self) -> int:
        return self.qclass.D

    @property
    def chi2_plus(self) -> QuadNum:
        return self.m1_plus * self.chi1_plus / self.m2_plus

    @property
    def chi2_minus(self) -> QuadNum:
        return self.m1_minus * self.chi1_minus / self.m2_minus

    @property
    def long(self) -> QuadNum:
        return self.scale * max(self.m1_plus, self.m2_plus)

    def conjugate(self) -> Self:
        """Swap the roles of the + and - members."""
        return QuasilatticeSpec(
            self.qclass.conjugate(),
            self.m1_minus,
            self.m2_minus,
            self.m1_plus,
            self.m2_plus,
            self.chi1_minus,
            self.chi1_plus,
            self.scale.conjugate(),
        )


@dataclass(frozen=True)
class Quasilattice1DWindow:
    """Positions x_n for n = n_lo, ..., n_lo + len(positions) - 1 and the
    labels ("L" or "S") of the intervals between consecutive positions."""

    n_lo: int
    positions: tuple[QuadNum, ...]
    interval_labels: tuple[str, ...]

    @property
    def n_hi(self) -> int:
        return self.n_lo + len(self.positions) - 1

    @property
    def intervals(self) -> tuple[QuadNum, ...]:
        return tuple(b - a for a, b in zip(self.positions, self.positions[1:]))

    def __len__(self) -> int:
        return len(self.positions)


@dataclass
class SelfSimilarityReport:
    row_id: str
    unit_ok: bool
    lattice_ok: bool
    inflation_ok: bool
    wall_to_wall: bool
    words: dict[str, set[tuple[str, ...]]] = field(default_factory=dict)
    separations: dict[str, set[QuadNum]] = field(default_factory=dict)
    violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unit_ok and self.lattice_ok and self.inflation_ok

    def _rows(self) -> list[tuple[str, str]]:
        return [
            (label, " | ".join(" ".join(w) for w in sorted(words)))
            for label, words in sorted(self.words.items())
        ]

    def table(self) -> str:
        t = PrettyTable()
        t.field_names = ["row", "interval", "substitution words"]
        t.align = "l"
        for label, words in self._rows():
            t.add_row([self.row_id, label, words])
        return t.get_string()

    def to_polars(self) -> pl.DataFrame:
        rows = self._rows()
        return pl.DataFrame(
            {
                "row": [self.row_id] * len(rows),
                "interval": [r[0] for r in rows],
                "words": [r[1] for r in rows],
            }
        )


def class_table(classes: list[QuasilatticeClass]) -> PrettyTable:
    t = PrettyTable()
    t.field_names = ["row", "D", "m2+/m1+", "lambda+", "wall-to-wall"]
    t.align = "l"
    for c in classes:
        t.add_row([c.label, c.D, str(c.ratio_plus), str(c.lambda_plus), "yes" if c.wall_to_wall else "no"])
    return t
