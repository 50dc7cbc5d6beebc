__all__ = [
    "Nu",
    "CellRecord",
    "Face",
    "Tiling",
    "PrototileClass",
    "PrototileSet",
    "WallToWallReport",
]

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import polars as pl
from prettytable import PrettyTable

from ..exactfield import QuadNum

# half-integer cell coordinates nu_j = n_j + 1/2
Nu = tuple[Fraction, ...]


@dataclass
class CellRecord:
    """An open region of the plane arrangement.

    `witness` is a point of the cell: the centroid of its known corners when
    at least three are known, else a corner of its closure.
    """

    nu: Nu
    witness: tuple[QuadNum, ...]
    corners: list[tuple[QuadNum, ...]] = field(default_factory=list, repr=False)

    @property
    def interior_witness(self) -> bool:
        return len(self.corners) >= 3


@dataclass
class Face:
    """A tile: the dual of the cells around one arrangement vertex.

    Properties:
      cells: nu-vectors of the tile corners in counter-clockwise order.
      point: the arrangement vertex the tile is dual to.
      edge_dirs: index on the 2J-gon of +-a_j of each edge, in order.
      class_id: prototile class assigned by `dual.decorate` /
        `dual.inflation_rules`.
    """

    cells: tuple[Nu, ...]
    point: tuple[QuadNum, ...]
    edge_dirs: tuple[int, ...]
    class_id: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.cells)


@dataclass
class Tiling:
    """Vertices, faces and the dualization constants of a tiling."""

    vertices: dict[Nu, tuple[QuadNum, ...]]
    faces: list[Face]
    gamma: QuadNum
    mean_step: QuadNum
    edge_length_sq: QuadNum
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def edges(self) -> set[tuple[Nu, Nu]]:
        out = set()
        for f in self.faces:
            for a, b in zip(f.cells, f.cells[1:] + f.cells[:1]):
                out.add((a, b) if a < b else (b, a))
        return out

    def polygon(self, face: Face) -> list[tuple[QuadNum, ...]]:
        return [self.vertices[nu] for nu in face.cells]


@dataclass
class PrototileClass:
    """Tiles equal up to the symmetry group, with their decoration and
    inflation patch written in the affine frame of the first two edges."""

    id: int
    shape: tuple[int, ...]
    decoration: tuple = ()
    inflation_patch: tuple = ()
    count: int = 0
    straddles: bool = False


@dataclass
class PrototileSet:
    classes: list[PrototileClass]
    bijection: Optional[bool] = None

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def shapes(self) -> set[tuple[int, ...]]:
        return {c.shape for c in self.classes}

    def table(self) -> str:
        t = PrettyTable()
        t.field_names = ["class", "angles (pi/J)", "tiles", "decoration segments", "inflation segments"]
        t.align = "l"
        for c in self.classes:
            t.add_row([c.id, ",".join(map(str, c.shape)), c.count, len(c.decoration), len(c.inflation_patch)])
        return t.get_string()

    def to_polars(self) -> pl.DataFrame:
        return pl.DataFrame(
            {
                "class": [c.id for c in self.classes],
                "shape": [",".join(map(str, c.shape)) for c in self.classes],
                "tiles": [c.count for c in self.classes],
                "segments": [len(c.decoration) for c in self.classes],
                "inflation_segments": [len(c.inflation_patch) for c in self.classes],
            }
        )


@dataclass
class WallToWallReport:
    wall_to_wall: bool
    violations: list[tuple[int, Fraction, QuadNum]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.wall_to_wall
