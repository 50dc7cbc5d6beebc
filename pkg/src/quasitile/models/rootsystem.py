from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal, Optional

import polars as pl
from prettytable import PrettyTable

from ..exactfield import QuadNum

__all__ = ["RootSystem", "CoxeterPair", "CoxeterPairTable", "Projection"]


@dataclass(frozen=True)
class RootSystem:
    """Roots and fundamental roots of a finite reflection group.

    Crystallographic systems carry `Fraction` coordinates, H3 and H4 carry
    `QuadNum` coordinates over sqrt 5. I2(5), I2(8) and I2(12) carry
    `QuadNum` coordinates on two unit axes 2 pi / n apart, with `gram` their
    inner products; other dihedral systems carry floats.
    """

    name: str
    family: Literal["A", "B", "C", "D", "E", "F", "G", "I2", "H"]
    rank: int
    roots: tuple[tuple[Any, ...], ...]
    fundamental_roots: tuple[tuple[Any, ...], ...]
    crystallographic: bool = True
    D: Optional[int] = None
    gram: Optional[tuple[tuple[Any, ...], ...]] = None

    def dot(self, u, v):
        if self.gram is None:
            return sum(a * b for a, b in zip(u, v))
        return sum(u[i] * self.gram[i][k] * v[k] for i in range(len(u)) for k in range(len(v)))

    @property
    def ambient_dim(self) -> int:
        return len(self.fundamental_roots[0])

    @property
    def rational_rank(self) -> int:
        if self.crystallographic:
            return self.rank
        if self.family == "H":
            return 2 * self.rank
        raise NotImplementedError("rational rank of I2(n) is phi(n)")

    def __repr__(self):
        return f"RootSystem({self.name}, {len(self.roots)} roots)"


@dataclass(frozen=True)
class CoxeterPair:
    """A non-crystallographic system and the crystallographic partner of
    equal rational rank. `theta` is None when no partner exists."""

    theta_par: str
    theta: Optional[str]
    degree: Optional[int] = None
    field_D: Optional[int] = None

    @property
    def quadratic(self) -> bool:
        return self.degree == 2 and self.field_D is not None

    @property
    def label(self) -> str:
        if self.theta is None:
            return "-"
        if self.theta.startswith("B"):
            return f"{self.theta}/C{self.theta[1:]}"
        return self.theta


@dataclass(frozen=True)
class Projection:
    """Orthogonal splitting of the embedding space into parallel and
    perpendicular halves.

    A parallel point is stored by its frame coordinates `y_i = v_i . x`;
    `metric[i] = 1/|v_i|^2` turns them back into lengths. The minus basis is
    the entrywise conjugate of the plus basis.
    """

    pair: CoxeterPair
    D: int
    fundamental: tuple[tuple[Fraction, ...], ...]
    plus_basis: tuple[tuple[QuadNum, ...], ...]
    minus_basis: tuple[tuple[QuadNum, ...], ...]
    metric: tuple[QuadNum, ...]
    zeta_plus: tuple[tuple[QuadNum, ...], ...] = field(repr=False)
    zeta_minus: tuple[tuple[QuadNum, ...], ...] = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.fundamental)

    @property
    def d_par(self) -> int:
        return len(self.plus_basis)

    @property
    def minus_metric(self) -> tuple[QuadNum, ...]:
        return tuple(g.conjugate() for g in self.metric)


@dataclass
class CoxeterPairTable:
    pairs: list[CoxeterPair]

    def __len__(self) -> int:
        return len(self.pairs)

    def _rows(self) -> list[tuple[str, str, str, str]]:
        return [
            (p.theta_par, p.label, "-" if p.degree is None else str(p.degree), "-" if p.field_D is None else str(p.field_D))
            for p in self.pairs
        ]

    def table(self) -> str:
        t = PrettyTable()
        t.field_names = ["theta||", "theta", "N", "D"]
        t.align = "l"
        for row in self._rows():
            t.add_row(list(row))
        return t.get_string()

    def to_polars(self) -> pl.DataFrame:
        rows = self._rows()
        return pl.DataFrame({name: [r[i] for r in rows] for i, name in enumerate(["theta_par", "theta", "N", "D"])})
