__all__ = ["Relation", "Presentation", "PhaseSystem", "GaugeStage", "TraceStep", "SpaceGroupClassification"]

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import polars as pl
import sympy
from prettytable import PrettyTable


@dataclass(frozen=True)
class Relation:
    """(R_{i1} R_{i2} ... R_{im})^order = 1, generators numbered from 1."""

    word: tuple[int, ...]
    order: int

    def __str__(self):
        w = "".join(f"R{i}" for i in self.word)
        return f"({w})^{self.order}" if len(self.word) > 1 else f"{w}^{self.order}"


@dataclass(frozen=True)
class Presentation:
    """Integer generator matrices acting on a primitive quasilattice basis
    b_1..b_dim (column k is the image of b_k) and Coxeter relations.

    `gauge_zeros` optionally names, per generator, the basis vectors b_l
    (from 1) whose phases the gauge sets to 0 once the squares R_i^2 = 1
    are imposed.
    """

    name: str
    generators: tuple[tuple[tuple[int, ...], ...], ...]
    relations: tuple[Relation, ...]
    gauge_zeros: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def dim(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    def matrix(self, i: int) -> sympy.Matrix:
        return sympy.Matrix(self.generators[i - 1])

    def word_matrix(self, word: tuple[int, ...]) -> sympy.Matrix:
        m = sympy.eye(self.dim)
        for i in word:
            m = m * self.matrix(i)
        return m


@dataclass
class PhaseSystem:
    """Congruences A . Phi = 0 (mod 1) on the unknowns Phi_i(b_l) and the
    gauge moves G . chi.

    The unknown (i, l) (generator i, basis vector b_l, both from 1) sits in
    column (i-1)*dim + (l-1). After `gauge_fix` the Smith invariants of A
    and the rank of G are filled in.
    """

    presentation: Presentation
    constraints: sympy.Matrix
    gauge: sympy.Matrix
    sources: list[Relation] = field(default_factory=list)
    invariants: Optional[list[int]] = None
    transform: Optional[sympy.Matrix] = None
    gauge_rank: Optional[int] = None

    @property
    def n_unknowns(self) -> int:
        return len(self.presentation.generators) * self.presentation.dim

    @property
    def rank(self) -> int:
        if self.invariants is None:
            return self.constraints.rank()
        return len(self.invariants)

    @property
    def torsion(self) -> list[int]:
        return [d for d in (self.invariants or []) if d > 1]

    @property
    def fixed(self) -> int:
        """Unknowns forced to 0: unit invariants plus gauge-absorbed moduli."""
        units = sum(1 for d in (self.invariants or []) if d == 1)
        return units + (self.gauge_rank or 0)

    @property
    def moduli(self) -> int:
        """Continuous solutions not absorbed by gauge moves."""
        return self.n_unknowns - self.rank - (self.gauge_rank or 0)

    def label(self, column: int) -> str:
        i, l = divmod(column, self.presentation.dim)
        return f"Φ{i + 1}(b{l + 1})"


@dataclass
class GaugeStage:
    """The gauge fixed on the reflection squares alone: columns set to 0
    and columns left in {0, 1/2}."""

    zeros: list[int]
    halves: list[int]
    n_unknowns: int

    def summary(self) -> str:
        rest = "rest" if len(self.zeros) + len(self.halves) == self.n_unknowns else str(len(self.halves))
        return f"{len(self.zeros)} of {self.n_unknowns} values fixed to 0, {rest} in {{0,1/2}}"


@dataclass
class TraceStep:
    """Congruences contributed by one relation and what is left afterwards."""

    relation: str
    constraints: list[str]
    state: str = ""


@dataclass
class SpaceGroupClassification:
    group: str
    count: int
    representatives: list[tuple[Fraction, ...]]
    torsion: list[int] = field(default_factory=list)
    trace: list[TraceStep] = field(default_factory=list)
    stage: Optional[GaugeStage] = None

    @property
    def symmorphic_only(self) -> bool:
        return self.count == 1

    def summary(self) -> str:
        noun = "space group" if self.count == 1 else "space groups"
        note = " (symmorphic)" if self.symmorphic_only else ""
        return f"{self.count} {noun}{note}"

    def table(self) -> str:
        t = PrettyTable()
        t.field_names = ["relation", "constraint", "left"]
        t.align = "l"
        for step in self.trace:
            rows = step.constraints or ["-"]
            for n, c in enumerate(rows):
                t.add_row([step.relation, c, step.state if n == len(rows) - 1 else ""])
        return t.get_string()

    def to_polars(self) -> pl.DataFrame:
        rows = [(s.relation, c, s.state) for s in self.trace for c in s.constraints]
        return pl.DataFrame(
            {
                "relation": [r for r, _, _ in rows],
                "constraint": [c for _, c, _ in rows],
                "left": [s for _, _, s in rows],
            }
        )
