__all__ = [
    "Symmetry",
    "Window",
    "Star",
    "AmmannSpec",
    "AmmannPattern",
    "GridPlane",
    "SingularPoint",
]

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from typing_extensions import Self

from ..exactfield import QuadNum, vdot
from .quasilattice import QuasilatticeClass, QuasilatticeSpec
from .rootsystem import CoxeterPair, Projection

Symmetry = Literal["10", "8", "12", "h3", "h4"]


@dataclass(frozen=True)
class Window:
    """A disk (ball) of `radius` or an axis-aligned box `bounds`, in units of
    the mean plane spacing of the pattern it is applied to.

    Exactly one of `radius` and `bounds` is set.
    """

    radius: Optional[Fraction] = None
    bounds: Optional[tuple[tuple[Fraction, Fraction], ...]] = None

    def __post_init__(self):
        if (self.radius is None) == (self.bounds is None):
            raise ValueError("a window is either a disk or a box")
        if self.radius is not None and self.radius < 0:
            raise ValueError("window radius must be >= 0")
        if self.bounds is not None and any(lo > hi for lo, hi in self.bounds):
            raise ValueError("window bounds must satisfy lo <= hi")

    @classmethod
    def disk(cls, radius) -> Self:
        return cls(radius=Fraction(radius))

    @classmethod
    def box(cls, *bounds) -> Self:
        return cls(bounds=tuple((Fraction(lo), Fraction(hi)) for lo, hi in bounds))

    @property
    def kind(self) -> Literal["disk", "box"]:
        return "disk" if self.radius is not None else "box"

    @property
    def empty(self) -> bool:
        if self.radius is not None:
            return self.radius == 0
        return any(lo == hi for lo, hi in self.bounds)

    @property
    def radius_sq(self) -> Fraction:
        """Squared radius of the smallest origin-centred disk holding the window."""
        if self.radius is not None:
            return self.radius * self.radius
        return sum(max(lo * lo, hi * hi) for lo, hi in self.bounds)

    def padded(self, pad: Fraction) -> Self:
        if self.radius is not None:
            return type(self)(radius=self.radius + pad)
        return type(self)(bounds=tuple((lo - pad, hi + pad) for lo, hi in self.bounds))

    def scaled(self, factor: Fraction) -> Self:
        if self.radius is not None:
            return type(self)(radius=self.radius * factor)
        return type(self)(bounds=tuple((lo * factor, hi * factor) for lo, hi in self.bounds))

    def __str__(self):
        if self.radius is not None:
            return str(self.radius)
        return ":".join(f"{lo}:{hi}" for lo, hi in self.bounds)


@dataclass(frozen=True)
class Star:
    """The G(theta_par)-orbit of star vectors.

    Properties:
      directions: a_j+ in frame coordinates; plane offsets along a_j+ are
        t_j(x) = a_j+ . x against the projection metric.
      lifted_a, lifted_b: rational coefficient vectors on the fundamental
        roots of theta lifting a_j+ and b_j+ = -a_j+ / r-.
      a_plus, b_plus: the magnitudes in offset units.
      norm_sq: |a_j+|^2, the same for every j.
    """

    directions: tuple[tuple[QuadNum, ...], ...]
    lifted_a: tuple[tuple[Fraction, ...], ...]
    lifted_b: tuple[tuple[Fraction, ...], ...]
    a_plus: QuadNum
    b_plus: QuadNum
    norm_sq: QuadNum

    @property
    def J(self) -> int:
        return len(self.directions)

    @property
    def dim(self) -> int:
        return len(self.directions[0])


@dataclass(frozen=True)
class AmmannSpec:
    """Everything that determines an Ammann pattern.

    `seed` is in frame coordinates of the projection; `q0` holds rational
    coefficients on the fundamental roots of theta.
    """

    pair: CoxeterPair
    qclass: QuasilatticeClass
    seed: tuple[QuadNum, ...]
    q0: tuple[Fraction, ...]
    dedup_antipodal: bool = True
    window: Optional[Window] = None
    symmetry: Optional[str] = None

    def __post_init__(self):
        if all(x == 0 for x in self.seed):
            raise ValueError("star seed must be nonzero")
        if self.pair.field_D != self.qclass.D:
            raise ValueError(
                f"row {self.qclass.row_id} lives in Q(sqrt {self.qclass.D}), "
                f"pair {self.pair.theta_par} in Q(sqrt {self.pair.field_D})"
            )


@dataclass(frozen=True)
class AmmannPattern:
    """Per-direction quasilattices of an Ammann pattern.

    `q0_plus` is the parallel component of the slice origin in frame
    coordinates. `halved` patterns carry an extra plane halfway between
    every pair of neighbours.
    """

    spec: AmmannSpec
    projection: Projection
    star: Star
    per_direction: tuple[QuasilatticeSpec, ...]
    q0_plus: tuple[QuadNum, ...]
    gamma_total: QuadNum = field(repr=False)
    halved: bool = False

    @property
    def J(self) -> int:
        return self.star.J

    @property
    def D(self) -> int:
        return self.projection.D

    @property
    def metric(self) -> tuple[QuadNum, ...]:
        return self.projection.metric

    @property
    def scale(self) -> QuadNum:
        return self.per_direction[0].scale

    @property
    def mean_step(self) -> QuadNum:
        """<m+> = scale * (kappa1 m2+ + kappa2 m1+), in offset units."""
        s = self.per_direction[0]
        r_minus = s.qclass.ratio_minus
        k1 = 1 / (1 - r_minus)
        k2 = 1 / (1 - 1 / r_minus)
        return s.scale * (k1 * s.m2_plus + k2 * s.m1_plus)

    @property
    def gamma(self) -> QuadNum:
        """sum_j e_j e_j^T = gamma * I for the unit star vectors."""
        return self.gamma_total / self.star.norm_sq

    def offset(self, j: int, y: tuple[QuadNum, ...]) -> QuadNum:
        return vdot(self.star.directions[j], y, self.metric)

    def display(self, y: tuple[QuadNum, ...]) -> tuple[float, ...]:
        """Euclidean coordinates scaled so that one unit is the mean plane
        spacing of the unrefined pattern."""
        unit = float(self.mean_step / self.scale)
        a = math.sqrt(float(self.star.norm_sq))
        return tuple(float(yi) * math.sqrt(float(g)) * a / unit for yi, g in zip(y, self.metric))


@dataclass(frozen=True)
class GridPlane:
    """Plane number `n` of direction `j`, at offset t_j = `offset`.

    `n` is an integer, or a half-integer for planes added by halving."""

    j: int
    n: Fraction
    offset: QuadNum


@dataclass
class SingularPoint:
    point: tuple[QuadNum, ...]
    planes: list[tuple[int, Fraction]] = field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return len(self.planes)
