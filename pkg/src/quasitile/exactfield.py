#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact arithmetic over Q and the real quadratic fields Q(sqrt D).

Every geometric predicate of the package (plane ordering, floors, window
membership, concurrency of lines) is decided here with rational arithmetic
only. Floats appear exclusively in `to_float`, for rendering.
"""
__all__ = [
    "Rational",
    "QuadNum",
    "Ordering",
    "arith",
    "conjugate",
    "compare",
    "floor_exact",
    "to_float",
    "golden_ratio",
    "quad",
    "is_squarefree",
    "vadd",
    "vsub",
    "vscale",
    "vdot",
    "vconj",
    "vzero",
    "solve_linear",
]

import math
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Sequence, Union

from .exceptions import FieldMismatchError, NonSquarefreeError

Rational = Fraction
RationalLike = Union[int, Fraction]


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@lru_cache(maxsize=None)
def is_squarefree(D: int) -> bool:
    """True if D is an integer > 1 without repeated prime factors."""
    if D < 2:
        return False
    p = 2
    while p * p <= D:
        if D % (p * p) == 0:
            return False
        p += 1
    return True


def _sign(a: Fraction, b: Fraction, D: int) -> int:
    # sign of a + b*sqrt(D), by sign split and squaring
    if b == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0:
        return sb
    sa = 1 if a > 0 else -1
    if sa == sb:
        return sa
    # a*a == b*b*D has no rational solution for squarefree D
    return sa if a * a > b * b * D else sb


class QuadNum:
    """An element `a + b*sqrt(D)` of Q(sqrt D), with `a`, `b` exact rationals.

    Instances are immutable and hashable. Rational values hash like the
    equal `Fraction`, so `QuadNum(3, 0, D) == 3` and both land in the same
    dict slot.
    """

    __slots__ = ("a", "b", "D")

    a: Fraction
    b: Fraction
    D: int

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, D: int = 5):
        if not is_squarefree(D):
            raise NonSquarefreeError(D)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "D", D)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: int) -> "QuadNum":
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "D", D)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @staticmethod
    def sqrt(D: int) -> "QuadNum":
        return QuadNum(0, 1, D)

    @staticmethod
    def rational(x: RationalLike, D: int) -> "QuadNum":
        return QuadNum(x, 0, D)

    # -- coercion --------------------------------------------------------

    def _parts(self, other) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, QuadNum):
            if other.D != self.D:
                raise FieldMismatchError(self.D, other.D)
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadNum._raw(self.a + p[0], self.b + p[1], self.D)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadNum._raw(self.a - p[0], self.b - p[1], self.D)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadNum._raw(p[0] - self.a, p[1] - self.b, self.D)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        if d == 0:
            return QuadNum._raw(self.a * c, self.b * c, self.D)
        return QuadNum._raw(
            self.a * c + self.b * d * self.D, self.a * d + self.b * c, self.D
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        if d == 0:
            if c == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt %d)" % self.D)
            return QuadNum._raw(self.a / c, self.b / c, self.D)
        n = c * c - d * d * self.D
        return QuadNum._raw(
            (self.a * c - self.b * d * self.D) / n, (self.b * c - self.a * d) / n, self.D
        )

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadNum._raw(p[0], p[1], self.D) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self**-k)
        result = QuadNum._raw(Fraction(1), Fraction(0), self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return QuadNum._raw(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- field structure -------------------------------------------------

    def conjugate(self) -> "QuadNum":
        return QuadNum._raw(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sign(self) -> int:
        return _sign(self.a, self.b, self.D)

    # -- order -----------------------------------------------------------

    def _cmp(self, other) -> int:
        p = self._parts(other)
        if p is None:
            raise TypeError(f"cannot compare QuadNum with {type(other).__name__}")
        return _sign(self.a - p[0], self.b - p[1], self.D)

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            return self.a == other.a and self.b == other.b and (
                self.D == other.D or self.b == 0
            )
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __floor__(self):
        return floor_exact(self)

    def __ceil__(self):
        return -floor_exact(-self)

    def __float__(self):
        return to_float(self)

    # -- display ---------------------------------------------------------

    def __repr__(self):
        return f"QuadNum({self.a}, {self.b}, {self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        b = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        root = f"{b}sqrt({self.D})"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{root}"


def quad(x: "QuadNum | RationalLike", D: int) -> QuadNum:
    """Promote a rational (or pass through a QuadNum) into Q(sqrt D)."""
    if isinstance(x, QuadNum):
        if x.D != D and x.b != 0:
            raise FieldMismatchError(x.D, D)
        return x if x.D == D else QuadNum._raw(x.a, x.b, D)
    return QuadNum._raw(Fraction(x), Fraction(0), D)


def golden_ratio() -> QuadNum:
    """tau = (1 + sqrt 5)/2."""
    return QuadNum(Fraction(1, 2), Fraction(1, 2), 5)


def arith(
    x: QuadNum, y: QuadNum, op: Literal["add", "sub", "mul", "div"]
) -> QuadNum:
    """Exact field operation `op` on two elements of the same field."""
    if x.D != y.D:
        raise FieldMismatchError(x.D, y.D)
    if op == "add":
        return x + y
    elif op == "sub":
        return x - y
    elif op == "mul":
        return x * y
    elif op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def conjugate(x: QuadNum) -> QuadNum:
    return x.conjugate()


def compare(x: QuadNum, y: QuadNum) -> Ordering:
    return Ordering(x._cmp(y))


def floor_exact(x: "QuadNum | RationalLike") -> int:
    """Greatest integer <= x.

    A rational estimate from an integer square root brackets the value to
    within one unit; the result is then settled by exact sign tests.
    """
    if not isinstance(x, QuadNum):
        return math.floor(x)
    if x.b == 0:
        return math.floor(x.a)
    q = x.b * x.b * x.D
    s = math.isqrt(q.numerator * q.denominator)
    root = Fraction(s, q.denominator)
    k = math.floor(x.a + root if x.b > 0 else x.a - root)
    while _sign(x.a - k, x.b, x.D) < 0:
        k -= 1
    while _sign(x.a - k - 1, x.b, x.D) >= 0:
        k += 1
    return k


def to_float(x: "QuadNum | RationalLike") -> float:
    """Nearest double. Rendering only."""
    if not isinstance(x, QuadNum):
        return float(x)
    if x.b == 0:
        return float(x.a)
    return float(x.a) + float(x.b) * math.sqrt(x.D)


# ---------------------------------------------------------------------------
# vectors over Q(sqrt D), carried as tuples


Vector = tuple


def vzero(n: int, D: int) -> tuple[QuadNum, ...]:
    z = QuadNum._raw(Fraction(0), Fraction(0), D)
    return tuple(z for _ in range(n))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v, strict=True))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v, strict=True))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * x for x in u)


def vconj(u: Sequence) -> tuple:
    return tuple(x.conjugate() if isinstance(x, QuadNum) else x for x in u)


def vdot(u: Sequence, v: Sequence, metric: Sequence | None = None):
    """Inner product, optionally against a diagonal metric."""
    if metric is None:
        terms: Iterable = (x * y for x, y in zip(u, v, strict=True))
    else:
        terms = (g * x * y for g, x, y in zip(metric, u, v, strict=True))
    total = 0
    for t in terms:
        total = t + total
    return total


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve a square system over Q or Q(sqrt D) by Gauss-Jordan elimination.

    Raises:
        ZeroDivisionError: the matrix is singular.
    """
    n = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs, strict=True)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]
