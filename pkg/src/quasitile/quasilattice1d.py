#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The ten self-similar 1D quasilattices of degree two.

Every quasilattice is given in closed form,

    x_n = m1+ (n - chi1+) + (m2+ - m1+)(floor(kappa1 (n - chi1-)) + 1/2),

and is evaluated exactly: the floor is taken with `floor_exact`, so the
position of a plane never depends on floating point.
"""
__all__ = [
    "builtin_classes",
    "get_class",
    "kappas",
    "intervals_from_magnitudes",
    "quasilattice_spec",
    "is_singular",
    "position",
    "position_alt",
    "generate",
    "index_range",
    "inflate_phases",
    "refine",
    "inversion_symmetry",
    "halve",
    "degree_two_separations",
    "substitution_words",
    "self_similarity",
]

import bisect
import logging
import math
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exactfield import QuadNum, floor_exact, quad
from .exceptions import SingularPhaseError
from .models.quasilattice import (
    ROW_IDS,
    Quasilattice1DWindow,
    QuasilatticeClass,
    QuasilatticeSpec,
    SelfSimilarityReport,
)

GENERIC_PHASE = Fraction(1, 7)

# row -> (D, ratio+ as (a, b), lambda+ as (a, b), wall-to-wall)
_ROWS: dict[str, tuple[int, tuple, tuple, bool]] = {
    "1": (5, (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2)), False),
    "2a": (2, (0, 1), (1, 1), False),
    "2b": (2, (1, 1), (1, 1), True),
    "3a": (3, (1, 1), (2, 1), False),
    "3b": (3, (0, 1), (2, 1), True),
    "3c": (3, (-1, 1), (2, 1), False),
    "4a": (5, (-1, 1), (2, 1), False),
    "4b": (5, (0, 1), (2, 1), True),
    "4c": (5, (1, 1), (2, 1), False),
    "4d": (5, (2, 1), (2, 1), True),
}


@lru_cache(maxsize=None)
def _classes() -> tuple[QuasilatticeClass, ...]:
    out = []
    for row_id in ROW_IDS:
        D, r, lam, w2w = _ROWS[row_id]
        ratio = QuadNum(*r, D)
        scale = QuadNum(*lam, D)
        out.append(
            QuasilatticeClass(row_id, ratio, ratio.conjugate(), scale, scale.conjugate(), w2w)
        )
    return tuple(out)


def builtin_classes(verify: bool = False) -> list[QuasilatticeClass]:
    """The ten rows "1", "2a", ..., "4d".

    With `verify=True` every row is run through `self_similarity` first and a
    ValueError is raised if a row fails it.
    """
    classes = list(_classes())
    if verify:
        for c in classes:
            report = self_similarity(c)
            if not report.ok or report.wall_to_wall != c.wall_to_wall:
                raise ValueError(f"row {c.row_id} fails the self-similarity check: {report}")
    return classes


def get_class(row_id: str) -> QuasilatticeClass:
    """Look up a row by id; "R2b" and "2b" are both accepted."""
    key = row_id[1:] if row_id.upper().startswith("R") else row_id
    for c in _classes():
        if c.row_id == key.lower():
            return c
    raise ValueError(f"unknown quasilattice row {row_id!r}, expected one of {', '.join(ROW_IDS)}")


def kappas(qclass: QuasilatticeClass) -> tuple[QuadNum, QuadNum]:
    """(kappa1, kappa2) = (1/(1 - m2-/m1-), 1/(1 - m1-/m2-)); they sum to 1."""
    r = qclass.ratio_minus
    if r == 0 or r == 1:
        raise ValueError(f"degenerate ratio m2-/m1- = {r}")
    return 1 / (1 - r), 1 / (1 - 1 / r)


def intervals_from_magnitudes(
    qclass: QuasilatticeClass, a_plus: QuadNum, b_plus: QuadNum
) -> tuple[QuadNum, QuadNum]:
    """Interval lengths (m1+, m2+) of the quasilattice dual to a bi-grid of
    spacings 1/a+ and 1/b+.

    Requires b+ = -(m1-/m2-) a+.
    """
    D = qclass.D
    a_plus, b_plus = quad(a_plus, D), quad(b_plus, D)
    if b_plus != -a_plus / qclass.ratio_minus:
        raise ValueError("b+ must equal -(m1-/m2-) a+")
    q = qclass.ratio_plus / qclass.ratio_minus
    m1 = 1 / ((1 - q) * a_plus)
    m2 = 1 / ((1 - 1 / q) * b_plus)
    return m1, m2


def quasilattice_spec(
    qclass: QuasilatticeClass,
    chi1_plus=GENERIC_PHASE,
    chi1_minus=None,
    a_plus=1,
) -> QuasilatticeSpec:
    """A spec of the given row with phase chi1 (chi1- defaults to the
    conjugate of chi1+) and interval lengths fixed by a+."""
    D = qclass.D
    a_plus = quad(a_plus, D)
    chi1_plus = quad(chi1_plus, D)
    chi1_minus = chi1_plus.conjugate() if chi1_minus is None else quad(chi1_minus, D)
    m1, m2 = intervals_from_magnitudes(qclass, a_plus, -a_plus / qclass.ratio_minus)
    return QuasilatticeSpec(qclass, m1, m2, m1.conjugate(), m2.conjugate(), chi1_plus, chi1_minus)


def _floor_arg(spec: QuasilatticeSpec, n: int) -> QuadNum:
    k1, _ = kappas(spec.qclass)
    return k1 * (n - spec.chi1_minus)


def is_singular(spec: QuasilatticeSpec, n: int) -> bool:
    return _floor_arg(spec, n).is_integer()


def position(spec: QuasilatticeSpec, n: int) -> QuadNum:
    """x_n from the kappa1 form.

    Raises:
        SingularPhaseError: kappa1 (n - chi1-) is an integer.
    """
    arg = _floor_arg(spec, n)
    if arg.is_integer():
        raise SingularPhaseError(n)
    f = floor_exact(arg)
    x = spec.m1_plus * (n - spec.chi1_plus) + (spec.m2_plus - spec.m1_plus) * (Fraction(f) + Fraction(1, 2))
    return spec.scale * x


def position_alt(spec: QuasilatticeSpec, n: int) -> QuadNum:
    """x_n from the kappa2 form; equals `position` whenever n is nonsingular."""
    _, k2 = kappas(spec.qclass)
    arg = k2 * (n - spec.chi2_minus)
    if arg.is_integer():
        raise SingularPhaseError(n)
    f = floor_exact(arg)
    x = spec.m2_plus * (n - spec.chi2_plus) + (spec.m1_plus - spec.m2_plus) * (Fraction(f) + Fraction(1, 2))
    return spec.scale * x


def generate(spec: QuasilatticeSpec, n_lo: int, n_hi: int) -> Quasilattice1DWindow:
    """Positions x_n for n_lo <= n <= n_hi, cross-checked between both closed
    forms, with interval labels ("L" is the longer interval)."""
    if n_hi < n_lo:
        return Quasilattice1DWindow(n_lo, (), ())
    positions = []
    for n in range(n_lo, n_hi + 1):
        x = position(spec, n)
        if x != position_alt(spec, n):
            raise SingularPhaseError(n)
        positions.append(x)
    long = spec.long
    labels = tuple("L" if b - a == long else "S" for a, b in zip(positions, positions[1:]))
    return Quasilattice1DWindow(n_lo, tuple(positions), labels)


def index_range(spec: QuasilatticeSpec, lo: QuadNum, hi: QuadNum) -> tuple[int, int]:
    """(n_lo, n_hi) with lo <= x_n <= hi exactly for n_lo <= n <= n_hi.

    An empty range is returned as n_hi = n_lo - 1.
    """
    k1, k2 = kappas(spec.qclass)
    mean = float(spec.scale * (k1 * spec.m2_plus + k2 * spec.m1_plus))
    n = math.floor(float(lo) / mean + float(spec.chi1_plus))
    while position(spec, n) >= lo:
        n -= 1
    while position(spec, n + 1) < lo:
        n += 1
    n_lo = n + 1
    m = max(n_lo - 1, math.floor(float(hi) / mean + float(spec.chi1_plus)))
    while position(spec, m) > hi:
        m -= 1
    while position(spec, m + 1) <= hi:
        m += 1
    return n_lo, max(m, n_lo - 1)


def inflate_phases(spec: QuasilatticeSpec, k: int = 1) -> QuasilatticeSpec:
    """chi+- -> chi+- / lambda+-^k; the interval lengths are unchanged."""
    c = spec.qclass
    return replace(
        spec,
        chi1_plus=spec.chi1_plus / c.lambda_plus**k,
        chi1_minus=spec.chi1_minus / c.lambda_minus**k,
    )


def refine(spec: QuasilatticeSpec) -> QuasilatticeSpec:
    """The quasilattice one inflation level denser: phases multiplied by
    lambda+- and positions scaled by 1/lambda+."""
    c = spec.qclass
    return replace(
        spec,
        chi1_plus=spec.chi1_plus * c.lambda_plus,
        chi1_minus=spec.chi1_minus * c.lambda_minus,
        scale=spec.scale / c.lambda_plus,
    )


def inversion_symmetry(spec: QuasilatticeSpec) -> Optional[tuple[int, int]]:
    """Integers (p1, p2) with m1+- chi1+- = (p1 m1+- + p2 m2+-)/2, or None.

    When they exist, -x_n = x_{p1 + p2 - n} for every n.
    """
    r_plus = spec.qclass.ratio_plus
    two_chi = 2 * spec.chi1_plus
    # 2 chi1+ = p1 + p2 r+, split into rational and sqrt D parts
    p2 = two_chi.b / r_plus.b
    p1 = two_chi.a - p2 * r_plus.a
    if p1.denominator != 1 or p2.denominator != 1:
        return None
    if 2 * spec.chi1_minus != p1 + p2 * spec.qclass.ratio_minus:
        return None
    return int(p1), int(p2)


def halve(window: Quasilattice1DWindow) -> tuple[QuadNum, ...]:
    """The positions together with the midpoint of every interval, sorted."""
    out = []
    for a, b in zip(window.positions, window.positions[1:]):
        out.extend((a, (a + b) / 2))
    if window.positions:
        out.append(window.positions[-1])
    return tuple(out)


def degree_two_separations(window: Quasilattice1DWindow) -> dict[str, set[QuadNum]]:
    """Distances between the starts of consecutive equal letters."""
    starts: dict[str, list[QuadNum]] = {"L": [], "S": []}
    for x, label in zip(window.positions, window.interval_labels):
        starts[label].append(x)
    return {label: {b - a for a, b in zip(xs, xs[1:])} for label, xs in starts.items()}


def _pieces(window: Quasilattice1DWindow, halves: bool) -> list[tuple[QuadNum, QuadNum, str]]:
    out = []
    for a, b, label in zip(window.positions, window.positions[1:], window.interval_labels):
        if halves:
            mid = (a + b) / 2
            out.append((a, mid, f"{label}_left"))
            out.append((mid, b, f"{label}_right"))
        else:
            out.append((a, b, label))
    return out


def substitution_words(
    spec: QuasilatticeSpec, n_lo: int, n_hi: int
) -> tuple[dict[str, set[tuple[str, ...]]], list[int], bool]:
    """How each interval of the inflated quasilattice is cut by the original.

    The inflated points T_n = lambda+ x_n(chi / lambda) are matched against
    the original points. If every T_n is an original point, words are
    written over {L, S}; otherwise over the half intervals {L_left, L_right,
    S_left, S_right}.

    Returns:
        (words by inflated interval label, indices n of T_n that are neither
        points nor midpoints, whether every T_n is a point)
    """
    lam = spec.qclass.lambda_plus
    coarse_spec = inflate_phases(spec)
    coarse = [lam * x for x in generate(coarse_spec, n_lo, n_hi).positions]
    if not coarse:
        return {}, [], True
    fine_lo, fine_hi = index_range(spec, coarse[0] - spec.long, coarse[-1] + spec.long)
    fine = generate(spec, fine_lo - 1, fine_hi + 1)
    points = set(fine.positions)
    mids = {(a + b) / 2 for a, b in zip(fine.positions, fine.positions[1:])}
    aligned = all(t in points for t in coarse)
    violations = [n_lo + i for i, t in enumerate(coarse) if t not in points and t not in mids]

    pieces = _pieces(fine, halves=not aligned)
    starts = [p[0] for p in pieces]
    coarse_long = lam * spec.long
    words: dict[str, set[tuple[str, ...]]] = {}
    for a, b in zip(coarse, coarse[1:]):
        i = bisect.bisect_left(starts, a)
        word = []
        while i < len(pieces) and pieces[i][1] <= b:
            word.append(pieces[i][2])
            i += 1
        label = "L" if b - a == coarse_long else "S"
        words.setdefault(label, set()).add(tuple(word))
    return words, violations, aligned


def _lattice_coefficients(x: QuadNum, r: QuadNum) -> tuple[Fraction, Fraction]:
    # x = p + q r
    q = x.b / r.b
    return x.a - q * r.a, q


def self_similarity(
    qclass: QuasilatticeClass, chi=GENERIC_PHASE, count: int = 600
) -> SelfSimilarityReport:
    """Check a row against the properties every table entry must have.

    * lambda+ is a unit of the ring of integers with |lambda+| > 1 > |lambda-|;
    * lambda+ and lambda+ r+ are nonnegative integer combinations of 1, r+;
    * inflated points land on points or midpoints (on points exactly for
      wall-to-wall rows);
    * exactly two separations between consecutive L's and between S's.
    """
    lam, r = qclass.lambda_plus, qclass.ratio_plus
    norm = lam.norm()
    unit_ok = (
        abs(norm) == 1
        and lam.trace().denominator == 1
        and abs(lam) > 1
        and abs(qclass.lambda_minus) < 1
    )
    lattice_ok = True
    for x in (lam, lam * r):
        p, q = _lattice_coefficients(x, r)
        if p.denominator != 1 or q.denominator != 1 or p < 0 or q < 0:
            lattice_ok = False

    spec = quasilattice_spec(qclass, chi)
    half = count // 2
    window = generate(spec, -half, half)
    separations = degree_two_separations(window)
    coarse_half = max(2, int(half / float(lam)) - 2)
    words, violations, aligned = substitution_words(spec, -coarse_half, coarse_half)
    two_separations = all(len(s) == 2 for s in separations.values())
    report = SelfSimilarityReport(
        row_id=qclass.row_id,
        unit_ok=unit_ok,
        lattice_ok=lattice_ok,
        inflation_ok=not violations and two_separations,
        wall_to_wall=aligned and not violations,
        words=words,
        separations=separations,
        violations=violations,
    )
    logging.debug(
        f"row {qclass.row_id}: unit={unit_ok} lattice={lattice_ok} "
        f"violations={len(violations)} aligned={aligned}"
    )
    return report
