#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Irreducible Ammann patterns.

A star of vectors a_j+ (a G(theta_par)-orbit in the parallel space) carries
one 1D quasilattice per direction; the phases of all of them follow from a
single slice origin q0, so that moving q0 to q0/lambda inflates the whole
pattern at once.
"""
__all__ = [
    "SYMMETRIES",
    "default_seed",
    "ammann_spec",
    "build_star",
    "build_pattern",
    "with_phases",
    "inflate",
    "refine_pattern",
    "planes_in_window",
    "point_in_window",
    "intersections",
    "detect_singular",
    "sample_q0",
    "angle_key",
]

import logging
import math
import random
from collections import deque
from dataclasses import replace
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence

from .exactfield import QuadNum, golden_ratio, quad, vdot
from .exceptions import InvalidStarError, SingularPhaseError
from .models.pattern import AmmannPattern, AmmannSpec, GridPlane, SingularPoint, Star, Window
from .models.quasilattice import QuasilatticeClass
from .models.rootsystem import CoxeterPair, Projection
from .quasilattice1d import index_range, inflate_phases, position, quasilattice_spec, refine
from .rootsystems import (
    build_root_system,
    coxeter_projection,
    direction_key,
    lift,
    project,
    project_ambient,
    projected_roots,
    quadratic_pair,
    reflect,
)

# symmetry -> (theta_par, drop antipodes)
SYMMETRIES: dict[str, tuple[str, bool]] = {
    "10": ("I2(5)", False),
    "8": ("I2(8)", True),
    "12": ("I2(12)", True),
    "h3": ("H3", True),
    "h4": ("H4", True),
}

_RESAMPLE_LIMIT = 20


def default_seed(symmetry: str, proj: Projection) -> tuple[QuadNum, ...]:
    """Seed of the minimal star: a pentagon vertex, a long root of B4 or F4,
    an icosahedron vertex or an H4 root."""
    D = proj.D
    if symmetry == "10":
        return (quad(0, D), quad(1, D))
    if symmetry == "8":
        e2_minus_e1 = (Fraction(-1), Fraction(1), Fraction(0), Fraction(0))
        return project_ambient(proj, e2_minus_e1)
    if symmetry == "12":
        return project_ambient(proj, proj.fundamental[0])
    if symmetry == "h3":
        return (quad(0, D), golden_ratio(), quad(1, D))
    if symmetry == "h4":
        return (quad(1, D), quad(0, D), quad(0, D), quad(0, D))
    raise ValueError(f"unknown symmetry {symmetry!r}")


def _mirrors(proj: Projection) -> list[tuple[QuadNum, ...]]:
    seen: dict[tuple, tuple[QuadNum, ...]] = {}
    for y in projected_roots(proj):
        seen.setdefault(direction_key(y), y)
    return list(seen.values())


def angle_key(u: Sequence[QuadNum], v: Sequence[QuadNum]) -> int:
    """Comparator ordering 2D vectors by angle in [0, 2 pi)."""

    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -cross.sign() if isinstance(cross, QuadNum) else (cross < 0) - (cross > 0)


def build_star(
    pair: CoxeterPair,
    seed: Sequence[QuadNum],
    dedup_antipodal: bool,
    *,
    qclass: Optional[QuasilatticeClass] = None,
) -> Star:
    """Orbit of `seed` under the reflections of G(theta_par).

    The mirrors are the normals of the projected theta roots. With
    `dedup_antipodal` only the lexicographically larger of each +-a pair is
    kept. When `qclass` is given the lifts b_j of -a_j+/r- are filled in.

    Raises:
        InvalidStarError: the seed is fixed by the group.
    """
    proj = coxeter_projection(pair)
    seed = tuple(quad(x, proj.D) for x in seed)
    if all(x == 0 for x in seed):
        raise InvalidStarError("star seed must be nonzero")
    mirrors = _mirrors(proj)
    orbit = {seed}
    queue = deque([seed])
    while queue:
        p = queue.popleft()
        for r in mirrors:
            q = reflect(p, r, proj.metric)
            if q not in orbit:
                orbit.add(q)
                queue.append(q)
    if len(orbit) < 2:
        raise InvalidStarError("seed is fixed by the whole group")
    if dedup_antipodal:
        orbit = {p for p in orbit if tuple(-x for x in p) not in orbit or p > tuple(-x for x in p)}
    if len(seed) == 2:
        directions = sorted(orbit, key=cmp_to_key(angle_key))
    else:
        directions = sorted(orbit, reverse=True)
    norm_sq = vdot(seed, seed, proj.metric)
    lifted_a = tuple(lift(proj, a) for a in directions)
    lifted_b: tuple = ()
    b_plus = None
    if qclass is not None:
        b_plus = -1 / qclass.ratio_minus
        lifted_b = tuple(lift(proj, tuple(b_plus * x for x in a)) for a in directions)
        for a, b in zip(lifted_a, lifted_b):
            if _parallel(a, b):
                raise InvalidStarError("a_j and b_j are parallel")
    logging.debug(f"{pair.theta_par} star: {len(orbit)} directions")
    return Star(
        directions=tuple(directions),
        lifted_a=lifted_a,
        lifted_b=lifted_b,
        a_plus=quad(1, proj.D),
        b_plus=b_plus,
        norm_sq=norm_sq,
    )


def _parallel(a: Sequence, b: Sequence) -> bool:
    """True when every 2x2 minor of the pair (a, b) vanishes."""
    n = len(a)
    return all(a[i] * b[k] == a[k] * b[i] for i in range(n) for k in range(i + 1, n))


def _frame_operator(star: Star, metric: Sequence[QuadNum]) -> QuadNum:
    """Gamma with sum_j a_j (a_j . y) = Gamma y.

    Raises:
        InvalidStarError: the operator is not a multiple of the identity.
    """
    n = star.dim
    m = [
        [sum((a[i] * a[k] * metric[k] for a in star.directions), quad(0, metric[0].D)) for k in range(n)]
        for i in range(n)
    ]
    gamma = m[0][0]
    for i in range(n):
        for k in range(n):
            if m[i][k] != (gamma if i == k else 0):
                raise InvalidStarError("sum of a_j a_j^T is not a multiple of the identity")
    return gamma


def ammann_spec(
    symmetry: str,
    qclass: QuasilatticeClass,
    q0: Optional[Sequence] = None,
    window: Optional[Window] = None,
    dedup_antipodal: Optional[bool] = None,
) -> AmmannSpec:
    """Spec of the minimal Ammann pattern with the given symmetry and row."""
    theta_par, dedup = SYMMETRIES[symmetry]
    pair = quadratic_pair(theta_par)
    proj = coxeter_projection(pair)
    q0 = tuple(Fraction(0) for _ in range(proj.d)) if q0 is None else tuple(Fraction(x) for x in q0)
    return AmmannSpec(
        pair=pair,
        qclass=qclass,
        seed=default_seed(symmetry, proj),
        q0=q0,
        dedup_antipodal=dedup if dedup_antipodal is None else dedup_antipodal,
        window=window,
        symmetry=symmetry,
    )


def build_pattern(spec: AmmannSpec) -> AmmannPattern:
    """Per-direction quasilattices with chi_j+- = (a_j+- + (m2+-/m1+-) b_j+-) . q0+-.

    With a+ = 1 and b_j+ = -a_j+/r- this is chi_j+ = (1 - r+/r-) (a_j+ . q0+),
    and chi_j- is its conjugate because q0 is rational.
    """
    proj = coxeter_projection(spec.pair)
    qclass = spec.qclass
    star = build_star(spec.pair, spec.seed, spec.dedup_antipodal, qclass=qclass)
    gamma_total = _frame_operator(star, proj.metric)
    q0_plus, _ = project(proj, spec.q0)
    factor = 1 - qclass.ratio_plus / qclass.ratio_minus
    per_direction = []
    for j, a in enumerate(star.directions):
        chi_plus = factor * vdot(a, q0_plus, proj.metric)
        s = quasilattice_spec(qclass, chi_plus, chi_plus.conjugate())
        per_direction.append(s)
        a_minus = project(proj, star.lifted_a[j])[1]
        b_minus = project(proj, star.lifted_b[j])[1]
        if any(s.m1_plus * x + s.m2_plus * y != 0 for x, y in zip(a_minus, b_minus)):
            raise InvalidStarError(f"m1+ a_j- + m2+ b_j- != 0 for j = {j}")
    logging.info(f"Ammann pattern {spec.symmetry or spec.pair.theta_par} row {qclass.row_id}: J = {star.J}")
    return AmmannPattern(
        spec=spec,
        projection=proj,
        star=star,
        per_direction=tuple(per_direction),
        q0_plus=q0_plus,
        gamma_total=gamma_total,
    )


def with_phases(pattern: AmmannPattern, phases: Sequence) -> AmmannPattern:
    """Replace the phase chi_j+ of every direction (chi_j- is the conjugate)
    and put the slice origin at 0."""
    if len(phases) != pattern.J:
        raise ValueError(f"expected {pattern.J} phases, got {len(phases)}")
    D = pattern.D
    per_direction = tuple(
        replace(s, chi1_plus=quad(c, D), chi1_minus=quad(c, D).conjugate())
        for s, c in zip(pattern.per_direction, phases)
    )
    return replace(
        pattern,
        per_direction=per_direction,
        q0_plus=tuple(quad(0, D) for _ in pattern.q0_plus),
    )


def inflate(pattern: AmmannPattern, k: int = 1) -> AmmannPattern:
    """Move the slice origin to q0+- / lambda+-^k.

    Every per-direction phase is divided by lambda+-^k; the result equals
    `build_pattern` at the moved origin.
    """
    lam = pattern.spec.qclass.lambda_plus**k
    q0_plus = tuple(x / lam for x in pattern.q0_plus)
    spec = replace(pattern.spec, q0=lift(pattern.projection, q0_plus))
    return replace(
        pattern,
        spec=spec,
        q0_plus=q0_plus,
        per_direction=tuple(inflate_phases(s, k) for s in pattern.per_direction),
    )


def refine_pattern(pattern: AmmannPattern) -> AmmannPattern:
    """The pattern one inflation level denser, around the same origin."""
    return replace(pattern, per_direction=tuple(refine(s) for s in pattern.per_direction))


def _unit(pattern: AmmannPattern) -> QuadNum:
    # mean spacing of the unrefined pattern; windows are measured in it
    return pattern.mean_step / pattern.scale


def _offset_bound(pattern: AmmannPattern, window: Window) -> tuple[QuadNum, QuadNum]:
    """(R_t^2, float bound) for plane offsets meeting the window."""
    u = _unit(pattern)
    bound_sq = window.radius_sq * u * u
    return bound_sq, math.sqrt(float(bound_sq)) + 1e-9


def planes_in_window(pattern: AmmannPattern, window: Window) -> list[GridPlane]:
    """Every plane (j, n) that meets the window, with its exact offset.

    Planes are selected against the window's bounding disk (ball). Halved
    patterns also return the planes halfway between neighbours, numbered
    n + 1/2.

    Raises:
        SingularPhaseError: a plane near the window has a singular phase.
    """
    if window.empty:
        return []
    bound_sq, bound = _offset_bound(pattern, window)
    planes = []
    for j, s in enumerate(pattern.per_direction):
        margin = s.long
        try:
            n_lo, n_hi = index_range(s, quad(Fraction(-bound), pattern.D) - margin, quad(Fraction(bound), pattern.D) + margin)
        except SingularPhaseError as e:
            raise SingularPhaseError(e.n, j)
        xs = [(n, position(s, n)) for n in range(n_lo, n_hi + 1)]
        candidates = [(Fraction(n), x) for n, x in xs]
        if pattern.halved:
            candidates += [(Fraction(2 * n + 1, 2), (x + y) / 2) for (n, x), (_, y) in zip(xs, xs[1:])]
        for n, x in sorted(candidates):
            if x * x <= bound_sq:
                planes.append(GridPlane(j, n, x))
    logging.debug(f"{len(planes)} planes in window {window}")
    return planes


def _ge_scaled(s: QuadNum, c: QuadNum, b: QuadNum) -> bool:
    # s * sqrt(c) >= b with c > 0
    if s >= 0 and b <= 0:
        return True
    if s < 0 and b >= 0:
        return False
    if s >= 0:
        return s * s * c >= b * b
    return s * s * c <= b * b


def point_in_window(pattern: AmmannPattern, window: Window, y: Sequence[QuadNum]) -> bool:
    """Exact membership of the frame point y (closed window)."""
    u = _unit(pattern)
    A = pattern.star.norm_sq
    if window.radius is not None:
        return vdot(y, y, pattern.metric) * A <= window.radius_sq * u * u
    for yi, g, (lo, hi) in zip(y, pattern.metric, window.bounds):
        c = g * A
        if not _ge_scaled(yi, c, lo * u):
            return False
        if not _ge_scaled(-yi, c, -hi * u):
            return False
    return True


def intersections(
    pattern: AmmannPattern, planes: Iterable[GridPlane], window: Optional[Window] = None
) -> dict[tuple[QuadNum, ...], list[tuple[int, Fraction]]]:
    """Every point where planes of two different directions cross, with all
    planes through it. Only 2D patterns are supported."""
    if pattern.star.dim != 2:
        raise ValueError("plane intersections are computed for 2D patterns only")
    g = pattern.metric
    by_dir: dict[int, list[GridPlane]] = {}
    for p in planes:
        by_dir.setdefault(p.j, []).append(p)
    dirs = pattern.star.directions
    points: dict[tuple[QuadNum, ...], set[tuple[int, Fraction]]] = {}
    js = sorted(by_dir)
    for ia, j in enumerate(js):
        for k in js[ia + 1 :]:
            # rows (g1 a1, g2 a2) of both directions; solve for the point
            m11, m12 = g[0] * dirs[j][0], g[1] * dirs[j][1]
            m21, m22 = g[0] * dirs[k][0], g[1] * dirs[k][1]
            det = m11 * m22 - m12 * m21
            for pj in by_dir[j]:
                for pk in by_dir[k]:
                    y = (
                        (m22 * pj.offset - m12 * pk.offset) / det,
                        (m11 * pk.offset - m21 * pj.offset) / det,
                    )
                    if window is not None and not point_in_window(pattern, window, y):
                        continue
                    entry = points.setdefault(y, set())
                    entry.add((pj.j, pj.n))
                    entry.add((pk.j, pk.n))
    return {y: sorted(v) for y, v in points.items()}


def detect_singular(pattern: AmmannPattern, window: Window) -> list[SingularPoint]:
    """Points of the window where more than two lines meet."""
    planes = planes_in_window(pattern, window)
    found = [
        SingularPoint(y, lines)
        for y, lines in intersections(pattern, planes, window).items()
        if len(lines) > 2
    ]
    if found:
        logging.info(f"{len(found)} singular points in window {window}")
    return found


def sample_q0(
    spec: AmmannSpec, seed: int, window: Optional[Window] = None, denominator: int = 97
) -> AmmannSpec:
    """Spec with a seeded random rational q0, resampled while any plane of
    the window has a singular phase."""
    rng = random.Random(seed)
    proj = coxeter_projection(spec.pair)
    for attempt in range(_RESAMPLE_LIMIT):
        q0 = tuple(Fraction(rng.randint(-denominator, denominator), denominator) for _ in range(proj.d))
        candidate = replace(spec, q0=q0)
        if window is None:
            return candidate
        try:
            planes_in_window(build_pattern(candidate), window)
            return candidate
        except SingularPhaseError as e:
            logging.warning(f"q0 sample {attempt} is singular ({e}), resampling")
    raise SingularPhaseError(0)
