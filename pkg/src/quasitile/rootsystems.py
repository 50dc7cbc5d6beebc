#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Root systems, Coxeter elements and the projections of a Coxeter pair.

A crystallographic system `theta` of rank d pairs with a non-crystallographic
system `theta_par` when both have rational rank d; for quadratic pairs the
embedding space splits into two Galois-conjugate halves and every rational
point is determined by its parallel component.
"""
__all__ = [
    "QUADRATIC_PAIRS",
    "build_root_system",
    "coxeter_element",
    "coxeter_number",
    "coxeter_projection",
    "quadratic_pair",
    "enumerate_coxeter_pairs",
    "lift_and_project",
    "project",
    "project_ambient",
    "lift",
    "projected_roots",
    "projected_root_rings",
    "mirror_multiplets",
    "reflect",
    "direction_key",
    "root_copies",
    "copy_ratios",
]

import logging
import math
import re
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Any, Literal, Sequence

import sympy

from .exactfield import QuadNum, golden_ratio, quad, solve_linear, vdot
from .exceptions import OutsideSpanError, UnsupportedRootSystemError
from .models.rootsystem import CoxeterPair, Projection, RootSystem

F0 = Fraction(0)
F1 = Fraction(1)
HALF = Fraction(1, 2)

# theta_par -> (theta, D)
QUADRATIC_PAIRS: dict[str, tuple[str, int]] = {
    "I2(5)": ("A4", 5),
    "I2(8)": ("B4", 2),
    "I2(12)": ("F4", 3),
    "H3": ("D6", 5),
    "H4": ("E8", 5),
}

# 2 cos(2 pi / h), the Coxeter-plane eigenvalue of C + C^T
_TWO_COS = {
    5: QuadNum(Fraction(-1, 2), HALF, 5),
    8: QuadNum(0, 1, 2),
    12: QuadNum(0, 1, 3),
}

_NAME = re.compile(r"^(?:(?P<fam>[ABCDEFGH])\(?(?P<n>\d+)\)?|I2\((?P<m>\d+)\))$")


def _unit(n: int, i: int, value=F1) -> list:
    v = [F0] * n
    v[i] = value
    return v


def _pm_pairs(n: int) -> list[tuple[Fraction, ...]]:
    roots = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [F0] * n
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    return roots


def _e8_roots() -> list[tuple[Fraction, ...]]:
    roots = _pm_pairs(8)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(Fraction(s, 2) for s in signs))
    return roots


def _e8_simple() -> list[tuple[Fraction, ...]]:
    alpha1 = tuple(Fraction(s, 2) for s in (1, -1, -1, -1, -1, -1, -1, 1))
    simple = [alpha1, (F1, F1) + (F0,) * 6]
    for k in range(1, 7):
        v = [F0] * 8
        v[k], v[k - 1] = F1, -F1
        simple.append(tuple(v))
    return simple


def _even_permutations(n: int):
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        if inversions % 2 == 0:
            yield p


def _h3_roots() -> list[tuple[QuadNum, ...]]:
    tau = golden_ratio()
    sigma = tau.conjugate()
    zero, one = quad(0, 5), quad(1, 5)
    roots = []
    for i in range(3):
        for s in (1, -1):
            v = [zero] * 3
            v[i] = one * s
            roots.append(tuple(v))
    base = (one / 2, tau / 2, sigma / 2)
    for shift in range(3):
        cyc = base[shift:] + base[:shift]
        for signs in product((1, -1), repeat=3):
            roots.append(tuple(c * s for c, s in zip(cyc, signs)))
    return roots


def _h4_roots() -> list[tuple[QuadNum, ...]]:
    tau = golden_ratio()
    sigma = tau.conjugate()
    zero, one = quad(0, 5), quad(1, 5)
    roots = []
    for i in range(4):
        for s in (1, -1):
            v = [zero] * 4
            v[i] = one * s
            roots.append(tuple(v))
    for signs in product((1, -1), repeat=4):
        roots.append(tuple(one * s / 2 for s in signs))
    base = (zero, tau / 2, one / 2, sigma / 2)
    for p in _even_permutations(4):
        for signs in product((1, -1), repeat=3):
            v = [zero] * 4
            for src, s in zip((1, 2, 3), signs):
                v[p[src]] = base[src] * s
            roots.append(tuple(v))
    return roots


def _h3_simple() -> list[tuple[QuadNum, ...]]:
    tau = golden_ratio()
    sigma = tau.conjugate()
    zero, one = quad(0, 5), quad(1, 5)
    return [
        (one, zero, zero),
        (-tau / 2, -sigma / 2, one / 2),
        (zero, zero, -one),
    ]


def _h4_simple() -> list[tuple[QuadNum, ...]]:
    tau = golden_ratio()
    sigma = tau.conjugate()
    zero, one = quad(0, 5), quad(1, 5)
    return [
        (one, zero, zero, zero),
        (-one / 2, -one / 2, -one / 2, -one / 2),
        (zero, one / 2, sigma / 2, tau / 2),
        (zero, sigma / 2, tau / 2, -one / 2),
    ]


def _parse_name(name: str) -> tuple[str, int]:
    m = _NAME.match(name.replace(" ", ""))
    if not m:
        raise UnsupportedRootSystemError(name)
    if m.group("m"):
        return "I2", int(m.group("m"))
    return m.group("fam"), int(m.group("n"))


@lru_cache(maxsize=None)
def build_root_system(name: str) -> RootSystem:
    """Roots and fundamental roots of the named system.

    Names follow the usual conventions: "A4", "B4", "D6", "E8", "F4", "G2",
    "H3", "H4", "I2(5)". A_n lives in the sum-zero hyperplane of
    (n+1)-space; E6 and E7 live inside the E8 coordinates.

    Raises:
        UnsupportedRootSystemError: unknown family or rank out of range.
    """
    fam, n = _parse_name(name)
    rank_ok = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 3,
        "D": n >= 4,
        "E": 6 <= n <= 8,
        "F": n == 4,
        "G": n == 2,
        "H": n in (3, 4),
        "I2": n >= 5,
    }
    if not rank_ok[fam]:
        raise UnsupportedRootSystemError(name, "rank out of range")
    label = f"I2({n})" if fam == "I2" else f"{fam}{n}"

    if fam == "A":
        dim = n + 1
        roots = []
        for i, j in permutations(range(dim), 2):
            v = [F0] * dim
            v[i], v[j] = F1, -F1
            roots.append(tuple(v))
        simple = []
        for k in range(n):
            v = [F0] * dim
            v[k], v[k + 1] = -F1, F1
            simple.append(tuple(v))
        return RootSystem(label, "A", n, tuple(roots), tuple(simple))

    if fam in ("B", "C"):
        short = F1 if fam == "B" else Fraction(2)
        roots = _pm_pairs(n)
        for i in range(n):
            for s in (1, -1):
                roots.append(tuple(_unit(n, i, short * s)))
        simple = [tuple(_unit(n, 0, short))]
        for k in range(1, n):
            v = [F0] * n
            v[k], v[k - 1] = F1, -F1
            simple.append(tuple(v))
        return RootSystem(label, fam, n, tuple(roots), tuple(simple))

    if fam == "D":
        roots = _pm_pairs(n)
        f1 = [F0] * n
        f1[0], f1[1] = -F1, -F1
        f2 = [F0] * n
        f2[0], f2[1] = F1, -F1
        simple = [tuple(f1), tuple(f2)]
        for k in range(2, n):
            v = [F0] * n
            v[k - 1], v[k] = F1, -F1
            simple.append(tuple(v))
        return RootSystem(label, "D", n, tuple(roots), tuple(simple))

    if fam == "E":
        roots = _e8_roots()
        simple = _e8_simple()
        if n < 8:
            # E7 is orthogonal to e7+e8, E6 additionally to e6+e8
            normals = [(6, 7)] if n == 7 else [(6, 7), (5, 7)]
            roots = [r for r in roots if all(r[i] + r[j] == 0 for i, j in normals)]
            simple = simple[:n]
        return RootSystem(label, "E", n, tuple(roots), tuple(simple))

    if fam == "F":
        roots = _pm_pairs(4)
        for i in range(4):
            for s in (1, -1):
                roots.append(tuple(_unit(4, i, Fraction(s))))
        for signs in product((1, -1), repeat=4):
            roots.append(tuple(Fraction(s, 2) for s in signs))
        simple = [
            (F1, -F1, F0, F0),
            (F0, F1, -F1, F0),
            (F0, F0, F1, F0),
            (-HALF, -HALF, -HALF, -HALF),
        ]
        return RootSystem(label, "F", 4, tuple(roots), tuple(simple))

    if fam == "G":
        roots = []
        for i, j in permutations(range(3), 2):
            v = [F0] * 3
            v[i], v[j] = F1, -F1
            roots.append(tuple(v))
        for i in range(3):
            for s in (1, -1):
                v = [Fraction(-s)] * 3
                v[i] = Fraction(2 * s)
                roots.append(tuple(v))
        simple = [(F1, -F1, F0), (Fraction(-2), F1, F1)]
        return RootSystem(label, "G", 2, tuple(roots), tuple(simple))

    if fam == "H":
        if n == 3:
            return RootSystem(
                label, "H", 3, tuple(_h3_roots()), tuple(_h3_simple()), False, 5
            )
        return RootSystem(
            label, "H", 4, tuple(_h4_roots()), tuple(_h4_simple()), False, 5
        )

    if n in _TWO_COS:
        return _dihedral_exact(label, n)
    # dihedral: the (2n)th roots of unity
    roots = tuple(
        (math.cos(math.pi * k / n), math.sin(math.pi * k / n)) for k in range(2 * n)
    )
    simple = ((1.0, 0.0), (-math.cos(math.pi / n), math.sin(math.pi / n)))
    return RootSystem(label, "I2", 2, roots, simple, False)


def _dihedral_exact(label: str, n: int) -> RootSystem:
    """I2(n) on unit axes e_0, e_1 at angle 2 pi / n, using
    e_{k+1} = 2 cos(2 pi / n) e_k - e_{k-1}.

    Odd n: the roots are +-e_k. Even n: e_k and e_k + e_{k+1}, the second
    mirror class being 2 cos(pi / n) times longer.
    """
    c = _TWO_COS[n]
    D = c.D
    axes = [(quad(1, D), quad(0, D)), (quad(0, D), quad(1, D))]
    while len(axes) < n + 1:
        axes.append(tuple(c * x - y for x, y in zip(axes[-1], axes[-2])))
    if n % 2:
        roots = axes[:n] + [tuple(-x for x in e) for e in axes[:n]]
        simple = (axes[0], axes[(n - 1) // 2])
    else:
        roots = axes[:n] + [tuple(x + y for x, y in zip(axes[k], axes[k + 1])) for k in range(n)]
        simple = (axes[0], tuple(x + y for x, y in zip(axes[n // 2 - 1], axes[n // 2])))
    half = c / 2
    gram = ((quad(1, D), half), (half, quad(1, D)))
    return RootSystem(label, "I2", 2, tuple(roots), simple, False, D, gram)


def _sym(v: Sequence[Fraction]) -> sympy.Matrix:
    return sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in v])


def _reflection_ambient(f: Sequence[Fraction]) -> sympy.Matrix:
    col = _sym(f)
    return sympy.eye(len(f)) - 2 * col * col.T / (col.T * col)[0]


def _cartan(rs: RootSystem) -> list[list[Fraction]]:
    fs = rs.fundamental_roots
    return [[2 * vdot(fl, fk) / vdot(fk, fk) for fk in fs] for fl in fs]


def coxeter_element(
    rs: RootSystem, basis: Literal["fundamental", "ambient"] = "fundamental"
) -> sympy.Matrix:
    """C = F1 F2 ... Fd, the product of the fundamental reflections.

    In the fundamental-root basis the entries are integers; in the ambient
    basis the matrix matches the explicit displays used for A4, B4 and F4.

    Raises:
        UnsupportedRootSystemError: for non-crystallographic systems.
    """
    if not rs.crystallographic:
        raise UnsupportedRootSystemError(rs.name, "Coxeter element needs integer roots")
    if basis == "ambient":
        c = sympy.eye(rs.ambient_dim)
        for f in rs.fundamental_roots:
            c = c * _reflection_ambient(f)
        return c
    cartan = _cartan(rs)
    d = rs.rank
    c = sympy.eye(d)
    for k in range(d):
        refl = sympy.eye(d)
        for l in range(d):
            refl[k, l] -= int(cartan[l][k])
        c = c * refl
    return c


@lru_cache(maxsize=None)
def coxeter_number(rs: RootSystem) -> int:
    """h = #roots / rank; for crystallographic systems also checked as the
    exact order of the Coxeter element."""
    h, rest = divmod(len(rs.roots), rs.rank)
    if rest:
        raise UnsupportedRootSystemError(rs.name, "root count not divisible by rank")
    if rs.crystallographic:
        c = coxeter_element(rs)
        ident = sympy.eye(rs.rank)
        power = ident
        for k in range(1, h):
            power = power * c
            if power == ident:
                raise UnsupportedRootSystemError(rs.name, f"C has order {k} < {h}")
        if power * c != ident:
            raise UnsupportedRootSystemError(rs.name, f"C^{h} is not the identity")
    return h


# ---------------------------------------------------------------------------
# pairs


def quadratic_pair(theta_par: str) -> CoxeterPair:
    """The N = 2 pair for "I2(5)", "I2(8)", "I2(12)", "H3" or "H4"."""
    try:
        theta, D = QUADRATIC_PAIRS[theta_par]
    except KeyError:
        raise UnsupportedRootSystemError(theta_par, "not a quadratic Coxeter pair")
    return CoxeterPair(theta_par, theta, 2, D)


def _crystallographic_candidates(rank: int) -> list[tuple[str, int]]:
    """(name, h) for every irreducible crystallographic system of this rank."""
    out = [(f"A{rank}", rank + 1)]
    if rank >= 2:
        out.append((f"B{rank}", 2 * rank))
    if rank >= 4:
        out.append((f"D{rank}", 2 * rank - 2))
    exceptional = {2: [("G2", 6)], 4: [("F4", 12)], 6: [("E6", 12)], 7: [("E7", 18)], 8: [("E8", 30)]}
    out.extend(exceptional.get(rank, []))
    return out


_QUADRATIC_FIELD = {5: 5, 8: 2, 12: 3}


def enumerate_coxeter_pairs(n_max: int) -> list[CoxeterPair]:
    """Every non-crystallographic I2(n), 5 <= n <= n_max (n != 6), with its
    crystallographic partner, followed by H3 and H4.

    The partner must have rank phi(n) and Coxeter number n; the closed-form
    Coxeter numbers of the irreducible families decide membership, so no
    root system is built here.
    """
    if n_max < 5:
        raise ValueError("n_max must be >= 5")
    pairs = []
    for n in range(5, n_max + 1):
        if n == 6:
            continue
        rank = int(sympy.totient(n))
        matches = [name for name, h in _crystallographic_candidates(rank) if h == n]
        if not matches:
            pairs.append(CoxeterPair(f"I2({n})", None))
            continue
        degree = rank // 2
        D = _QUADRATIC_FIELD.get(n) if degree == 2 else None
        pairs.append(CoxeterPair(f"I2({n})", matches[0], degree, D))
    pairs.append(CoxeterPair("H3", "D6", 2, 5))
    pairs.append(CoxeterPair("H4", "E8", 2, 5))
    logging.debug(f"enumerated {len(pairs)} candidate pairs up to I2({n_max})")
    return pairs


# ---------------------------------------------------------------------------
# projections


def _matvec(m: sympy.Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = m * _sym(v)
    return tuple(Fraction(int(x.p), int(x.q)) for x in out)


def _plane_frame(theta: RootSystem, D: int) -> list[tuple[QuadNum, ...]]:
    c = coxeter_element(theta, basis="ambient")
    s = c + c.T
    h = coxeter_number(theta)
    s_plus = _TWO_COS[h]
    s_minus = s_plus.conjugate()
    f1 = theta.fundamental_roots[0]

    def p_plus(x: Sequence[Fraction]) -> tuple[QuadNum, ...]:
        sx = _matvec(s, x)
        return tuple((a - s_minus * b) / (s_plus - s_minus) for a, b in zip(sx, x))

    u = p_plus(f1)
    v = p_plus(_matvec(c, f1))
    w = tuple(vi - (vdot(v, u) / vdot(u, u)) * ui for vi, ui in zip(v, u))
    return [u, w]


def _d6_frame() -> list[tuple[QuadNum, ...]]:
    tau = golden_ratio()
    zero, one = quad(0, 5), quad(1, 5)
    return [
        (tau, zero, one, tau, zero, -one),
        (one, tau, zero, -one, tau, zero),
        (zero, one, tau, zero, -one, tau),
    ]


_HADAMARD = (
    (-1, -1, -1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, -1),
    (1, -1, 1, -1),
)


def _e8_frame() -> list[tuple[QuadNum, ...]]:
    sigma = golden_ratio().conjugate()
    frame = []
    for k in range(4):
        h_col = [Fraction(_HADAMARD[i][k], 2) for i in range(4)]
        top = [quad(int(i == k), 5) + sigma * h_col[i] for i in range(4)]
        bottom = [quad(int(i == k), 5) - sigma * h_col[i] for i in range(4)]
        frame.append(tuple(top + bottom))
    return frame


def project_ambient(proj: Projection, x: Sequence) -> tuple[QuadNum, ...]:
    """Frame coordinates of the parallel component of an ambient vector."""
    return tuple(quad(vdot(v, x), proj.D) for v in proj.plus_basis)


def project(
    proj: Projection, phi: Sequence[Fraction]
) -> tuple[tuple[QuadNum, ...], tuple[QuadNum, ...]]:
    """(parallel, perpendicular) frame coordinates of sum_k phi_k f_k.

    The perpendicular coordinates are the conjugates of the parallel ones.
    """
    if len(phi) != proj.d:
        raise OutsideSpanError(f"expected {proj.d} coefficients, got {len(phi)}")
    x = [sum((Fraction(p) * f[i] for p, f in zip(phi, proj.fundamental)), F0) for i in range(len(proj.fundamental[0]))]
    par = project_ambient(proj, x)
    return par, tuple(y.conjugate() for y in par)


def lift(proj: Projection, par: Sequence[QuadNum]) -> tuple[Fraction, ...]:
    """Rational coefficients phi on the fundamental roots whose parallel
    projection is `par`.

    The map Q^d -> Q(sqrt D)^(d/2) is a Q-linear bijection; the solve
    matches rational and sqrt D parts separately.
    """
    if len(par) != proj.d_par:
        raise OutsideSpanError(f"expected {proj.d_par} parallel coordinates, got {len(par)}")
    rows, rhs = [], []
    for v, y in zip(proj.plus_basis, par):
        y = quad(y, proj.D)
        w = [quad(vdot(v, f), proj.D) for f in proj.fundamental]
        rows.append([x.a for x in w])
        rhs.append(y.a)
        rows.append([x.b for x in w])
        rhs.append(y.b)
    phi = tuple(solve_linear(rows, rhs))
    logging.debug(f"lifted {tuple(str(y) for y in par)} to {tuple(str(p) for p in phi)}")
    return phi


def lift_and_project(proj: Projection, point: Sequence) -> Any:
    """Dispatch on the point's side: rational coefficients (length d) are
    projected to (parallel, perpendicular); parallel coordinates (length
    d/2) are lifted to rational coefficients."""
    if len(point) == proj.d and all(isinstance(x, (int, Fraction)) for x in point):
        return project(proj, point)
    if len(point) == proj.d_par:
        return lift(proj, point)
    raise OutsideSpanError(f"point of length {len(point)} is not in the rational span")


def _zeta(proj_basis, metric, fundamental, D) -> tuple[tuple[QuadNum, ...], ...]:
    gram = [[vdot(fi, fj) for fj in fundamental] for fi in fundamental]
    rows = []
    for f in fundamental:
        coords = [quad(vdot(v, f), D) for v in proj_basis]
        px = [
            sum((g * y * v[i] for g, y, v in zip(metric, coords, proj_basis)), quad(0, D))
            for i in range(len(f))
        ]
        rhs = [sum((fi[i] * px[i] for i in range(len(f))), quad(0, D)) for fi in fundamental]
        rows.append(tuple(quad(z, D) for z in solve_linear(gram, rhs)))
    return tuple(rows)


@lru_cache(maxsize=None)
def coxeter_projection(pair: CoxeterPair) -> Projection:
    """Maximally symmetric projection of `pair.theta` onto `pair.theta_par`.

    For dihedral targets the parallel plane is the Coxeter plane, cut out
    exactly by the spectral projector of C + C^T; f1 projects onto the
    positive first axis. H3 and H4 use explicit orthogonal bases of the D6
    and E8 embeddings.
    """
    if not pair.quadratic:
        raise UnsupportedRootSystemError(pair.theta_par, "projection needs a quadratic pair")
    theta = build_root_system(pair.theta)
    D = pair.field_D
    if pair.theta_par == "H3":
        frame = _d6_frame()
    elif pair.theta_par == "H4":
        frame = _e8_frame()
    else:
        frame = _plane_frame(theta, D)
    frame = [tuple(quad(x, D) for x in v) for v in frame]
    metric = tuple(1 / vdot(v, v) for v in frame)
    minus = [tuple(x.conjugate() for x in v) for v in frame]
    zeta_plus = _zeta(frame, metric, theta.fundamental_roots, D)
    zeta_minus = tuple(tuple(z.conjugate() for z in row) for row in zeta_plus)
    return Projection(
        pair=pair,
        D=D,
        fundamental=theta.fundamental_roots,
        plus_basis=tuple(frame),
        minus_basis=tuple(minus),
        metric=metric,
        zeta_plus=zeta_plus,
        zeta_minus=zeta_minus,
    )


def projected_roots(proj: Projection) -> list[tuple[QuadNum, ...]]:
    theta = build_root_system(proj.pair.theta)
    return [project_ambient(proj, r) for r in theta.roots]


def projected_root_rings(proj: Projection) -> Counter:
    """Squared radius -> number of projected theta roots on that ring."""
    return Counter(vdot(y, y, proj.metric) for y in projected_roots(proj))


def direction_key(y: Sequence[QuadNum]) -> tuple[QuadNum, ...]:
    """Hashable key shared by all nonzero multiples of y."""
    lead = next(x for x in y if x != 0)
    return tuple(x / lead for x in y)


def mirror_multiplets(proj: Projection) -> list[list[tuple[Fraction, ...]]]:
    """Group theta mirrors by the line they cut out of the parallel space.

    A theta mirror r^perp meets the parallel space in the hyperplane normal
    to the projection of r, so two mirrors coincide there exactly when the
    projected roots are parallel.
    """
    theta = build_root_system(proj.pair.theta)
    groups: dict[tuple, list] = {}
    seen: set = set()
    for r in theta.roots:
        if tuple(-x for x in r) in seen:
            continue
        seen.add(tuple(r))
        groups.setdefault(direction_key(project_ambient(proj, r)), []).append(r)
    return list(groups.values())


def _signed_direction(y: Sequence[QuadNum]) -> tuple[QuadNum, ...]:
    lead = abs(next(x for x in y if x != 0))
    return tuple(x / lead for x in y)


def root_copies(proj: Projection) -> list[list[tuple[QuadNum, ...]]]:
    """Split the projected theta roots into copies of the theta_par roots.

    Roots pointing the same way are ranked by length and copy k takes the
    k-th shortest of every direction.

    Raises:
        ValueError: directions carry different numbers of projected roots.
    """
    by_direction: dict[tuple, list] = defaultdict(list)
    for y in projected_roots(proj):
        by_direction[_signed_direction(y)].append(y)
    sizes = {len(ys) for ys in by_direction.values()}
    if len(sizes) != 1:
        raise ValueError(f"{proj.pair.theta_par}: directions carry {sorted(sizes)} projected roots")
    copies: list[list] = [[] for _ in range(sizes.pop())]
    for ys in by_direction.values():
        for k, y in enumerate(sorted(ys, key=lambda y: vdot(y, y, proj.metric))):
            copies[k].append(y)
    return copies


def copy_ratios(proj: Projection) -> list[set[QuadNum]]:
    """Squared length of each copy over the first, one set per copy; a
    single value means the copy is the first one scaled."""
    copies = root_copies(proj)
    return [
        {vdot(y, y, proj.metric) / vdot(x, x, proj.metric) for x, y in zip(copies[0], c)} for c in copies
    ]


def reflect(p: Sequence[QuadNum], r: Sequence[QuadNum], metric: Sequence[QuadNum]) -> tuple[QuadNum, ...]:
    """Reflection of p in the mirror normal to r, in frame coordinates."""
    c = 2 * vdot(p, r, metric) / vdot(r, r, metric)
    return tuple(pi - c * ri for pi, ri in zip(p, r))
