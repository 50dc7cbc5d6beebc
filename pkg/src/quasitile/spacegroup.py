#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Space groups of the non-crystallographic reflection point groups.

Each Coxeter relation (R_{i1} ... R_{im})^n = 1 forces the phase functions
Phi_i on the quasilattice basis b_1..b_dim to satisfy integer congruences.
Gauge moves Phi_i(k) -> Phi_i(k) + chi(R_i k) - chi(k) absorb part of the
solutions; what survives counts the space groups.
"""
__all__ = [
    "H4_GENERATORS",
    "coxeter_relations",
    "presentation",
    "relation_matrix",
    "format_constraint",
    "phase_system",
    "gauge_fix",
    "H4_GAUGE_ZEROS",
    "stage_gauge",
    "reduce_constraint",
    "classify",
]

import itertools
import logging
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

import sympy
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.domains import ZZ

from .exactfield import quad
from .exceptions import NonFiniteClassificationError, PresentationError, UnsupportedRootSystemError
from .models.spacegroup import GaugeStage, PhaseSystem, Presentation, Relation, SpaceGroupClassification, TraceStep
from .rootsystems import build_root_system, coxeter_element, coxeter_projection, lift, project, quadratic_pair, reflect

# R_1..R_4 on the primitive basis b_1..b_8 of the H4 root quasilattice
H4_GENERATORS: tuple[tuple[tuple[int, ...], ...], ...] = (
    (
        (-1, 1, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, -1, 1, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ),
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (1, -1, 1, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, -1, 1, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ),
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 1, -1, 0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0, 1, -1, 1),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ),
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, -1, 0, 0, 1, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 1, 0, 0, 0, 1, -1),
    ),
)

# basis vectors whose Phi_i the gauge sets to 0 after R_i^2 = 1; the other
# four phases of each generator are then 0 or 1/2
H4_GAUGE_ZEROS: tuple[tuple[int, ...], ...] = ((1, 2, 5, 6), (1, 2, 5, 6), (3, 4, 7, 8), (3, 4, 7, 8))

_GROUP = re.compile(r"^(?:h4|h3|i2:(?P<n>\d+))$")

_MAX_REPRESENTATIVES = 256


def coxeter_relations(diagram: dict[tuple[int, int], int], rank: int) -> tuple[Relation, ...]:
    """R_i^2 = 1 for every generator and (R_i R_j)^m_ij = 1 for i < j, with
    m_ij = 2 unless the diagram says otherwise."""
    relations = [Relation((i,), 2) for i in range(1, rank + 1)]
    for i, j in itertools.combinations(range(1, rank + 1), 2):
        relations.append(Relation((i, j), diagram.get((i, j), 2)))
    return tuple(relations)


def _integer_matrix(columns: Sequence[Sequence[Fraction]], name: str) -> tuple[tuple[int, ...], ...]:
    if any(Fraction(x).denominator != 1 for col in columns for x in col):
        raise PresentationError(f"{name}: lifted generator is not an integer matrix")
    # columns are images of the basis vectors
    return tuple(tuple(int(columns[k][l]) for k in range(len(columns))) for l in range(len(columns)))


def _lifted_reflection(pair_name: str, mirror) -> tuple[tuple[int, ...], ...]:
    proj = coxeter_projection(quadratic_pair(pair_name))
    columns = []
    for k in range(proj.d):
        basis = tuple(Fraction(int(k == l)) for l in range(proj.d))
        par, _ = project(proj, basis)
        columns.append(lift(proj, reflect(par, mirror, proj.metric)))
    return _integer_matrix(columns, pair_name)


@lru_cache(maxsize=None)
def presentation(group: str) -> Presentation:
    """Generators on a primitive quasilattice basis and Coxeter relations.

    Groups: "h4" (8D basis), "h3" (6D basis of the D6 lift) and "i2:n"
    (the lift to the theta partner of I2(n), which must be quadratic).

    Raises:
        PresentationError: unknown group, or a lift that is not integral.
    """
    m = _GROUP.match(group.lower())
    if m is None:
        raise PresentationError(f"unknown group {group!r}, expected h4, h3 or i2:n")
    if group.lower() == "h4":
        diagram = {(1, 2): 3, (2, 3): 3, (3, 4): 5}
        return Presentation("h4", H4_GENERATORS, coxeter_relations(diagram, 4), H4_GAUGE_ZEROS)
    if group.lower() == "h3":
        mirrors = build_root_system("H3").fundamental_roots
        generators = tuple(_lifted_reflection("H3", r) for r in mirrors)
        return Presentation("h3", generators, coxeter_relations({(1, 2): 5, (2, 3): 3}, 3))
    n = int(m.group("n"))
    pair_name = f"I2({n})"
    try:
        pair = quadratic_pair(pair_name)
    except UnsupportedRootSystemError as e:
        raise PresentationError(f"{pair_name} has no quadratic Coxeter partner ({e})")
    # mirror along the first frame axis, i.e. through the projection of f1
    r1 = _lifted_reflection(pair_name, (quad(0, pair.field_D), quad(1, pair.field_D)))
    c = coxeter_element(build_root_system(pair.theta))
    r2 = tuple(tuple(int(x) for x in row) for row in (c * sympy.Matrix(r1)).tolist())
    return Presentation(group.lower(), (r1, r2), coxeter_relations({(1, 2): n}, 2))


def relation_matrix(pres: Presentation, relation: Relation) -> list[tuple[int, sympy.Matrix]]:
    """(generator, coefficient matrix) pairs of the congruence of one relation.

    For g = R_{i1} ... R_{im} and M = 1 + g + ... + g^(n-1) the relation
    reads 0 = sum_t Phi_{i_t}(R_{i_{t+1}} ... R_{i_m} M k); column k of each
    matrix holds the coefficients of Phi_{i_t}(b_l) for k = b_k.

    Raises:
        PresentationError: g^n is not the identity.
    """
    g = pres.word_matrix(relation.word)
    if g**relation.order != sympy.eye(pres.dim):
        raise PresentationError(f"{relation} does not hold for {pres.name}", str(relation))
    m = sympy.zeros(pres.dim)
    power = sympy.eye(pres.dim)
    for _ in range(relation.order):
        m += power
        power = power * g
    out = []
    for t, i in enumerate(relation.word):
        out.append((i, pres.word_matrix(relation.word[t + 1 :]) * m))
    return out


def format_constraint(row: Sequence[int], labels: Sequence[str]) -> str:
    """"0 ≡ Φ1(b1)+2Φ1(b2)" for a congruence row."""
    terms = []
    for c, label in zip(row, labels):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(f"{sign}{coef}{label}")
    return "0 ≡ " + "".join(terms)


def phase_system(pres: Presentation, relations: Optional[Sequence[Relation]] = None) -> PhaseSystem:
    """Stack the congruences of every relation into one integer matrix A."""
    relations = pres.relations if relations is None else tuple(relations)
    dim = pres.dim
    n_unknowns = len(pres.generators) * dim
    rows, sources = [], []
    for relation in relations:
        blocks = relation_matrix(pres, relation)
        for k in range(dim):
            row = [0] * n_unknowns
            for i, c in blocks:
                for l in range(dim):
                    row[(i - 1) * dim + l] += int(c[l, k])
            if any(row):
                rows.append(row)
                sources.append(relation)
    gauge = sympy.zeros(n_unknowns, dim)
    for i in range(1, len(pres.generators) + 1):
        shift = pres.matrix(i) - sympy.eye(dim)
        for l in range(dim):
            for k in range(dim):
                gauge[(i - 1) * dim + l, k] = shift[k, l]
    constraints = sympy.Matrix(rows) if rows else sympy.zeros(0, n_unknowns)
    logging.debug(f"{pres.name}: {len(rows)} congruences on {n_unknowns} phases")
    return PhaseSystem(pres, constraints, gauge, sources)


def gauge_fix(system: PhaseSystem) -> PhaseSystem:
    """Smith-reduce the congruences and measure the gauge freedom.

    D = S A T is diagonal; in the unknowns w = T^-1 Phi the congruences read
    d_i w_i = 0 (mod 1).
    """
    a = system.constraints
    if a.rows == 0:
        system.invariants, system.transform = [], sympy.eye(system.n_unknowns)
    else:
        d, _, t = smith_normal_decomp(a, domain=ZZ)
        system.invariants = [abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0]
        system.transform = t
    system.gauge_rank = system.gauge.rank()
    logging.debug(
        f"{system.presentation.name}: rank {system.rank}, torsion {system.torsion}, gauge rank {system.gauge_rank}"
    )
    return system


def _gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows written as bit masks."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


def _square_block(pres: Presentation, i: int) -> tuple[sympy.Matrix, sympy.Matrix]:
    """Congruences of R_i^2 = 1 on Phi_i and the gauge moves of Phi_i."""
    r = pres.matrix(i)
    eye = sympy.eye(pres.dim)
    return (eye + r).T, (r - eye).T


def _moved_by(pres: Presentation, i: int) -> set[int]:
    shift = pres.matrix(i) - sympy.eye(pres.dim)
    return {k for k in range(pres.dim) if any(shift.row(k))}


def _trivial_halves(gauge: sympy.Matrix) -> sympy.Matrix:
    # a half-integer y is a gauge move iff these rows of S y are integers
    d, s, _ = smith_normal_decomp(gauge, domain=ZZ)
    r = sum(1 for k in range(min(d.shape)) if d[k, k] != 0)
    return s[r:, :]


def stage_gauge(pres: Presentation) -> Optional[GaugeStage]:
    """Fix the gauge with the squares R_i^2 = 1 alone.

    Each Phi_i ends up 0 on some basis vectors and 0 or 1/2 on the rest. The
    zeros come from `pres.gauge_zeros` or are picked greedily from b_1 on.
    Returns None when the gauge moves of two generators overlap or the
    squares leave torsion other than 2.

    Raises:
        PresentationError: `pres.gauge_zeros` does not fix the gauge.
    """
    n_gen, dim = len(pres.generators), pres.dim
    moved = [_moved_by(pres, i) for i in range(1, n_gen + 1)]
    if any(a & b for a, b in itertools.combinations(moved, 2)):
        logging.debug(f"{pres.name}: gauge moves of different generators overlap")
        return None
    zeros, halves = [], []
    for i in range(1, n_gen + 1):
        c, g = _square_block(pres, i)
        d, _, _ = smith_normal_decomp(c, domain=ZZ)
        invariants = [abs(int(d[k, k])) for k in range(min(d.shape)) if d[k, k] != 0]
        if any(x > 2 for x in invariants) or dim - len(invariants) != g.rank():
            logging.debug(f"{pres.name}: R{i}^2 leaves more than signs")
            return None
        target = invariants.count(2)
        tests = _trivial_halves(g)
        even = [l for l in range(dim) if all(x % 2 == 0 for x in c.col(l))]

        def mask(l: int) -> int:
            return sum(1 << r for r in range(tests.rows) if tests[r, l] % 2)

        if pres.gauge_zeros is not None:
            chosen = [l for l in range(dim) if l + 1 not in pres.gauge_zeros[i - 1]]
            if len(chosen) != target or not set(chosen) <= set(even) or _gf2_rank(map(mask, chosen)) != target:
                raise PresentationError(f"{pres.name}: zeros {pres.gauge_zeros[i - 1]} do not fix the gauge of R{i}")
        else:
            chosen = []
            for l in even:
                if len(chosen) < target and _gf2_rank(map(mask, chosen + [l])) == len(chosen) + 1:
                    chosen.append(l)
            if len(chosen) < target:
                return None
        base = (i - 1) * dim
        halves += [base + l for l in chosen]
        zeros += [base + l for l in range(dim) if l not in chosen]
    stage = GaugeStage(sorted(zeros), sorted(halves), n_gen * dim)
    logging.debug(f"{pres.name}: {stage.summary()}")
    return stage


def reduce_constraint(row: Sequence[int], stage: GaugeStage) -> int:
    """A congruence once the gauge zeros are dropped and the {0, 1/2}
    values are read mod 2, as a bit mask over `stage.halves`."""
    return sum(1 << n for n, c in enumerate(stage.halves) if row[c] % 2)


def _format_reduced(mask: int, stage: GaugeStage, labels: Sequence[str]) -> str:
    terms = [labels[c] for n, c in enumerate(stage.halves) if mask >> n & 1]
    if len(terms) == 1:
        return f"0 ≡ {terms[0]}"
    return f"{terms[0]} ≡ " + "+".join(terms[1:])


def _staged_trace(system: PhaseSystem, stage: GaugeStage, relations: Sequence[Relation]) -> tuple[list[TraceStep], int]:
    """Trace steps and the number of surviving {0, 1/2} assignments."""
    dim = system.presentation.dim
    labels = [system.label(c) for c in range(system.n_unknowns)]
    steps, masks, seen = [], [], set()
    for relation in relations:
        rows = [list(system.constraints.row(r)) for r, src in enumerate(system.sources) if src == relation]
        if len(relation.word) == 1 and relation.order == 2:
            seen.add(relation.word[0])
            done = GaugeStage(
                [z for z in stage.zeros if z // dim + 1 in seen],
                [h for h in stage.halves if h // dim + 1 in seen],
                stage.n_unknowns,
            )
            steps.append(TraceStep(str(relation), [format_constraint(r, labels) for r in rows], done.summary()))
            continue
        reduced = list(dict.fromkeys(m for m in (reduce_constraint(r, stage) for r in rows) if m))
        masks += reduced
        free = len(stage.halves) - _gf2_rank(masks)
        steps.append(
            TraceStep(
                str(relation),
                [_format_reduced(m, stage, labels) for m in reduced],
                f"{free} of {len(stage.halves)} values in {{0,1/2}} still free",
            )
        )
    return steps, 2 ** (len(stage.halves) - _gf2_rank(masks))


def _running_trace(pres: Presentation, system: PhaseSystem, relations: Sequence[Relation]) -> list[TraceStep]:
    labels = [system.label(c) for c in range(system.n_unknowns)]
    steps = []
    for n, relation in enumerate(relations):
        rows = [list(system.constraints.row(r)) for r, src in enumerate(system.sources) if src == relation]
        partial = gauge_fix(phase_system(pres, relations[: n + 1]))
        state = f"torsion {partial.torsion}, moduli {partial.moduli}"
        steps.append(TraceStep(str(relation), [format_constraint(r, labels) for r in rows], state))
    return steps


def _squares_first(pres: Presentation, relations: Sequence[Relation]) -> bool:
    squares = [Relation((i,), 2) for i in range(1, len(pres.generators) + 1)]
    head = list(relations[: len(squares)])
    return sorted(head, key=lambda r: r.word) == squares and all(r not in squares for r in relations[len(squares) :])


def classify(
    group: Union[str, Presentation], trace: bool = False, relations: Optional[Sequence[Relation]] = None
) -> SpaceGroupClassification:
    """Count the gauge-inequivalent phase functions of a reflection group.

    With `trace`, every relation is listed with its congruences. When the
    squares R_i^2 = 1 come first and fix the gauge up to signs, the later
    relations are shown reduced in that gauge, as congruences among the
    phases left in {0, 1/2}; otherwise each step reports the running
    torsion.

    `group` is a name understood by `presentation` or a ready presentation.

    Raises:
        NonFiniteClassificationError: continuous solutions survive the gauge.
    """
    pres = group if isinstance(group, Presentation) else presentation(group)
    relations = pres.relations if relations is None else tuple(relations)
    system = gauge_fix(phase_system(pres, relations))
    if system.moduli != 0:
        raise NonFiniteClassificationError(system.moduli)
    torsion = system.torsion
    count = math.prod(torsion)
    steps: list[TraceStep] = []
    stage = None
    if trace:
        stage = stage_gauge(pres) if _squares_first(pres, relations) else None
        if stage is not None:
            steps, staged = _staged_trace(system, stage, relations)
            if staged != count:
                logging.warning(f"{pres.name}: staged gauge leaves {staged} classes, Smith form {count}")
        else:
            steps = _running_trace(pres, system, relations)
    representatives = []
    torsion_slots = [(i, d) for i, d in enumerate(system.invariants) if d > 1]
    for choice in itertools.islice(itertools.product(*(range(d) for _, d in torsion_slots)), _MAX_REPRESENTATIVES):
        w = [Fraction(0)] * system.n_unknowns
        for (i, d), k in zip(torsion_slots, choice):
            w[i] = Fraction(k, d)
        phi = system.transform * sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in w])
        representatives.append(tuple(Fraction(int(sympy.numer(x)), int(sympy.denom(x))) % 1 for x in phi))
    if count > _MAX_REPRESENTATIVES:
        logging.warning(f"{count} space groups, listing the first {_MAX_REPRESENTATIVES} representatives")
    logging.info(f"{pres.name}: {count} space group(s)")
    return SpaceGroupClassification(
        group=pres.name, count=count, representatives=representatives, torsion=torsion, trace=steps, stage=stage
    )
