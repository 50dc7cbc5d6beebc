from dataclasses import replace

import pytest
import sympy

from src.quasitile.exceptions import PresentationError
from src.quasitile.models import Presentation, Relation
from src.quasitile.spacegroup import (
    H4_GAUGE_ZEROS,
    H4_GENERATORS,
    classify,
    coxeter_relations,
    format_constraint,
    gauge_fix,
    phase_system,
    presentation,
    reduce_constraint,
    relation_matrix,
    stage_gauge,
)


def test_coxeter_relations_of_h4():
    relations = coxeter_relations({(1, 2): 3, (2, 3): 3, (3, 4): 5}, 4)
    assert len(relations) == 10
    assert Relation((3, 4), 5) in relations
    assert Relation((1, 3), 2) in relations
    assert str(Relation((2,), 2)) == "R2^2"
    assert str(Relation((3, 4), 5)) == "(R3R4)^5"


def test_h4_presentation():
    pres = presentation("h4")
    assert pres.dim == 8
    assert pres.generators == H4_GENERATORS
    for i in range(1, 5):
        assert pres.matrix(i) ** 2 == sympy.eye(8)
        assert abs(pres.matrix(i).det()) == 1


def test_h4_relations_hold():
    pres = presentation("h4")
    for relation in pres.relations:
        assert pres.word_matrix(relation.word) ** relation.order == sympy.eye(8)


def test_first_constraint_of_r1_squared():
    pres = presentation("h4")
    system = phase_system(pres, [Relation((1,), 2)])
    labels = [system.label(c) for c in range(system.n_unknowns)]
    constraints = [format_constraint(list(system.constraints.row(r)), labels) for r in range(system.constraints.rows)]
    assert "0 ≡ Φ1(b1)+2Φ1(b2)" in constraints
    assert "0 ≡ 2Φ1(b3)" in constraints


def test_broken_relation_is_reported():
    pres = presentation("h4")
    with pytest.raises(PresentationError):
        relation_matrix(pres, Relation((1, 2), 4))


def test_h4_has_a_single_space_group():
    result = classify("h4")
    assert result.count == 1
    assert result.torsion == []
    assert result.symmorphic_only
    assert result.summary() == "1 space group (symmorphic)"
    assert result.representatives == [tuple([0] * 32)]


def test_reflection_squares_alone_leave_sixteen_signs():
    relations = [Relation((i,), 2) for i in range(1, 5)]
    result = classify("h4", relations=relations)
    assert result.torsion == [2] * 16
    assert result.count == 2**16
    assert len(result.representatives) == 256


def test_gauge_fix_fills_invariants():
    system = gauge_fix(phase_system(presentation("h4")))
    assert system.gauge_rank == 8
    assert system.rank == 32 - 8
    assert system.moduli == 0
    assert system.fixed == 32


def test_trace_lists_every_relation():
    result = classify("h4", trace=True)
    assert [s.relation for s in result.trace] == [str(r) for r in presentation("h4").relations]
    assert "0 ≡ Φ1(b1)+2Φ1(b2)" in result.trace[0].constraints
    assert result.to_polars().height == sum(len(s.constraints) for s in result.trace)
    assert "left" in result.table()


def test_pentagonal_group():
    pres = presentation("i2:5")
    assert pres.dim == 4
    assert len(pres.generators) == 2
    assert classify("i2:5").count == 1


def test_icosahedral_presentation():
    pres = presentation("h3")
    assert pres.dim == 6
    assert len(pres.generators) == 3
    assert len(pres.relations) == 6


def test_unknown_group():
    with pytest.raises(PresentationError):
        presentation("i2:7")
    with pytest.raises(PresentationError):
        presentation("e8")


def test_custom_presentation():
    swap = ((0, 1), (1, 0))
    pres = Presentation("swap", (swap,), (Relation((1,), 2),))
    system = gauge_fix(phase_system(pres))
    # Phi(b1) + Phi(b2) = 0 mod 1, and the gauge absorbs it
    assert system.torsion == []
    assert system.moduli == 0


def test_squares_fix_half_the_phases():
    squares = [Relation((i,), 2) for i in range(1, 5)]
    system = gauge_fix(phase_system(presentation("h4"), squares))
    assert system.fixed == 16
    assert system.torsion == [2] * 16
    stage = stage_gauge(presentation("h4"))
    assert len(stage.zeros) == len(stage.halves) == 16
    assert stage.summary() == "16 of 32 values fixed to 0, rest in {0,1/2}"
    # Phi_1 vanishes on b1, b2, b5, b6 and Phi_3 on b3, b4, b7, b8
    assert stage.zeros[:4] == [0, 1, 4, 5]
    assert stage.zeros[8:12] == [18, 19, 22, 23]


H4_REDUCED = {
    "(R1R2)^3": ["Φ1(b3) ≡ Φ2(b3)", "Φ1(b4) ≡ Φ2(b4)", "Φ1(b7) ≡ Φ2(b7)", "Φ1(b8) ≡ Φ2(b8)"],
    "(R2R3)^3": ["Φ2(b3) ≡ Φ3(b1)", "Φ2(b4) ≡ Φ3(b6)", "Φ2(b7) ≡ Φ3(b5)", "Φ2(b8) ≡ Φ3(b2)+Φ3(b6)"],
    "(R1R4)^2": ["0 ≡ Φ4(b1)", "0 ≡ Φ1(b8)", "0 ≡ Φ4(b5)", "Φ1(b4) ≡ Φ1(b8)"],
}


@pytest.mark.parametrize("relation,expected", [pytest.param(r, c, id=r) for r, c in H4_REDUCED.items()])
def test_h4_reduced_congruences(relation, expected):
    steps = {s.relation: s for s in classify("h4", trace=True).trace}
    assert steps[relation].constraints == expected


def test_h4_trace_states():
    trace = classify("h4", trace=True).trace
    assert trace[0].state == "4 of 32 values fixed to 0, 4 in {0,1/2}"
    assert trace[3].state == "16 of 32 values fixed to 0, rest in {0,1/2}"
    assert trace[-1].state == "0 of 16 values in {0,1/2} still free"


def test_reduced_constraint_reads_halves_mod_two():
    stage = stage_gauge(presentation("h4"))
    row = [0] * 32
    row[0], row[2], row[10] = 5, 3, -1  # Phi1(b1) is gauged away, Phi1(b3) and Phi2(b3) are halves
    mask = reduce_constraint(row, stage)
    assert [stage.halves[n] for n in range(16) if mask >> n & 1] == [2, 10]


@pytest.mark.parametrize(
    "gauge_zeros",
    [
        pytest.param(H4_GAUGE_ZEROS, id="fixed"),
        pytest.param(None, id="greedy"),
    ],
)
def test_gauge_choice_does_not_change_the_count(gauge_zeros):
    pres = replace(presentation("h4"), gauge_zeros=gauge_zeros)
    assert len(stage_gauge(pres).halves) == 16
    result = classify(pres, trace=True)
    assert result.count == 1
    assert result.trace[-1].state == "0 of 16 values in {0,1/2} still free"


def test_greedy_gauge_differs_from_the_fixed_one():
    greedy = stage_gauge(replace(presentation("h4"), gauge_zeros=None))
    fixed = stage_gauge(presentation("h4"))
    assert greedy.zeros != fixed.zeros
    assert len(greedy.zeros) == 16


def test_bad_gauge_choice_is_rejected():
    bad = ((3, 4, 7, 8),) + H4_GAUGE_ZEROS[1:]
    with pytest.raises(PresentationError):
        stage_gauge(replace(presentation("h4"), gauge_zeros=bad))


def test_relation_order_does_not_change_the_count():
    pres = presentation("h4")
    squares, products = pres.relations[:4], pres.relations[4:]
    result = classify("h4", trace=True, relations=squares + products[::-1])
    assert result.count == 1
    assert result.trace[-1].state == "0 of 16 values in {0,1/2} still free"
    shuffled = classify("h4", trace=True, relations=products + squares)
    assert shuffled.count == 1
    assert shuffled.stage is None
    assert shuffled.trace[-1].state == "torsion [], moduli 0"
