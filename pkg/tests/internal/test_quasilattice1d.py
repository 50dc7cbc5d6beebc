from fractions import Fraction

import pytest

from src.quasitile.exactfield import QuadNum, golden_ratio, quad
from src.quasitile.exceptions import SingularPhaseError
from src.quasitile.models.quasilattice import ROW_IDS
from src.quasitile.quasilattice1d import (
    builtin_classes,
    degree_two_separations,
    generate,
    get_class,
    halve,
    index_range,
    inflate_phases,
    intervals_from_magnitudes,
    inversion_symmetry,
    kappas,
    position,
    position_alt,
    quasilattice_spec,
    refine,
    self_similarity,
    substitution_words,
)


def test_ten_rows():
    classes = builtin_classes()
    assert [c.row_id for c in classes] == list(ROW_IDS)
    assert {c.row_id for c in classes if c.wall_to_wall} == {"2b", "3b", "4b", "4d"}


def test_builtin_classes_verify():
    assert len(builtin_classes(verify=True)) == 10


@pytest.mark.parametrize("row", ROW_IDS)
def test_self_similarity(row):
    qclass = get_class(row)
    report = self_similarity(qclass, count=300)
    assert report.unit_ok
    assert report.lattice_ok
    assert report.inflation_ok, report.violations
    assert report.wall_to_wall == qclass.wall_to_wall
    assert all(len(s) == 2 for s in report.separations.values())


@pytest.mark.parametrize("row", ROW_IDS)
def test_kappas_sum_to_one(row):
    k1, k2 = kappas(get_class(row))
    assert k1 + k2 == 1


def test_get_class_accepts_prefix():
    assert get_class("R2b") == get_class("2b")
    with pytest.raises(ValueError):
        get_class("5a")


def test_fibonacci_intervals():
    spec = quasilattice_spec(get_class("1"))
    assert spec.m2_plus / spec.m1_plus == golden_ratio()
    window = generate(spec, -20, 20)
    assert set(window.intervals) == {spec.m1_plus, spec.m2_plus}
    assert set(window.interval_labels) == {"L", "S"}
    # no two short intervals in a row
    assert "SS" not in "".join(window.interval_labels)


def test_intervals_from_magnitudes_requires_matching_b():
    qclass = get_class("3b")
    with pytest.raises(ValueError):
        intervals_from_magnitudes(qclass, quad(1, 3), quad(1, 3))
    m1, m2 = intervals_from_magnitudes(qclass, quad(1, 3), -1 / qclass.ratio_minus)
    assert m2 / m1 == qclass.ratio_plus


@pytest.mark.parametrize("row", ["1", "2a", "3c", "4d"])
def test_closed_forms_agree(row):
    spec = quasilattice_spec(get_class(row), Fraction(2, 9))
    for n in range(-15, 16):
        assert position(spec, n) == position_alt(spec, n)


def test_positions_increase():
    spec = quasilattice_spec(get_class("4a"), Fraction(1, 3))
    xs = generate(spec, -30, 30).positions
    assert all(a < b for a, b in zip(xs, xs[1:]))


def test_singular_phase():
    spec = quasilattice_spec(get_class("1"), 0)
    with pytest.raises(SingularPhaseError):
        position(spec, 0)


def test_index_range_is_exact():
    spec = quasilattice_spec(get_class("2a"))
    lo, hi = quad(-7, 2), QuadNum(3, 1, 2)
    n_lo, n_hi = index_range(spec, lo, hi)
    assert position(spec, n_lo - 1) < lo <= position(spec, n_lo)
    assert position(spec, n_hi) <= hi < position(spec, n_hi + 1)


@pytest.mark.parametrize("row", ["1", "2b", "3a"])
def test_inflation_maps_points_to_points(row):
    qclass = get_class(row)
    spec = quasilattice_spec(qclass, Fraction(3, 11))
    fine = set(generate(spec, -80, 80).positions)
    coarse = generate(inflate_phases(spec), -10, 10).positions
    points_and_mids = fine | {
        (a + b) / 2 for a, b in zip(sorted(fine), sorted(fine)[1:])
    }
    assert all(qclass.lambda_plus * x in points_and_mids for x in coarse)


def test_refine_scales_positions():
    qclass = get_class("1")
    spec = quasilattice_spec(qclass, Fraction(1, 5))
    dense = refine(spec)
    # the refined quasilattice at chi lambda is the original one shrunk by lambda
    assert dense.scale == 1 / qclass.lambda_plus
    for n in range(-5, 6):
        assert position(dense, n) * qclass.lambda_plus == position(
            quasilattice_spec(qclass, spec.chi1_plus * qclass.lambda_plus, spec.chi1_minus * qclass.lambda_minus), n
        )


@pytest.mark.parametrize("row", ["1", "2a", "3b", "4c"])
def test_inversion_symmetry(row):
    spec = quasilattice_spec(get_class(row), Fraction(1, 2))
    assert inversion_symmetry(spec) == (1, 0)
    for n in range(-10, 11):
        assert position(spec, 1 - n) == -position(spec, n)


def test_no_inversion_symmetry_for_generic_phase():
    spec = quasilattice_spec(get_class("1"), Fraction(1, 7))
    assert inversion_symmetry(spec) is None


def test_halve_inserts_midpoints():
    window = generate(quasilattice_spec(get_class("2a")), -5, 5)
    halved = halve(window)
    assert len(halved) == 2 * len(window.positions) - 1
    assert halved[1] == (window.positions[0] + window.positions[1]) / 2


def test_two_separations_per_letter():
    separations = degree_two_separations(generate(quasilattice_spec(get_class("1")), -60, 60))
    assert {label: len(s) for label, s in separations.items()} == {"L": 2, "S": 2}


@pytest.mark.parametrize(
    "row,aligned,letters",
    [
        pytest.param("2b", True, {"L", "S"}, id="wall_to_wall"),
        pytest.param("1", False, {"L_left", "L_right", "S_left", "S_right"}, id="midpoints"),
    ],
)
def test_substitution_words(row, aligned, letters):
    words, violations, is_aligned = substitution_words(quasilattice_spec(get_class(row)), -8, 8)
    assert is_aligned is aligned
    assert violations == []
    assert set(words) == {"L", "S"}
    used = {letter for ws in words.values() for w in ws for letter in w}
    assert used <= letters
