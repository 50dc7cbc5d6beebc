import math
from fractions import Fraction

import pytest

from src.quasitile.exactfield import (
    Ordering,
    QuadNum,
    arith,
    compare,
    conjugate,
    floor_exact,
    golden_ratio,
    quad,
    solve_linear,
    to_float,
)
from src.quasitile.exceptions import FieldMismatchError, NonSquarefreeError


def test_golden_ratio_identities():
    tau = golden_ratio()
    assert tau * tau == tau + 1
    assert 1 / tau == tau - 1
    assert tau * tau.conjugate() == -1
    assert tau.norm() == -1


def test_arith_matches_operators():
    x, y = QuadNum(1, 2, 2), QuadNum(Fraction(-3, 4), 1, 2)
    assert arith(x, y, "add") == x + y
    assert arith(x, y, "sub") == x - y
    assert arith(x, y, "mul") == x * y
    assert arith(x, y, "div") * y == x


def test_arith_rejects_mixed_fields():
    with pytest.raises(FieldMismatchError):
        arith(QuadNum(1, 1, 2), QuadNum(1, 1, 3), "add")


def test_unknown_operation():
    with pytest.raises(ValueError):
        arith(QuadNum(1, 1, 5), QuadNum(1, 1, 5), "pow")  # type: ignore[arg-type]


def test_non_squarefree_field():
    with pytest.raises(NonSquarefreeError):
        QuadNum(1, 1, 8)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QuadNum(1, 1, 3) / 0


def test_conjugate_is_a_field_automorphism():
    x, y = QuadNum(2, -1, 3), QuadNum(Fraction(1, 3), 5, 3)
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    assert conjugate(x + y) == conjugate(x) + conjugate(y)
    assert conjugate(conjugate(x)) == x


@pytest.mark.parametrize(
    "x,y,expected",
    [
        pytest.param(QuadNum(0, 1, 2), QuadNum(Fraction(141, 100), 0, 2), Ordering.GT, id="sqrt2_above_1.41"),
        pytest.param(QuadNum(0, 1, 2), QuadNum(Fraction(142, 100), 0, 2), Ordering.LT, id="sqrt2_below_1.42"),
        pytest.param(QuadNum(-1, 1, 5), QuadNum(Fraction(5, 4), 0, 5), Ordering.LT, id="sqrt5_minus_1"),
        pytest.param(QuadNum(3, -1, 3), QuadNum(3, -1, 3), Ordering.EQ, id="equal"),
        pytest.param(QuadNum(1, 1, 5), QuadNum(3, 0, 5), Ordering.GT, id="two_tau_above_3"),
    ],
)
def test_compare(x, y, expected):
    assert compare(x, y) == expected


def test_compare_decides_near_ties_exactly():
    # 70/99 < 1/sqrt 2 < 99/140
    inv = 1 / QuadNum(0, 1, 2)
    assert compare(quad(Fraction(70, 99), 2), inv) == Ordering.LT
    assert compare(quad(Fraction(99, 140), 2), inv) == Ordering.GT


@pytest.mark.parametrize(
    "x,expected",
    [
        pytest.param(golden_ratio(), 1, id="tau"),
        pytest.param(-golden_ratio(), -2, id="minus_tau"),
        pytest.param(QuadNum(0, 10, 2), 14, id="ten_sqrt2"),
        pytest.param(QuadNum(Fraction(7, 2), 0, 3), 3, id="rational"),
        pytest.param(QuadNum(-3, 0, 3), -3, id="negative_integer"),
        pytest.param(golden_ratio() ** 20, 15126, id="tau_20"),
    ],
)
def test_floor_exact(x, expected):
    assert floor_exact(x) == expected
    assert math.floor(x) == expected


def test_floor_exact_large_values():
    x = QuadNum(Fraction(10**12, 3), 10**9, 7)
    k = floor_exact(x)
    assert quad(k, 7) <= x < quad(k + 1, 7)


def test_to_float():
    assert to_float(golden_ratio()) == pytest.approx((1 + 5**0.5) / 2)
    assert to_float(Fraction(1, 4)) == 0.25


def test_rational_values_hash_like_fractions():
    assert QuadNum(3, 0, 5) == 3
    assert hash(QuadNum(Fraction(1, 2), 0, 2)) == hash(Fraction(1, 2))
    assert {QuadNum(2, 0, 3): "x"}[Fraction(2)] == "x"


def test_str():
    assert str(golden_ratio()) == "1/2+1/2*sqrt(5)"
    assert str(QuadNum(0, -1, 2)) == "-sqrt(2)"


def test_immutable():
    with pytest.raises(AttributeError):
        golden_ratio().a = Fraction(0)  # type: ignore[misc]


def test_solve_linear_over_the_field():
    tau = golden_ratio()
    one, zero = quad(1, 5), quad(0, 5)
    m = [[tau, one], [one, zero]]
    assert solve_linear(m, [tau + 2, one]) == [one, quad(2, 5)]
