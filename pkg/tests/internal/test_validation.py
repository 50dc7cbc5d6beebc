import pytest

from src.quasitile.utils.validation import Validation, ValidationError


@pytest.mark.parametrize(
    "symmetry,row,expected",
    [
        pytest.param("10", "1", ("10", "1"), id="decagonal"),
        pytest.param("8", "R2b", ("8", "2b"), id="octagonal_with_prefix"),
        pytest.param("12", "3C", ("12", "3c"), id="upper_case_row"),
        pytest.param("h4", "4d", ("h4", "4d"), id="h4"),
    ],
)
def test_pairing(symmetry, row, expected):
    assert Validation().pairing(symmetry, row) == expected


@pytest.mark.parametrize(
    "symmetry,row",
    [
        pytest.param("8", "1", id="golden_row_on_octagonal"),
        pytest.param("10", "3a", id="sqrt3_row_on_decagonal"),
        pytest.param("12", "2b", id="sqrt2_row_on_dodecagonal"),
        pytest.param("7", "1", id="unknown_symmetry"),
        pytest.param("10", "5", id="unknown_row"),
    ],
)
def test_pairing_rejects(symmetry, row):
    with pytest.raises(ValidationError):
        Validation().pairing(symmetry, row)


@pytest.mark.parametrize(
    "kwargs",
    [
        pytest.param({"window": "8"}, id="disk"),
        pytest.param({"window": "-10:10:-5/2:5/2"}, id="box"),
        pytest.param({"q0": "rationals"}, id="rationals"),
        pytest.param({"q0": "random:42"}, id="random"),
        pytest.param({"q0": "1/7,-1/9,1/11,0"}, id="explicit"),
        pytest.param({"group": "I2(5)"}, id="dihedral_group"),
        pytest.param({"group": "h4"}, id="h4_group"),
        pytest.param({"decorate": "both"}, id="decorate"),
    ],
)
def test_call_accepts(kwargs):
    assert Validation()(**kwargs) == list(kwargs.values())[0]


@pytest.mark.parametrize(
    "kwargs",
    [
        pytest.param({"window": "eight"}, id="window_word"),
        pytest.param({"q0": "random:x"}, id="random_without_seed"),
        pytest.param({"group": "e8"}, id="crystallographic_group"),
        pytest.param({"format": "png"}, id="format"),
    ],
)
def test_call_rejects(kwargs):
    with pytest.raises(ValidationError):
        Validation()(**kwargs)


def test_call_skips_none():
    assert Validation()(window=None) is None


def test_planar():
    assert Validation().planar("12", "dualize") == "12"
    with pytest.raises(ValidationError):
        Validation().planar("h4", "dualize")


def test_positive():
    assert Validation().positive("inflate", 0) == 0
    with pytest.raises(ValidationError):
        Validation().positive("inflate", -1)
