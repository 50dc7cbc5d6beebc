import json
from fractions import Fraction

import pytest

from src.quasitile.dual import dualize
from src.quasitile.exactfield import QuadNum, golden_ratio
from src.quasitile.models import Window
from src.quasitile.utils.converter import (
    exact_from_json,
    exact_to_json,
    fraction_str,
    quad_from_str,
    serialize_tiling,
    vertices_from_json,
)
from src.quasitile.utils.parser import parse_group, parse_q0, parse_window


@pytest.mark.parametrize(
    "value,expected",
    [
        pytest.param(Fraction(3), "3", id="integer"),
        pytest.param(Fraction(-2, 6), "-1/3", id="reduced"),
        pytest.param(0, "0", id="zero"),
    ],
)
def test_fraction_str(value, expected):
    assert fraction_str(value) == expected


def test_exact_json_pair():
    assert exact_to_json(golden_ratio()) == ["1/2", "1/2"]
    assert exact_to_json(Fraction(5, 4)) == ["5/4", "0"]
    assert exact_from_json(["1/2", "1/2"], 5) == golden_ratio()


@pytest.mark.parametrize(
    "text,D,expected",
    [
        pytest.param("3/4", 2, QuadNum(Fraction(3, 4), 0, 2), id="rational"),
        pytest.param("1, -2", 3, QuadNum(1, -2, 3), id="pair"),
    ],
)
def test_quad_from_str(text, D, expected):
    assert quad_from_str(text, D) == expected


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("8", Window.disk(8), id="disk"),
        pytest.param("5/2", Window.disk(Fraction(5, 2)), id="rational_disk"),
        pytest.param("-10:10:-4:6", Window.box((-10, 10), (-4, 6)), id="box"),
        pytest.param(3, Window.disk(3), id="number"),
    ],
)
def test_parse_window(text, expected):
    assert parse_window(text) == expected


def test_parse_window_rejects_odd_bounds():
    with pytest.raises(ValueError):
        parse_window("1:2:3")


def test_window_rejects_inverted_bounds():
    with pytest.raises(ValueError):
        parse_window("2:1:0:1")


def test_window_constructors_keep_the_subclass():
    class Tagged(Window):
        pass

    disk, box = Tagged.disk(2), Tagged.box((0, 1), (0, 1))
    assert type(disk) is Tagged and type(box) is Tagged
    assert type(disk.padded(1)) is Tagged and type(box.scaled(2)) is Tagged
    assert disk.padded(1) == Tagged.disk(3)


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("rationals", ("rationals", None), id="rationals"),
        pytest.param(None, ("random", None), id="default"),
        pytest.param("random", ("random", None), id="random"),
        pytest.param("random:42", ("random", 42), id="seeded"),
        pytest.param("1/3, -2", ("explicit", (Fraction(1, 3), Fraction(-2))), id="explicit"),
    ],
)
def test_parse_q0(text, expected):
    assert parse_q0(text) == expected


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("H4", "h4", id="h4"),
        pytest.param("I2(8)", "i2:8", id="parenthesised"),
        pytest.param("i2:12", "i2:12", id="colon"),
    ],
)
def test_parse_group(text, expected):
    assert parse_group(text) == expected


def test_serialized_tiling_is_exact_and_stable(penrose, small_window):
    tiling = dualize(penrose, small_window)
    first = serialize_tiling(tiling, penrose.display)
    second = serialize_tiling(dualize(penrose, small_window), penrose.display)
    assert first == second
    document = json.loads(first)
    assert document["meta"]["D"] == 5
    assert len(document["faces"]) == len(tiling.faces)
    assert vertices_from_json(document) == tiling.vertices
