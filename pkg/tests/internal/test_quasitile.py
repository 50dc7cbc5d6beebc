import json
import logging
from pathlib import Path

import pytest

from src.quasitile import Quasitile
from src.quasitile.dual import shape_key
from src.quasitile.utils.converter import vertices_from_json
from src.quasitile.utils.validation import ValidationError


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("QUASITILE_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setenv("QUASITILE_SEED", "11")
    monkeypatch.setenv("QUASITILE_LOGLEVEL", "error")
    monkeypatch.setenv("QUASITILE_CHIRAL", "true")
    qt = Quasitile.from_env()
    assert qt.output_dir == tmp_path
    assert qt.seed == 11
    assert qt.chiral is True


def test_from_env_rejects_bad_seed(monkeypatch):
    monkeypatch.setenv("QUASITILE_SEED", "eleven")
    with pytest.raises(ValueError):
        Quasitile.from_env()


@pytest.mark.parametrize(
    "loglevel,expected",
    [
        pytest.param("DEBUG", logging.DEBUG, id="debug"),
        pytest.param("ERROR", logging.ERROR, id="error"),
        pytest.param(None, None, id="untouched"),
    ],
)
def test_set_log_level(quasitile, loglevel, expected):
    assert quasitile.set_log_level(loglevel) == expected


def test_coxeter_pairs_table(quasitile):
    table = quasitile.coxeter_pairs(12)
    frame = table.to_polars()
    assert frame.height == len(table)
    assert "B4/C4" in frame["theta"].to_list()
    assert "theta||" in table.table()


def test_shape_only_prototiles(quasitile, penrose):
    prototiles = quasitile.prototiles(penrose, "3", decorate_by="none")
    assert prototiles.shapes == {(1, 4, 1, 4), (2, 3, 2, 3)}
    assert prototiles.bijection is None


def test_tiling_rejects_icosahedral(quasitile):
    pattern = quasitile.pattern("h3", "1")
    with pytest.raises(ValidationError):
        quasitile.tiling(pattern, "2")


def test_tiling_svg_layers(quasitile, penrose):
    tiling = quasitile.tiling(penrose, "3")
    segments = quasitile.decoration_segments(penrose, tiling, "3")
    svg = quasitile.tiling_svg(penrose, tiling, segments, quasitile.inflation_overlay(penrose, "3"))
    assert svg.index('<g id="tiling">') < svg.index('<g id="decoration">') < svg.index('<g id="inflation">')


def test_write_uses_output_dir(quasitile, tmp_path):
    path = quasitile.write("{}", "doc.json")
    assert path == tmp_path / "doc.json"
    assert path.read_text() == "{}"


def test_random_q0_follows_seed(quasitile):
    first = quasitile.pattern("8", "2a", q0="random", window="3")
    second = quasitile.pattern("8", "2a", q0="random", window="3")
    assert first.spec.q0 == second.spec.q0


def test_space_groups_accepts_dihedral_names(quasitile):
    assert quasitile.space_groups("I2(5)").count == 1


def test_icosahedral_pattern_is_experimental():
    from src.quasitile.utils import decorators

    decorators._warned.clear()
    qt = Quasitile(loglevel=None)
    with pytest.warns(UserWarning, match="experimental"):
        qt.pattern("h3", "1")
    assert "Experimental" in type(qt)._pattern_higher.__doc__


GOLDEN = json.loads((Path(__file__).parents[1] / "data" / "tilings.json").read_text())


@pytest.mark.parametrize("case", sorted(GOLDEN))
def test_tiling_documents_match_fixtures(quasitile, case):
    expected = GOLDEN[case]
    symmetry, row = case.split("/")
    pattern = quasitile.pattern(symmetry, row, q0="rationals")
    tiling = quasitile.tiling(pattern, "3")
    text = quasitile.tiling_json(pattern, tiling)
    document = json.loads(text)
    assert document["meta"] == expected["meta"]
    assert document["faces"] and document["vertices"]
    assert text == quasitile.tiling_json(pattern, quasitile.tiling(pattern, "3"))
    assert vertices_from_json(document) == tiling.vertices
    if expected["sizes"] is not None:
        assert sorted({len(f["cells"]) for f in document["faces"]}) == expected["sizes"]
    if expected["shapes"] is not None:
        assert {shape_key(f, pattern.J) for f in tiling.faces} <= {tuple(s) for s in expected["shapes"]}
    svg = quasitile.tiling_svg(pattern, tiling)
    assert svg.count('<g id="tiling">') == 1
    assert svg.count("<polygon") == len(tiling.faces)
