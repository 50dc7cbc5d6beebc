import json

import pytest

from src.quasitile import cli
from src.quasitile.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, build_parser, config_from_args, main
from src.quasitile.utils.validation import ValidationError


@pytest.fixture(autouse=True)
def output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("QUASITILE_OUTPUT_DIR", str(tmp_path))
    return tmp_path


def test_pairs_json(tmp_path):
    out = tmp_path / "pairs.json"
    assert main(["pairs", "--max", "12", "--format", "json", "--out", str(out)]) == EXIT_OK
    pairs = json.loads(out.read_text())["pairs"]
    assert len(pairs) >= 3


def test_pairs_table(capsys):
    assert main(["pairs", "--max", "12"]) == EXIT_OK
    assert "B4" in capsys.readouterr().out


def test_spacegroup_summary(capsys):
    assert main(["spacegroup", "--group", "h4"]) == EXIT_OK
    assert "1 space group (symmorphic)" in capsys.readouterr().out


def test_spacegroup_csv(tmp_path):
    out = tmp_path / "trace.csv"
    assert main(["spacegroup", "--group", "i2:5", "--trace", "--format", "csv", "--out", str(out)]) == EXIT_OK
    assert out.read_text().splitlines()


def test_dualize_json(tmp_path):
    out = tmp_path / "tiling.json"
    argv = ["dualize", "--symmetry", "10", "--row", "1", "--window", "3", "--format", "json", "--out", str(out)]
    assert main(argv) == EXIT_OK
    document = json.loads(out.read_text())
    assert document["meta"]["D"] == 5
    assert document["faces"]


def test_dualize_both_writes_two_svgs(output_dir):
    argv = ["dualize", "--symmetry", "10", "--row", "1", "--window", "3", "--decorate", "both"]
    assert main(argv) == EXIT_OK
    names = sorted(p.name for p in output_dir.glob("*.svg"))
    assert names == ["dualize-ammann.svg", "dualize-inflation.svg"]
    assert '<g id="tiling"' in (output_dir / "dualize-ammann.svg").read_text()


def test_wallcheck(capsys):
    assert main(["wallcheck", "--symmetry", "8", "--row", "2b", "--window", "3"]) == EXIT_OK
    assert "wall-to-wall: yes" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["ammann", "--symmetry", "10", "--row", "1", "--format", "csv"], id="csv_on_ammann"),
        pytest.param(["dualize", "--symmetry", "8", "--row", "1"], id="mismatched_row"),
        pytest.param(["dualize", "--symmetry", "10", "--row", "1", "--window", "1:2:3"], id="odd_box"),
        pytest.param(["ammann", "--symmetry", "h4", "--row", "1", "--window", "2"], id="svg_of_h4"),
        pytest.param(["spacegroup", "--group", "e8"], id="crystallographic_group"),
        pytest.param(["ammann", "--symmetry", "10", "--row", "1", "--window", "1/0"], id="zero_denominator_window"),
        pytest.param(["ammann", "--symmetry", "10", "--row", "1", "--q0", "1/0,1"], id="zero_denominator_q0"),
        pytest.param(["ammann", "--symmetry", "10", "--row", "1", "--q0", "1,2", "--format", "json"], id="short_q0"),
        pytest.param(["pairs", "--max", "4"], id="small_max"),
        pytest.param(["roots", "--symmetry", "h4", "--format", "svg"], id="svg_of_h4_roots"),
    ],
)
def test_invalid_arguments(argv):
    assert main(argv) == EXIT_INVALID


def test_argparse_rejects_nonplanar_dualize():
    with pytest.raises(SystemExit) as e:
        main(["dualize", "--symmetry", "h4", "--row", "1"])
    assert e.value.code == 2


def test_config_defaults(output_dir):
    args = build_parser().parse_args(["ammann", "--symmetry", "12", "--row", "3C"])
    config = config_from_args(args)
    assert config.format == "svg"
    assert config.row == "3c"
    assert config.window == "8"
    assert config.target() == output_dir / "ammann.svg"


def test_config_rejects_svg_for_tables():
    args = build_parser().parse_args(["pairs", "--format", "svg"])
    with pytest.raises(ValidationError):
        config_from_args(args)


@pytest.mark.parametrize(
    "symmetry,rings",
    [
        pytest.param("10", 2, id="decagonal"),
        pytest.param("8", 4, id="octagonal"),
        pytest.param("12", 4, id="dodecagonal"),
    ],
)
def test_roots_svg_has_one_layer_per_ring(output_dir, symmetry, rings):
    assert main(["roots", "--symmetry", symmetry]) == EXIT_OK
    svg = (output_dir / "roots.svg").read_text()
    assert [f'<g id="ring-{k}">' in svg for k in range(rings + 1)] == [True] * rings + [False]
    assert svg.count("<polygon") == rings


def test_roots_table_for_icosahedral(capsys):
    assert main(["roots", "--symmetry", "h3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "copies" in out
    assert "mirror multiplets" in out


def test_default_q0_follows_seed(tmp_path):
    argv = ["ammann", "--symmetry", "8", "--row", "2a", "--window", "3", "--format", "json"]
    q0 = {}
    for seed in ("1", "2"):
        out = tmp_path / f"seed-{seed}.json"
        assert main(argv + ["--seed", seed, "--out", str(out)]) == EXIT_OK
        q0[seed] = json.loads(out.read_text())["meta"]["q0"]
    again = tmp_path / "again.json"
    assert main(argv + ["--seed", "1", "--out", str(again)]) == EXIT_OK
    assert json.loads(again.read_text())["meta"]["q0"] == q0["1"]
    assert q0["1"] != q0["2"]
    assert build_parser().parse_args(argv).q0 == "random"


def test_rationals_q0_is_still_available(tmp_path):
    out = tmp_path / "p.json"
    argv = ["ammann", "--symmetry", "10", "--row", "1", "--window", "3", "--q0", "rationals", "--format", "json", "--out", str(out)]
    assert main(argv) == EXIT_OK
    assert json.loads(out.read_text())["meta"]["q0"] == ["1/7", "-1/9", "1/11", "-1/13"]


def test_computation_errors_are_failures(monkeypatch):
    def broken(config):
        raise ValueError("no exact solution")

    monkeypatch.setattr(cli, "run", broken)
    assert main(["pairs"]) == EXIT_FAILED
