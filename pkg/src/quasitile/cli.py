#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Command-line front end.

    quasitile pairs --max 30
    quasitile roots --symmetry 8 --out roots.svg
    quasitile ammann --symmetry 10 --row 1 --window -10:10:-10:10 --q0 random:42 --out p.svg
    quasitile dualize --symmetry 8 --row 2b --window 8 --decorate both --format json
    quasitile prototiles --symmetry 12 --row 3b --window 8
    quasitile wallcheck --symmetry 12 --row 3a --window 8 --halved
    quasitile spacegroup --group h4 --trace
"""
__all__ = ["main", "run", "build_parser", "config_from_args"]

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from .exceptions import QuasitileError
from .models import RunConfig
from .quasitile import Quasitile
from .utils.converter import exact_to_json, fraction_str, to_dict
from .utils.parser import parse_q0, parse_window
from .utils.validation import ValidationError, Validation
from .version import __version__

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILED = 3
EXIT_IO = 4

OUTPUT_DIR_ENV = "QUASITILE_OUTPUT_DIR"

# the six minimal planar cases
EXAMPLES = """examples:
  quasitile dualize --symmetry 10 --row 1 --window 8
  quasitile dualize --symmetry 8 --row 2a --window 8
  quasitile dualize --symmetry 8 --row 2b --window 8
  quasitile dualize --symmetry 12 --row 3a --window 8
  quasitile dualize --symmetry 12 --row 3b --window 8
  quasitile dualize --symmetry 12 --row 3c --window 8
"""

_CSV_COMMANDS = ("pairs", "prototiles", "spacegroup")
_SVG_COMMANDS = ("ammann", "dualize", "roots")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--out", help="output file (default: stdout for json/csv, <command>.svg in the output directory)", type=Path, default=None)
    p.add_argument("--format", help="output format", choices=["svg", "json", "csv"], default=None)
    p.add_argument("--seed", help="seed of the random q0 sampler", type=int, default=0)
    p.add_argument(
        "--loglevel",
        help="logging level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NOTSET"],
        default=os.getenv("QUASITILE_LOGLEVEL", "WARNING").upper(),
    )


def _pattern_args(p: argparse.ArgumentParser, planar: bool):
    choices = ["10", "8", "12"] if planar else ["10", "8", "12", "h3", "h4"]
    p.add_argument("--symmetry", help="point symmetry of the pattern", choices=choices, required=True)
    p.add_argument("--row", help="quasilattice row: 1, 2a, 2b, 3a, 3b, 3c, 4a, 4b, 4c or 4d", required=True)
    p.add_argument("--window", help='disk radius "R" or box "x0:x1:y0:y1" in mean plane spacings', default="8")
    p.add_argument("--q0", help='"random" (seeded by --seed), "random:<seed>", "rationals" or comma separated rationals', default="random")
    p.add_argument("--inflate", help="apply k inflation steps to the pattern", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasitile",
        description="Quasiperiodic tilings from Coxeter pairs.",
        epilog=EXAMPLES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pairs", help="list Coxeter pairs")
    p.add_argument("--max", dest="n_max", help="largest n of I2(n)", type=int, default=30)
    _common(p)

    p = sub.add_parser("roots", help="projected root rings of a quadratic pair")
    p.add_argument("--symmetry", help="theta||", choices=["10", "8", "12", "h3", "h4"], required=True)
    _common(p)

    p = sub.add_parser("ammann", help="Ammann pattern")
    _pattern_args(p, planar=False)
    _common(p)

    for name, text in (("dualize", "dual tiling"), ("prototiles", "prototile classes")):
        p = sub.add_parser(name, help=text, epilog=EXAMPLES, formatter_class=argparse.RawDescriptionHelpFormatter)
        _pattern_args(p, planar=True)
        p.add_argument(
            "--decorate", help="prototile decoration", choices=["none", "ammann", "inflation", "both"], default="none" if name == "dualize" else "both"
        )
        p.add_argument("--chiral", help="keep mirror images apart", action="store_true")
        _common(p)

    p = sub.add_parser("wallcheck", help="wall-to-wall test")
    _pattern_args(p, planar=True)
    p.add_argument("--halved", help="test the halved pattern", action="store_true")
    _common(p)

    p = sub.add_parser("spacegroup", help="space group classification")
    p.add_argument("--group", help="h4, h3 or i2:n", default="h4")
    p.add_argument("--trace", help="print the congruences of every relation", action="store_true")
    _common(p)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Resolve parsed arguments and the environment into a RunConfig.

    Raises:
        ValidationError: invalid values or flag combinations.
    """
    v = Validation()
    command = args.command
    symmetry = getattr(args, "symmetry", None)
    fmt = args.format
    if fmt is None and command in _SVG_COMMANDS and not (command == "roots" and symmetry in ("h3", "h4")):
        fmt = "svg"
    if fmt == "csv" and command not in _CSV_COMMANDS:
        raise ValidationError(f"--format csv is only available for {', '.join(_CSV_COMMANDS)}")
    if fmt == "svg" and command not in _SVG_COMMANDS:
        raise ValidationError(f"--format svg is only available for {', '.join(_SVG_COMMANDS)}")
    if fmt == "json" and command == "roots":
        raise ValidationError("--format json is not available for roots")
    row = getattr(args, "row", None)
    if row is not None:
        symmetry, row = v.pairing(symmetry, row)
    window = getattr(args, "window", None)
    if window is not None:
        v(window=window)
        try:
            parse_window(window)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"window {window!r}: {e}")
    q0 = getattr(args, "q0", None)
    if q0 is not None:
        v(q0=q0)
        try:
            parse_q0(q0)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"q0 {q0!r}: {e}")
    n_max = getattr(args, "n_max", 30)
    if n_max < 5:
        raise ValidationError("--max must be at least 5")
    group = getattr(args, "group", None)
    if group is not None:
        v(group=group)
    return RunConfig(
        command=command,
        output_dir=Path(os.getenv(OUTPUT_DIR_ENV) or "."),
        out=args.out,
        format=fmt,
        seed=args.seed,
        loglevel=args.loglevel,
        symmetry=symmetry,
        row=row,
        window=window,
        q0=q0,
        inflate=v.positive("inflate", getattr(args, "inflate", 0)),
        decorate=getattr(args, "decorate", "none"),
        chiral=getattr(args, "chiral", False),
        group=group,
        trace=getattr(args, "trace", False),
        halved=getattr(args, "halved", False),
        n_max=n_max,
    )


def _emit(qt: Quasitile, config: RunConfig, text: str, suffix: str = ""):
    target = config.target(suffix)
    if target is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    qt.write(text, target)


def _pattern_json(pattern, planes) -> str:
    doc = {
        "meta": {
            "symmetry": pattern.spec.symmetry,
            "row": pattern.spec.qclass.row_id,
            "q0": [fraction_str(x) for x in pattern.spec.q0],
            "D": pattern.D,
            "J": pattern.J,
        },
        "phases": [{"chi_plus": exact_to_json(s.chi1_plus), "chi_minus": exact_to_json(s.chi1_minus)} for s in pattern.per_direction],
        "planes": [{"j": p.j, "n": fraction_str(p.n), "offset": exact_to_json(p.offset)} for p in planes],
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def _table(qt: Quasitile, config: RunConfig, text: str, frame, document: dict):
    """Print `text`, or write the csv of `frame` / the json `document`."""
    if config.format == "csv":
        _emit(qt, config, frame().write_csv())
    elif config.format == "json":
        _emit(qt, config, json.dumps(document, indent=1, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def run(config: RunConfig) -> int:
    """Execute one command. Returns the process exit status."""
    qt = Quasitile(config.output_dir, seed=config.seed, chiral=config.chiral, loglevel=config.loglevel)  # type: ignore[arg-type]
    c = config.command
    if c == "pairs":
        table = qt.coxeter_pairs(config.n_max)
        _table(qt, config, table.table(), table.to_polars, {"pairs": table.to_polars().to_dicts()})
        return EXIT_OK
    if c == "roots":
        from .ammann import SYMMETRIES

        theta_par = SYMMETRIES[config.symmetry][0]
        if config.format == "svg":
            qt.v.planar(config.symmetry, "svg output")
            _emit(qt, config, qt.root_svg(theta_par, config.styles))
        else:
            print(qt.root_report(theta_par))
        return EXIT_OK
    if c == "spacegroup":
        result = qt.space_groups(config.group, trace=config.trace)
        text = result.summary() + ("\n" + result.table() if config.trace else "")
        _table(qt, config, text, result.to_polars, to_dict(result))
        return EXIT_OK

    if c == "ammann" and config.format == "svg":
        qt.v.planar(config.symmetry, "svg output")
    pattern = qt.pattern(config.symmetry, config.row, q0=config.q0, window=config.window, inflate_by=config.inflate)
    window = parse_window(config.window)
    if c == "ammann":
        if config.format == "json":
            _emit(qt, config, _pattern_json(pattern, qt.planes(pattern, window)))
        else:
            _emit(qt, config, qt.pattern_svg(pattern, window, config.styles))
        return EXIT_OK
    if c == "wallcheck":
        report = qt.wall_to_wall(pattern, window, halved=config.halved)
        text = f"wall-to-wall: {'yes' if report else 'no'} ({len(report.violations)} planes not kept)"
        _table(qt, config, text, None, {"wall_to_wall": report.wall_to_wall, "halved": config.halved, "violations": len(report.violations)})
        return EXIT_OK

    tiling = qt.tiling(pattern, window)
    if c == "prototiles":
        result = qt.prototiles(pattern, window, tiling, config.decorate)
        text = result.table()
        if result.bijection is not None:
            text += f"\ndecoration/inflation bijection: {'yes' if result.bijection else 'no'}"
        _table(qt, config, text, result.to_polars, to_dict(result))
        return EXIT_OK

    # dualize
    prototiles = None if config.decorate == "none" else qt.prototiles(pattern, window, tiling, config.decorate)
    if config.format == "json":
        _emit(qt, config, qt.tiling_json(pattern, tiling, prototiles))
        return EXIT_OK
    if config.decorate in ("none", "ammann", "both"):
        segments = qt.decoration_segments(pattern, tiling, window) if config.decorate != "none" else None
        suffix = "-ammann" if config.decorate == "both" else ""
        _emit(qt, config, qt.tiling_svg(pattern, tiling, segments, styles=config.styles), suffix)
    if config.decorate in ("inflation", "both"):
        overlay = qt.inflation_overlay(pattern, window)
        suffix = "-inflation" if config.decorate == "both" else ""
        _emit(qt, config, qt.tiling_svg(pattern, tiling, overlay=overlay, styles=config.styles), suffix)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return run(config)
    except ValidationError as e:
        logging.error(f"invalid arguments: {e}")
        print(f"quasitile: error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (QuasitileError, ValueError) as e:
        logging.error(f"{type(e).__name__}: {e}")
        print(f"quasitile: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        print(f"quasitile: cannot write output: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
