#!/usr/bin/env python
# -*- coding: utf-8 -*-
import logging
import os
from pathlib import Path

from .version import *  # for __version__, __author__

__all__ = ["Quasitile"]

from ._mixins import (
    BaseClass,
    _MixinRoots,
    _MixinLattice,
    _MixinAmmann,
    _MixinTiling,
    _MixinSpaceGroup,
    _MixinExport,
)


# Each mixin wraps one algorithmic module; they share the validator, the
# output directory, the seed and the chirality flag of the base class.
class Quasitile(
    _MixinExport,
    _MixinSpaceGroup,
    _MixinTiling,
    _MixinAmmann,
    _MixinLattice,
    _MixinRoots,
    BaseClass,
):
    """This class is the main entry point of the library."""

    @staticmethod
    def from_env(
        output_dir: str = "QUASITILE_OUTPUT_DIR",
        seed: str = "QUASITILE_SEED",
        loglevel: str = "QUASITILE_LOGLEVEL",
        *,
        chiral: str = "QUASITILE_CHIRAL",
        load_dotenv: bool = False,
    ) -> "Quasitile":
        """Create a new Quasitile instance from environment variables.
        The environment variables are:
          - QUASITILE_OUTPUT_DIR
          - QUASITILE_SEED
          - QUASITILE_LOGLEVEL
          - QUASITILE_CHIRAL

        Parameters:
          output_dir: environment variable name for the output directory.
          seed: environment variable name for the q0 sampler seed.
          loglevel: environment variable name for the log level.
          chiral: environment variable name for the chirality flag.
          load_dotenv: load the dotenv file. Default: False.

        Returns:
          Quasitile: Quasitile instance.
        """
        if load_dotenv:
            from dotenv import load_dotenv as ldotenv

            ldotenv()

        out = os.getenv(output_dir)
        if not out:
            logging.warning(f"{output_dir} is not set, writing to the current directory")
            out = "."
        seed_value = os.getenv(seed) or "0"
        try:
            seed_int = int(seed_value)
        except ValueError:
            raise ValueError(f"{seed} must be an integer, got {seed_value!r}")
        level = (os.getenv(loglevel) or "WARNING").upper()
        if level not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NOTSET"]:
            raise ValueError(f"{loglevel} must be a logging level name, got {level!r}")
        is_chiral = (os.getenv(chiral) or "").lower() in ["1", "true", "yes"]
        return Quasitile(Path(out), seed=seed_int, chiral=is_chiral, loglevel=level)  # type: ignore
