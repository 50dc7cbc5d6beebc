__all__ = ["Quasitile"]

import logging
from pathlib import Path
from typing import Literal, Union

from ..utils.validation import Validation

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NOTSET"]


class Quasitile:

    v = Validation()

    def __init__(
        self,
        output_dir: Union[str, Path] = ".",
        *,
        seed: int = 0,
        chiral: bool = False,
        loglevel: LogLevel | None = "WARNING",
    ):
        """
        Create a new Quasitile instance.

        Parameters:
          output_dir: directory for written artifacts.
          seed: seed of the random q0 sampler.
          chiral: keep mirror images apart when classifying prototiles.
          loglevel: 'DEBUG'|'INFO'|'WARNING'|'ERROR'|'CRITICAL'|'NOTSET'|None to set the log level. Set None to prevent any setting.

        Returns:
          Quasitile: Quasitile instance.
        """
        self.output_dir = Path(output_dir)
        self.seed = seed
        self.chiral = chiral
        if loglevel:
            self.set_log_level(loglevel)

    def set_log_level(self, loglevel: LogLevel | None = None) -> int | None:
        """Set log level.

        Parameters:
          loglevel: one of the logging level names, or None to leave logging alone.

        Returns:
          int|None: logging.<LOGLEVEL> or None
        """
        if not loglevel:
            return None
        elif loglevel == "DEBUG":
            level = logging.DEBUG
        elif loglevel == "INFO":
            level = logging.INFO
        elif loglevel == "WARNING":
            level = logging.WARNING
        elif loglevel == "ERROR":
            level = logging.ERROR
        elif loglevel == "CRITICAL":
            level = logging.CRITICAL
        elif loglevel == "NOTSET":
            level = logging.NOTSET
        else:
            raise ValueError(f"unknown log level {loglevel!r}")
        logging.basicConfig(level=level)
        return level

    def __repr__(self):
        return f"Quasitile(output_dir={str(self.output_dir)!r}, seed={self.seed}, chiral={self.chiral})"
