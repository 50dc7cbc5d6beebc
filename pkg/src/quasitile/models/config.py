__all__ = ["RunConfig", "RunConfigDict", "LayerStyle", "DEFAULT_STYLES"]

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Literal, Optional, TypedDict

OutputFormat = Literal["svg", "json", "csv"]


@dataclass(frozen=True)
class LayerStyle:
    stroke: str
    width: float


DEFAULT_STYLES: dict[str, LayerStyle] = {
    "tiling": LayerStyle("purple", 2.0),
    "decoration": LayerStyle("blue", 0.6),
    "inflation": LayerStyle("deeppink", 0.6),
    "ammann": LayerStyle("black", 0.6),
    "roots": LayerStyle("darkgreen", 0.4),
}


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one CLI invocation.

    Properties:
      command: the subcommand.
      out: output file; None writes to stdout (json/csv) or to a file named
        after the command in `output_dir` (svg).
      format: None prints a table to stdout.
      seed: seed of the q0 sampler.
    """

    command: str
    output_dir: Path = Path(".")
    out: Optional[Path] = None
    format: Optional[OutputFormat] = "svg"
    seed: int = 0
    loglevel: str = "WARNING"
    symmetry: Optional[str] = None
    row: Optional[str] = None
    window: Optional[str] = None
    q0: Optional[str] = None
    inflate: int = 0
    decorate: Literal["none", "ammann", "inflation", "both"] = "none"
    chiral: bool = False
    group: Optional[str] = None
    trace: bool = False
    halved: bool = False
    n_max: int = 30
    styles: dict[str, LayerStyle] = field(default_factory=lambda: dict(DEFAULT_STYLES))

    def target(self, suffix: str = "") -> Optional[Path]:
        if self.out is not None:
            if suffix:
                return self.out.with_name(f"{self.out.stem}{suffix}{self.out.suffix}")
            return self.out
        if self.format == "svg":
            return self.output_dir / f"{self.command}{suffix}.svg"
        return None

    def to_dict(self) -> "RunConfigDict":
        d = asdict(self)
        d.pop("styles")
        d["output_dir"] = str(self.output_dir)
        d["out"] = None if self.out is None else str(self.out)
        return d  # type: ignore[return-value]


class RunConfigDict(TypedDict, total=False):
    command: str
    output_dir: str
    out: Optional[str]
    format: Optional[OutputFormat]
    seed: int
    loglevel: str
    symmetry: Optional[str]
    row: Optional[str]
    window: Optional[str]
    q0: Optional[str]
    inflate: int
    decorate: str
    chiral: bool
    group: Optional[str]
    trace: bool
    halved: bool
    n_max: int
