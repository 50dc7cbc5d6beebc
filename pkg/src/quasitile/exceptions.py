from dataclasses import dataclass
from typing import Any, Optional


class QuasitileError(Exception):
    """Base class of every error raised by the library."""

    pass


@dataclass
class FieldMismatchError(QuasitileError):
    left_D: int
    right_D: int

    def __post_init__(self):
        super().__init__(
            f"operands live in Q(sqrt {self.left_D}) and Q(sqrt {self.right_D})"
        )


@dataclass
class NonSquarefreeError(QuasitileError):
    D: int

    def __post_init__(self):
        super().__init__(f"{self.D} is not a squarefree integer > 1")


@dataclass
class UnsupportedRootSystemError(QuasitileError):
    name: str
    moreInfo: Optional[str] = None

    def __post_init__(self):
        info = f" ({self.moreInfo})" if self.moreInfo else ""
        super().__init__(f"unsupported root system {self.name!r}{info}")


@dataclass
class OutsideSpanError(QuasitileError):
    errorMessage: str

    def __post_init__(self):
        super().__init__(self.errorMessage)


@dataclass
class SingularPhaseError(QuasitileError):
    n: int
    direction: Optional[int] = None

    def __post_init__(self):
        where = "" if self.direction is None else f" in direction {self.direction}"
        super().__init__(f"singular phase at n = {self.n}{where}")


@dataclass
class InvalidStarError(QuasitileError):
    errorMessage: str

    def __post_init__(self):
        super().__init__(self.errorMessage)


@dataclass
class PresentationError(QuasitileError):
    errorMessage: str
    relation: Optional[Any] = None

    def __post_init__(self):
        where = "" if self.relation is None else f" (relation {self.relation})"
        super().__init__(f"{self.errorMessage}{where}")


@dataclass
class NonFiniteClassificationError(QuasitileError):
    moduli: int

    def __post_init__(self):
        super().__init__(
            f"{self.moduli} continuous phase parameters survive the gauge quotient"
        )
