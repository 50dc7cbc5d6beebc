__all__ = ["_MixinLattice"]

from fractions import Fraction
from typing import Union

from ..models import QuasilatticeClass, QuasilatticeSpec, Quasilattice1DWindow, SelfSimilarityReport
from ..models.quasilattice import class_table
from ..quasilattice1d import GENERIC_PHASE, builtin_classes, generate, get_class, quasilattice_spec, self_similarity
from . import BaseClass


class _MixinLattice(BaseClass):
    def quasilattice_classes(self) -> list[QuasilatticeClass]:
        return builtin_classes(verify=True)

    def class_table(self) -> str:
        return class_table(builtin_classes()).get_string()

    def quasilattice(self, row: str, chi: Union[Fraction, int] = GENERIC_PHASE) -> QuasilatticeSpec:
        """1D quasilattice of a row at phase chi (chi- = chi).

        Parameters:
          row: "1", "2a", ... or "R2a".
          chi: rational phase; integers are singular.
        """
        return quasilattice_spec(get_class(self.v.row(row)), Fraction(chi))

    def generate(self, row: str, n_lo: int, n_hi: int, chi: Union[Fraction, int] = GENERIC_PHASE) -> Quasilattice1DWindow:
        return generate(self.quasilattice(row, chi), n_lo, n_hi)

    def self_similarity(self, row: str, chi: Union[Fraction, int] = GENERIC_PHASE, count: int = 600) -> SelfSimilarityReport:
        return self_similarity(get_class(self.v.row(row)), Fraction(chi), count)
