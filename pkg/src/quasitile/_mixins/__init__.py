__all__ = [
    "BaseClass",
    "_MixinRoots",
    "_MixinLattice",
    "_MixinAmmann",
    "_MixinTiling",
    "_MixinSpaceGroup",
    "_MixinExport",
]

from .baseclass import Quasitile as BaseClass
from ._roots import _MixinRoots
from ._lattice import _MixinLattice
from ._ammann import _MixinAmmann
from ._tiling import _MixinTiling
from ._spacegroup import _MixinSpaceGroup
from ._export import _MixinExport
