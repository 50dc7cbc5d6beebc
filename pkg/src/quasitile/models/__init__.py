from ..exceptions import *
from .rootsystem import *
from .quasilattice import *
from .pattern import *
from .tiling import *
from .spacegroup import *
from .config import RunConfig, RunConfigDict, LayerStyle, DEFAULT_STYLES
