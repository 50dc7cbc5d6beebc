from .src.quasitile import version
from .src.quasitile.version import *
from .src.quasitile import *
