from .quasitile import Quasitile
from .models import *
from .exactfield import QuadNum, quad, golden_ratio
from .utils.converter import *
from .utils.parser import *
