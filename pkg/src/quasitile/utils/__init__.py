from .converter import *
from .parser import *
