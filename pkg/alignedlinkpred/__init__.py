try:
    from .version import __version__
except ImportError:
    pass

from .networks import *
from .features import *
from .sampling import *
from .learn import *
from .methods import *
from .experiments import *
