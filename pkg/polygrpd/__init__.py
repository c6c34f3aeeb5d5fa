import sys
if sys.version_info < (3, 8):
    raise ImportError('Your Python version {0} is not supported by polygrpd, please install '
                      'Python 3.8+'.format('.'.join(map(str, sys.version_info[:3]))))

from . import folired
from . import polyspace
from . import ppsm
from . import relational
from . import structures
from . import utils
from .polyspace import CovectorTuple, PolyForm, Subspace
from .ppsm import CotangentPath, solve_a_path
from .relational import LinearRelation, PolySymplecticSpace
from .structures import PolyPoissonStructure, check_axioms
from .utils import exceptions, helper, json
from .utils.tolerances import DEFAULT, Tolerances

__all__ = (
    'CotangentPath',
    'CovectorTuple',
    'DEFAULT',
    'LinearRelation',
    'PolyForm',
    'PolyPoissonStructure',
    'PolySymplecticSpace',
    'Subspace',
    'Tolerances',
    '__version__',
    'check_axioms',
    'exceptions',
    'folired',
    'helper',
    'json',
    'polyspace',
    'ppsm',
    'relational',
    'solve_a_path',
    'structures',
    'utils',
)

__version__ = '0.3'
