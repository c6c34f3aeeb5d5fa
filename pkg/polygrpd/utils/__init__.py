from . import checks, exceptions, helper, json, linalg, numdiff, tolerances, workers
from .tolerances import DEFAULT, Tolerances

__all__ = (
    'DEFAULT',
    'Tolerances',
    'checks',
    'exceptions',
    'helper',
    'json',
    'linalg',
    'numdiff',
    'tolerances',
    'workers',
)
