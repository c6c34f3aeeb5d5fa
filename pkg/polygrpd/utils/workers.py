import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

log = logging.getLogger('polygrpd')

THREADS_ENV = 'POLYGRPD_THREADS'

T = TypeVar('T')
R = TypeVar('R')


def max_workers() -> int:
    """
    Worker cap for sample sweeps, read from ``POLYGRPD_THREADS``
    """
    value = os.environ.get(THREADS_ENV)
    if value is None:
        return min(4, os.cpu_count() or 1)
    try:
        workers = int(value)
    except ValueError:
        log.warning("Ignoring %s=%r: not an integer", THREADS_ENV, value)
        return 1
    return max(1, workers)


def map_points(func: Callable[[T], R], points: Iterable[T]) -> List[R]:
    """
    Evaluate func at every point, keeping the input order
    """
    points = list(points)
    workers = min(max_workers(), len(points))
    if workers <= 1:
        return [func(point) for point in points]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, points))
