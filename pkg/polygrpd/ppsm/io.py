"""
Plain-text path files.

Layout::

    # polygrpd path
    <n> <r> <K> <N> <structure name>
    breaks <row> ...            (only for concatenated paths)
    <t> <X_1> ... <X_n> <λ_1> ... <λ_K>

Numbers are written with 17 significant digits, so reading back restores
every float exactly.
"""
import io
import logging
import pathlib
from typing import TextIO, Union

import numpy as np

from ..structures import PolyPoissonStructure
from ..utils import exceptions
from .path import CotangentPath, residual

log = logging.getLogger('polygrpd')

MAGIC = '# polygrpd path'
BREAKS = 'breaks'
FLOAT_FORMAT = '%.17g'

Destination = Union[str, pathlib.Path, TextIO]


def _format_row(values) -> str:
    return ' '.join(FLOAT_FORMAT % value for value in values)


def dumps_path(path: CotangentPath) -> str:
    structure = path.structure
    lines = [MAGIC, f"{structure.dim} {structure.order} {structure.size} {path.steps} {structure.name}"]
    if path.breaks:
        lines.append(' '.join([BREAKS] + [str(row) for row in path.breaks]))
    for t, x, lam in zip(path.times, path.points, path.coefficients):
        lines.append(_format_row([t, *x, *lam]))
    return '\n'.join(lines) + '\n'


def dump_path(path: CotangentPath, destination: Destination):
    text = dumps_path(path)
    if isinstance(destination, (str, pathlib.Path)):
        pathlib.Path(destination).write_text(text, encoding='utf-8')
        log.info("Path written to %s", destination)
    else:
        destination.write(text)


def loads_path(text: str, structure: PolyPoissonStructure) -> CotangentPath:
    """
    :raise ConfigError: on a malformed file
    :raise WrongStructure: if the header does not fit the structure
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0].strip() != MAGIC:
        raise exceptions.ConfigError('Not a polygrpd path file')
    try:
        header = lines[1].split(maxsplit=4)
        n, r, size, steps = (int(value) for value in header[:4])
    except (IndexError, ValueError) as e:
        raise exceptions.ConfigError(f"Malformed path header: {e}")
    name = header[4] if len(header) > 4 else ''
    if (n, r, size) != (structure.dim, structure.order, structure.size):
        raise exceptions.WrongStructure(
            f"Path file has n={n} r={r} K={size}, structure {structure!r} does not match"
        )
    if name != structure.name:
        log.warning("Path file was written for %r, loading onto %r", name, structure.name)

    body = lines[2:]
    breaks = []
    if body and body[0].startswith(BREAKS):
        breaks = [int(value) for value in body[0].split()[1:]]
        body = body[1:]
    try:
        table = np.loadtxt(io.StringIO('\n'.join(body)), dtype=float, ndmin=2)
    except ValueError as e:
        raise exceptions.ConfigError(f"Malformed path rows: {e}")
    if table.shape != (steps + 1, 1 + n + size):
        raise exceptions.ConfigError(f"Expected {steps + 1} rows of {1 + n + size} numbers, got {table.shape}")

    path = CotangentPath(structure, table[:, 0], table[:, 1:1 + n], table[:, 1 + n:])
    if path.breaks != breaks:
        raise exceptions.ConfigError(f"Declared breaks {breaks} do not match the time column {path.breaks}")
    return CotangentPath(structure, path.times, path.points, path.coefficients,
                         on_shell=residual(path) <= structure.tolerances.path)


def load_path(source: Destination, structure: PolyPoissonStructure) -> CotangentPath:
    if isinstance(source, (str, pathlib.Path)):
        text = pathlib.Path(source).read_text(encoding='utf-8')
    else:
        text = source.read()
    return loads_path(text, structure)
