"""
Machine-readable reports.

``report.json`` holds the whole report (``schema: 1``), ``residuals.csv``
one row per check. Path scenarios add plot tables with the columns
``t, X1..Xn, lambda1..lambdaK, residual``.
"""
import csv
import logging
import math
import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ..ppsm import CotangentPath, constraint_defect
from ..utils import json
from ..utils.checks import FAIL, PASS, CheckResult

log = logging.getLogger(__name__)

SCHEMA = 1
REPORT_FILE = 'report.json'
RESIDUALS_FILE = 'residuals.csv'
RESIDUAL_COLUMNS = ('name', 'status', 'worst_residual', 'tolerance', 'samples')


def plain(value):
    """
    JSON-friendly copy of numpy scalars, arrays and nested containers.
    Non-finite floats are written as strings.
    """
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    return value


def check_record(check: CheckResult) -> Dict[str, Any]:
    detail = dict(check.detail)
    wall_time = detail.pop('wall_time', None)
    return plain({
        'name': check.name,
        'status': check.status,
        'worst_residual': check.worst_residual,
        'tolerance': check.tolerance,
        'samples': check.samples,
        'wall_time': wall_time,
        'detail': detail,
    })


@dataclass
class Report:
    command: str
    scenario: str = ''
    seed: Optional[int] = None
    checks: List[CheckResult] = field(default_factory=list)
    #: structural observations that do not decide the status
    facts: Dict[str, Any] = field(default_factory=dict)
    #: files written next to the report
    artifacts: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if check.passed is False]

    def extend(self, checks, wall_time: Optional[float] = None):
        for check in checks:
            if wall_time is not None:
                check.detail.setdefault('wall_time', wall_time)
            self.checks.append(check)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA,
            'command': self.command,
            'scenario': self.scenario,
            'seed': self.seed,
            'status': self.status,
            'checks': [check_record(check) for check in self.checks],
            'facts': plain(self.facts),
            'artifacts': list(self.artifacts),
        }

    def dumps(self) -> str:
        return json.dumps(self.as_dict())

    def write(self, directory) -> pathlib.Path:
        """
        Write ``report.json`` and ``residuals.csv`` into directory

        :return: path of the JSON report
        """
        directory = pathlib.Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        with open(directory / RESIDUALS_FILE, 'w', newline='', encoding='utf-8') as fp:
            writer = csv.writer(fp)
            writer.writerow(RESIDUAL_COLUMNS)
            for check in self.checks:
                record = check_record(check)
                writer.writerow([record[column] for column in RESIDUAL_COLUMNS])
        if RESIDUALS_FILE not in self.artifacts:
            self.artifacts.append(RESIDUALS_FILE)
        target = directory / REPORT_FILE
        target.write_text(self.dumps() + '\n', encoding='utf-8')
        log.info("Report written to %s (%s)", target, self.status)
        return target

    def summary(self) -> str:
        lines = [f"{self.command} {self.scenario}".strip() + f": {self.status}"]
        for check in self.checks:
            residual = '-' if check.worst_residual is None else f"{check.worst_residual:.3e}"
            lines.append(f"  {check.name:<32} {check.status:<24} {residual}")
        return '\n'.join(lines)


def path_table_columns(path: CotangentPath) -> List[str]:
    structure = path.structure
    return (['t'] + [f"X{i + 1}" for i in range(structure.dim)]
            + [f"lambda{a + 1}" for a in range(structure.size)] + ['residual'])


def write_path_table(path: CotangentPath, destination) -> pathlib.Path:
    """
    Plot data of a path: one row per grid node with the local constraint residual
    """
    destination = pathlib.Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    residuals = np.linalg.norm(constraint_defect(path), axis=1)
    with open(destination, 'w', newline='', encoding='utf-8') as fp:
        writer = csv.writer(fp)
        writer.writerow(path_table_columns(path))
        for t, x, lam, res in zip(path.times, path.points, path.coefficients, residuals):
            writer.writerow(['%.17g' % value for value in (t, *x, *lam, res)])
    log.info("Path table written to %s", destination)
    return destination
