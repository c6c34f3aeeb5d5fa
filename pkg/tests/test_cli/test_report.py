import csv

import numpy as np

from polygrpd.cli import Report
from polygrpd.cli.report import plain
from polygrpd.utils import json
from polygrpd.utils.checks import CheckResult


def sample_report():
    return Report('check-structure', 'plane', 7, [
        CheckResult.from_residual('cond_i', 1e-12, 1e-8, 10),
        CheckResult.not_verified('foliation', 'global'),
        CheckResult.from_flag('closure', False, 10, witness=np.array([1.0, 2.0])),
    ])


class TestReport:

    def test_status(self):
        report = sample_report()
        assert not report.passed
        assert report.status == 'fail'
        assert [check.name for check in report.failed()] == ['closure']

    def test_not_verified_does_not_fail(self):
        report = Report('morita', checks=[CheckResult.not_verified('condition_2', 'global')])
        assert report.passed

    def test_as_dict(self):
        data = json.loads(sample_report().dumps())
        assert data['schema'] == 1
        assert data['seed'] == 7
        first, second, third = data['checks']
        assert first['status'] == 'pass'
        assert second['status'] == CheckResult.not_verified('x', 'y').status
        assert second['detail'] == {'reason': 'global'}
        assert third['detail'] == {'witness': [1.0, 2.0]}

    def test_wall_time(self):
        report = Report('relational')
        report.extend([CheckResult.from_flag('A1', True)], 0.5)
        record = report.as_dict()['checks'][0]
        assert record['wall_time'] == 0.5
        assert 'wall_time' not in record['detail']

    def test_write(self, tmp_path):
        report = sample_report()
        target = report.write(tmp_path / 'out')
        assert target.name == 'report.json'
        assert report.artifacts == ['residuals.csv']
        with open(tmp_path / 'out' / 'residuals.csv', newline='') as fp:
            rows = list(csv.reader(fp))
        assert rows[0] == ['name', 'status', 'worst_residual', 'tolerance', 'samples']
        assert [row[0] for row in rows[1:]] == ['cond_i', 'foliation', 'closure']

    def test_summary(self):
        lines = sample_report().summary().splitlines()
        assert lines[0] == 'check-structure plane: fail'
        assert len(lines) == 4


class TestPlain:

    def test_non_finite(self):
        assert plain([np.nan, np.inf, 1.5]) == ['nan', 'inf', 1.5]

    def test_numpy_scalars(self):
        assert plain({'flag': np.bool_(True), 'count': np.int64(3)}) == {'flag': True, 'count': 3}
        assert type(plain(np.float64(0.25))) is float
