from polygrpd.utils.checks import FAIL, NOT_VERIFIED, PASS, CheckResult


class TestCheckResult:

    def test_from_residual(self):
        check = CheckResult.from_residual('closure', 1e-9, 1e-7, 10, point=[0.0])
        assert check.passed
        assert check.status == PASS
        assert check.samples == 10
        assert check.detail == {'point': [0.0]}

        check = CheckResult.from_residual('closure', 1e-3, 1e-7, 10)
        assert check.passed is False
        assert check.status == FAIL

    def test_from_flag(self):
        check = CheckResult.from_flag('lagrangian', 0)
        assert check.passed is False
        assert check.worst_residual is None
        assert check.samples == 1

    def test_not_verified(self):
        check = CheckResult.not_verified('integrable', 'global condition')
        assert check.passed is None
        assert check.status == NOT_VERIFIED
        assert check.detail['reason'] == 'global condition'
