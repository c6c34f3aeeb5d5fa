import pytest

from polygrpd.polyspace import PolyForm
from polygrpd.relational import (
    RelationalScenario,
    build_scenario,
    bundle_groupoid,
    check_axioms,
    multiplication_is_lagrangian,
    multiplication_is_poly_lagrangian,
    pair_groupoid,
)
from polygrpd.utils.checks import CheckResult

AXIOMS = [
    'A1_cyclicity',
    'A2_involution',
    'A3_inversion_compatibility',
    'A4_associativity',
    'A5_unit_idempotent',
    'A6_unit_compatibility',
]
PLANE = PolyForm.from_wedges(2, [[(0, 1, 1.0)]])


class TestGroupoidModels:

    @pytest.mark.parametrize('name', [RelationalScenario.RELATIONAL_PAIR, RelationalScenario.RELATIONAL_BUNDLE])
    def test_all_axioms_pass(self, name):
        report = check_axioms(build_scenario(name))
        assert [check.name for check in report.checks] == AXIOMS
        assert report.passed
        for check in report.checks:
            assert check.status == CheckResult.PASS
        assert report.facts['inversion_anti_symplectic']
        assert report.facts['multiplication_lagrangian']
        assert report.facts['multiplicative']

    def test_pair_units(self):
        report = check_axioms(build_scenario(RelationalScenario.RELATIONAL_PAIR))
        assert report.facts['unit_lagrangian']
        assert report['A2_involution'].detail['defect'] == 0

    def test_multiplicative(self):
        assert pair_groupoid(PLANE).is_multiplicative()
        assert bundle_groupoid(1, 2).is_multiplicative()

    def test_symplectic_multiplication(self):
        groupoid = pair_groupoid(PLANE)
        assert multiplication_is_lagrangian(groupoid)
        assert multiplication_is_poly_lagrangian(groupoid)

    def test_lagrangian_but_not_poly_lagrangian(self):
        groupoid = pair_groupoid(PolyForm.from_wedges(2, [[(0, 1, 1.0)], [(0, 1, 2.0)]]))
        assert multiplication_is_lagrangian(groupoid)
        assert not multiplication_is_poly_lagrangian(groupoid)


class TestBrokenModels:

    def test_corrupted_inversion(self):
        report = check_axioms(build_scenario(RelationalScenario.RELATIONAL_CORRUPTED))
        assert not report.passed
        assert report['A2_involution'].passed is False

    def test_random_relation(self, rng):
        report = check_axioms(build_scenario(RelationalScenario.RELATIONAL_RANDOM, rng))
        assert not report.passed
        assert 'multiplicative' not in report.facts

    def test_zero_form_units(self):
        report = check_axioms(build_scenario(RelationalScenario.RELATIONAL_ZERO_FORM))
        assert len(report.checks) == len(AXIOMS)
        assert not report.facts['unit_lagrangian']

    def test_unknown_scenario(self):
        with pytest.raises(ValueError):
            build_scenario('relational-nothing')

    def test_missing_check(self):
        report = check_axioms(build_scenario(RelationalScenario.RELATIONAL_PAIR))
        with pytest.raises(KeyError):
            report['A7']
