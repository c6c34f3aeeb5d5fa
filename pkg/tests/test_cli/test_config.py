import pathlib

import pytest

from polygrpd.cli import Command, ScenarioConfig, from_mapping, load_config, loads_config
from polygrpd.utils import exceptions

STRUCTURE = {'constructor': 'linear-direct-sum', 'params': {'algebra': 'so3', 'r': 2}}
SCENARIOS = pathlib.Path(__file__).parents[2] / 'scenarios'


class TestScenarioConfig:

    def test_defaults(self):
        config = from_mapping({'command': 'relational', 'scenario': 'relational-pair'})
        assert config.samples == 100
        assert config.grid == 1000
        assert config.seed is None
        assert not config.randomized

    def test_from_text(self):
        config = loads_config('{"command": "check-structure", "structure": {"constructor": "symplectic-plane"},'
                              ' "samples": 5, "seed": 1}')
        assert config.command == Command.CHECK_STRUCTURE
        assert config.randomized
        assert config.structure == {'constructor': 'symplectic-plane'}

    def test_override(self):
        config = from_mapping({'command': 'integrate-path', 'structure': STRUCTURE})
        changed = config.override(grid=200, seed=None)
        assert changed.grid == 200
        assert changed.seed is None
        assert config.grid == 1000

    def test_tolerances(self):
        config = from_mapping({'command': 'integrate-path', 'structure': STRUCTURE,
                               'tolerance_scale': 10.0, 'tolerances': {'path': 1e-5}})
        tolerances = config.build_tolerances()
        assert tolerances.path == pytest.approx(1e-4)
        assert tolerances.rank_rtol == pytest.approx(1e-9)

    @pytest.mark.parametrize('data', [
        {'command': 'relational', 'colour': 'red'},
        {'scenario': 'relational-pair'},
        {'command': 'fly'},
        {'command': 'check-structure', 'structure': STRUCTURE},
        {'command': 'check-structure', 'structure': STRUCTURE, 'seed': -1},
        {'command': 'check-structure', 'structure': {'params': {}}, 'seed': 1},
        {'command': 'check-structure', 'structure': {'constructor': 'klein-bottle'}, 'seed': 1},
        {'command': 'check-structure', 'structure': {'constructor': 'symplectic-plane', 'extra': 1}, 'seed': 1},
        {'command': 'integrate-path', 'structure': STRUCTURE, 'samples': 0},
        {'command': 'integrate-path', 'structure': STRUCTURE, 'grid': 10.5},
        {'command': 'integrate-path', 'structure': STRUCTURE, 'tolerance_scale': -1.0},
        {'command': 'integrate-path', 'structure': STRUCTURE, 'tolerances': {'speed': 1.0}},
        {'command': 'integrate-path', 'structure': STRUCTURE, 'params': [1, 2]},
        {'command': 'relational', 'scenario': 'relational-random'},
        ['relational'],
    ])
    def test_invalid(self, data):
        with pytest.raises(exceptions.ConfigError):
            from_mapping(data)

    def test_not_json(self):
        with pytest.raises(exceptions.ConfigError):
            loads_config('{"command": ')

    def test_missing_file(self, tmp_path):
        with pytest.raises(exceptions.ConfigError):
            load_config(tmp_path / 'missing.cfg')

    def test_frozen(self):
        config = ScenarioConfig(command='relational')
        with pytest.raises(AttributeError):
            config.seed = 1


class TestShippedScenarios:

    @pytest.mark.parametrize('path', sorted(SCENARIOS.glob('*.cfg')), ids=lambda path: path.stem)
    def test_valid(self, path):
        config = load_config(path)
        assert config.seed is not None or not config.randomized

    def test_gauge_sizes(self):
        config = load_config(SCENARIOS / 'so3_gauge.cfg')
        assert config.samples == 50
        assert config.grid == 1000
        assert config.params['flow_time'] == pytest.approx(0.1)

    def test_named_scenarios(self):
        assert load_config(SCENARIOS / 'morita_so3.cfg').scenario == 'morita-so3'
        assert load_config(SCENARIOS / 'foliation_family.cfg').scenario == 'foliation-family'
