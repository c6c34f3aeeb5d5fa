"""
Scenario files.

A scenario file is a JSON document (extension ``.cfg``)::

    {
        "command": "check-structure",
        "structure": {"constructor": "linear-direct-sum", "params": {"algebra": "so3", "r": 2}},
        "samples": 100,
        "seed": 7
    }

Keys not listed in :data:`KEYS` are rejected. Command-line flags override
values read from the file.
"""
import dataclasses
import logging
import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional

from ..structures import Constructor
from ..utils import exceptions, json
from ..utils.helper import HelperMode, Item, OrderedHelper
from ..utils.tolerances import DEFAULT, Tolerances

log = logging.getLogger(__name__)


class Command(OrderedHelper):
    mode = HelperMode.kebab_case

    CHECK_STRUCTURE = Item()  # check-structure
    CLASSIFY = Item()  # classify
    FOLIATION = Item()  # foliation
    REDUCE = Item()  # reduce
    MORITA = Item()  # morita
    INTEGRATE_PATH = Item()  # integrate-path
    GAUGE_DEMO = Item()  # gauge-demo
    RELATIONAL = Item()  # relational
    INFO = Item()  # info


#: commands that draw random numbers and therefore need a seed
RANDOMIZED = (
    Command.CHECK_STRUCTURE,
    Command.CLASSIFY,
    Command.FOLIATION,
    Command.REDUCE,
    Command.MORITA,
    Command.GAUGE_DEMO,
)

#: relational scenarios that draw random numbers
RANDOMIZED_SCENARIOS = ('relational-random',)


@dataclass(frozen=True)
class ScenarioConfig:
    command: str
    scenario: str = ''
    #: {"constructor": ..., "params": {...}}
    structure: Optional[Dict[str, Any]] = None
    #: command-specific parameters
    params: Dict[str, Any] = field(default_factory=dict)
    samples: int = 100
    grid: int = 1000
    seed: Optional[int] = None
    fd_step: float = DEFAULT.fd_step
    tolerance_scale: float = 1.0
    #: individual overrides of :class:`Tolerances` fields
    tolerances: Dict[str, float] = field(default_factory=dict)
    out: Optional[str] = None

    @property
    def randomized(self) -> bool:
        return self.command in RANDOMIZED or self.scenario in RANDOMIZED_SCENARIOS

    def build_tolerances(self) -> Tolerances:
        try:
            tolerances = DEFAULT.replace(**self.tolerances)
        except KeyError as e:
            raise exceptions.ConfigError(f"Unknown tolerance fields: {e}")
        try:
            return tolerances.scaled(self.tolerance_scale)
        except ValueError as e:
            raise exceptions.ConfigError(str(e))

    def override(self, **values) -> 'ScenarioConfig':
        """
        Copy with the given values, ``None`` values are ignored
        """
        values = {key: value for key, value in values.items() if value is not None}
        return validate(dataclasses.replace(self, **values))


KEYS = tuple(item.name for item in dataclasses.fields(ScenarioConfig))


def _positive(config: ScenarioConfig, name: str):
    value = getattr(config, name)
    if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
        raise exceptions.ConfigError(f"{name!r} must be a positive number, got {value!r}")


def validate(config: ScenarioConfig) -> ScenarioConfig:
    """
    :raise ConfigError:
    """
    if not Command.check(config.command):
        raise exceptions.ConfigError(f"Unknown command {config.command!r}, expected one of {Command.all()}")
    for name in ('samples', 'grid', 'fd_step', 'tolerance_scale'):
        _positive(config, name)
    if not isinstance(config.samples, int) or not isinstance(config.grid, int):
        raise exceptions.ConfigError('"samples" and "grid" must be integers')
    if config.seed is not None and (not isinstance(config.seed, int) or not 0 <= config.seed < 2 ** 64):
        raise exceptions.ConfigError(f"Seed must be an unsigned 64-bit integer, got {config.seed!r}")
    if config.randomized and config.seed is None:
        raise exceptions.ConfigError(f"Command {config.command!r} is randomized and needs a seed")
    if config.structure is not None:
        if not isinstance(config.structure, Mapping) or 'constructor' not in config.structure:
            raise exceptions.ConfigError('"structure" needs a "constructor" key')
        unknown = set(config.structure) - {'constructor', 'params'}
        if unknown:
            raise exceptions.ConfigError(f"Unknown structure keys: {', '.join(sorted(unknown))}")
        if not Constructor.check(config.structure['constructor']):
            raise exceptions.ConfigError(f"Unknown constructor {config.structure['constructor']!r}, "
                                         f"expected one of {Constructor.all()}")
    if not isinstance(config.params, Mapping):
        raise exceptions.ConfigError('"params" must be an object')
    config.build_tolerances()
    return config


def from_mapping(data: Mapping[str, Any]) -> ScenarioConfig:
    """
    :raise ConfigError: on unknown keys or invalid values
    """
    if not isinstance(data, Mapping):
        raise exceptions.ConfigError('Scenario must be a JSON object')
    unknown = set(data) - set(KEYS)
    if unknown:
        raise exceptions.ConfigError(f"Unknown scenario keys: {', '.join(sorted(unknown))}")
    if 'command' not in data:
        raise exceptions.ConfigError('Scenario needs a "command"')
    return validate(ScenarioConfig(**data))


def loads_config(text: str) -> ScenarioConfig:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise exceptions.ConfigError(f"Scenario is not valid JSON: {e}")
    return from_mapping(data)


def load_config(path) -> ScenarioConfig:
    path = pathlib.Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise exceptions.ConfigError(f"Can't read scenario {path}: {e}")
    log.debug("Loaded scenario %s", path)
    return loads_config(text)
