from .commands import COMMANDS, run
from .config import Command, ScenarioConfig, from_mapping, load_config, loads_config
from .info import SysInfo
from .main import main
from .report import SCHEMA, Report, write_path_table

__all__ = (
    'COMMANDS',
    'Command',
    'Report',
    'SCHEMA',
    'ScenarioConfig',
    'SysInfo',
    'from_mapping',
    'load_config',
    'loads_config',
    'main',
    'run',
    'write_path_table',
)
