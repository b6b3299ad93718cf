from .decorators import add_default_repr
from .logger_setup import setup_logger, setup_default_logger
from .utils import (
    CSV_FLOAT_FORMAT,
    load_config_file,
    parallel_map,
    recursive_dict_update,
    uniform_time_grid,
    write_csv,
)

__version__ = "0.1.0"
__description__ = "Logging, configuration and file helpers."
__all__ = [f for f in dir() if not f.startswith("_")]
