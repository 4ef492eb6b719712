from .errors import *
from .logger import get_logger, get_module_logger
from .registry import Registry
from .util import create_dir, load_config, format_float, format_complex, DEFAULT_CONFIG
