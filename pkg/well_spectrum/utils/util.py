import math
import os
import os.path as osp

import yaml

from utils.errors import UsageError

CONFIG_DIR = osp.join(osp.dirname(osp.dirname(osp.abspath(__file__))), "configs")
DEFAULT_CONFIG = osp.join(CONFIG_DIR, "figure1.yaml")


def create_dir(dir_path):
    if dir_path and not osp.exists(dir_path):
        os.makedirs(dir_path)


def load_config(path=None):
    path = DEFAULT_CONFIG if path is None else path
    if not osp.isfile(path):
        raise UsageError(f"config file not found: {path}")
    with open(path, "r") as fp:
        cfg = yaml.load(fp, Loader=yaml.FullLoader)
    if not isinstance(cfg, dict):
        raise UsageError(f"config file {path} does not hold a mapping")
    return cfg


def format_float(value):
    """Shortest round-trip representation; stable across runs."""
    if value is None:
        return ""
    return repr(float(value))


def format_complex(value):
    value = complex(value)
    sign = "-" if math.copysign(1.0, value.imag) < 0.0 else "+"
    return f"{format_float(value.real)}{sign}{format_float(abs(value.imag))}j"
