import argparse
import math
from dataclasses import dataclass
from typing import Optional

from model import MatchingParams, WellConfig
from utils.errors import InvalidConfig, UsageError
from utils.util import load_config

VERBS = ("spectrum", "params", "audit", "compare", "figure1")
FORMATS = ("csv", "json")
SWEEP_VARIABLES = ("a", "b")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _as_int(value, name):
    # YAML gives 2.5 as a float; int() would truncate it
    if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
        raise UsageError(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class SweepSpec:
    variable: str = "a"
    start: float = 0.0
    stop: float = 10.0
    steps: int = 101

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise UsageError(f"sweep variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise UsageError("sweep bounds must be finite")
        if self.start > self.stop:
            raise UsageError(f"sweep start {self.start!r} exceeds stop {self.stop!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise UsageError(f"sweep needs at least 2 steps, got {self.steps!r}")


@dataclass(frozen=True)
class Command:
    verb: str
    a: float
    b: float
    c: float = 2.5
    mass: float = 0.5
    levels: int = 3
    fmt: str = "csv"
    output: Optional[str] = None
    k: Optional[float] = None
    sweep: SweepSpec = SweepSpec()
    workers: int = 1
    log_level: str = "INFO"
    root_tol: float = 1e-13

    def __post_init__(self):
        if self.verb not in VERBS:
            raise UsageError(f"unknown command {self.verb!r}")
        for name in ("a", "b", "c", "mass", "root_tol"):
            if not math.isfinite(getattr(self, name)):
                raise UsageError(f"--{name} must be finite")
        if self.k is not None and not (math.isfinite(self.k) and self.k > 0.0):
            raise UsageError(f"--k must be positive and finite, got {self.k!r}")
        if int(self.levels) != self.levels or self.levels < 1:
            raise UsageError(f"--levels must be at least 1, got {self.levels!r}")
        if self.fmt not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}, got {self.fmt!r}")
        if self.workers < 1:
            raise UsageError(f"--workers must be at least 1, got {self.workers!r}")
        if self.log_level not in LOG_LEVELS:
            raise UsageError(f"--log-level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        self.well.validate()

    @property
    def well(self):
        return WellConfig(self.c, self.mass)

    @property
    def matching(self):
        return MatchingParams(self.a, self.b)


def build_parser():
    parser = _Parser(prog="well_spectrum", description="Spectrum of the delta/delta' well")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--config", type=str, default=None, help="YAML configuration file")
    parser.add_argument("--a", type=float, default=None, help="delta coupling")
    parser.add_argument("--b", type=float, default=None, help="delta' coupling")
    parser.add_argument("--c", type=float, default=None, help="well half-width")
    parser.add_argument("--mass", type=float, default=None)
    parser.add_argument("--levels", type=int, default=None)
    parser.add_argument("--k", type=float, default=None, help="audit wavenumber")
    parser.add_argument("--sweep-var", type=str, choices=SWEEP_VARIABLES, default=None)
    parser.add_argument("--sweep-start", type=float, default=None)
    parser.add_argument("--sweep-stop", type=float, default=None)
    parser.add_argument("--sweep-steps", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--format", type=str, choices=FORMATS, default=None)
    parser.add_argument("--output", type=str, default=None, help="output file, stdout if unset")
    parser.add_argument("--log-level", type=str, default=None)
    return parser


def parse_args(argv):
    """Command line merged over the YAML defaults.

    Raises:
        UsageError: unknown flags, bad values or an unreadable config file.
    """
    args = build_parser().parse_args(list(argv))
    opt = load_config(args.config)
    # flags override YAML only when given
    opt.update({key: value for key, value in vars(args).items() if value is not None})

    sweep_cfg = dict(opt.get("sweep") or {})
    for flag, key in (
        ("sweep_var", "variable"),
        ("sweep_start", "start"),
        ("sweep_stop", "stop"),
        ("sweep_steps", "steps"),
    ):
        if opt.get(flag) is not None:
            sweep_cfg[key] = opt[flag]

    try:
        sweep = SweepSpec(
            variable=str(sweep_cfg.get("variable", "a")),
            start=float(sweep_cfg.get("start", 0.0)),
            stop=float(sweep_cfg.get("stop", 10.0)),
            steps=_as_int(sweep_cfg.get("steps", 101), "sweep steps"),
        )
        return Command(
            verb=opt["verb"],
            a=float(opt.get("a", 4.0)),
            b=float(opt.get("b", 2.0)),
            c=float(opt.get("c", 2.5)),
            mass=float(opt.get("mass", 0.5)),
            levels=_as_int(opt.get("levels", 3), "levels"),
            fmt=str(opt.get("format", "csv")),
            output=opt.get("output"),
            k=None if opt.get("k") is None else float(opt["k"]),
            sweep=sweep,
            workers=_as_int(opt.get("workers", 1), "workers"),
            log_level=str(opt.get("log_level", "INFO")).upper(),
            root_tol=float(opt.get("root_tol", 1e-13)),
        )
    except InvalidConfig:
        raise
    except (TypeError, ValueError) as e:
        raise UsageError(f"bad configuration value: {e}") from e
