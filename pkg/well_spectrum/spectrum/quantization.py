"""Levels of the well from the transcendental quantization condition Q(k) = 0.

Q(k) = k (1 + m^2 b^2) sin 2ck + ma cos 2ck. On every cell
((n-1) pi / 2c, n pi / 2c) the endpoint values are ma (-1)^(n-1) and ma (-1)^n,
so for a != 0 each cell brackets exactly one root and no scanning is needed.
"""
import math
from dataclasses import dataclass

from model import SpectralLevel
from numerics import DEFAULT_TOL, bracketed_root
from utils.errors import InvalidConfig
from utils.logger import get_module_logger

logger = get_module_logger("spectrum")


@dataclass(frozen=True)
class QuantizationFn:
    a: float
    b: float
    mass: float
    c: float

    @classmethod
    def from_params(cls, p, cfg):
        return cls(p.a, p.b, cfg.mass, cfg.c)

    @property
    def ma(self):
        return self.mass * self.a

    @property
    def mb(self):
        return self.mass * self.b

    def __call__(self, k):
        two_ck = 2.0 * self.c * k
        return k * (1.0 + self.mb * self.mb) * math.sin(two_ck) + self.ma * math.cos(two_ck)

    def cell(self, n):
        step = math.pi / (2.0 * self.c)
        return (n - 1) * step, n * step

    def endpoint_value(self, n):
        """Exact Q at the cell boundary n pi / (2c)."""
        return self.ma if n % 2 == 0 else -self.ma


def q_eval(p, cfg, k):
    return QuantizationFn.from_params(p, cfg)(k)


def check_levels(n_max):
    if int(n_max) != n_max or n_max < 1:
        raise InvalidConfig(f"number of levels must be a positive integer, got {n_max!r}")
    return int(n_max)


def _level(n, k, mass):
    return SpectralLevel(n, k, k * k / (2.0 * mass))


def unperturbed_levels(cfg, n_max):
    n_max = check_levels(n_max)
    return [_level(n, n * math.pi / (2.0 * cfg.c), cfg.mass) for n in range(1, n_max + 1)]


def find_levels(p, cfg, n_max, tol=DEFAULT_TOL):
    """First ``n_max`` positive roots of Q, one per cell.

    Defined for every coupling, including |mass * b| = 1.
    """
    n_max = check_levels(n_max)
    q = QuantizationFn.from_params(p, cfg)
    if q.ma == 0.0:
        return unperturbed_levels(cfg, n_max)

    levels = []
    for n in range(1, n_max + 1):
        lo, hi = q.cell(n)
        k = bracketed_root(q, lo, hi, tol=tol, f_lo=q.endpoint_value(n - 1), f_hi=q.endpoint_value(n))
        levels.append(_level(n, k, cfg.mass))
    logger.debug(f"a={p.a} b={p.b}: {n_max} levels, k1={levels[0].k!r}")
    return levels


def level_shifts(p, cfg, n_max):
    """Rows (n, k_n, n pi / 2c, k_n - n pi / 2c)."""
    return [
        (lvl.n, lvl.k, lvl.unperturbed_k(cfg.c), lvl.shift(cfg.c))
        for lvl in find_levels(p, cfg, n_max)
    ]
