"""Value records for the well, both parametrizations and the computed levels.

Units follow hbar = 1. Only the products mass*a, mass*b and c*k enter any formula.
"""
import math
from dataclasses import dataclass
from typing import Optional

from utils.errors import InvalidConfig


@dataclass(frozen=True)
class WellConfig:
    c: float
    mass: float = 0.5

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise InvalidConfig(f"half-width c must be positive and finite, got {self.c!r}")
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise InvalidConfig(f"mass must be positive and finite, got {self.mass!r}")


@dataclass(frozen=True)
class MatchingParams:
    """Couplings of the a*delta(x) + b*delta'(x) perturbation."""

    a: float
    b: float

    def ma(self, mass):
        return mass * self.a

    def mb(self, mass):
        return mass * self.b


@dataclass(frozen=True)
class ExtensionParams:
    """Wall-side U(2) parameters (phi, m0, m1, m2, m3).

    Normalization is not enforced here: the parameter chain builds records away
    from the roots, where the printed formulas leave the 4-vector off the unit
    sphere. ``norm_residual`` reports by how much.
    """

    phi: float
    m0: float
    m1: float
    m2: float
    m3: float

    @property
    def m(self):
        return (self.m0, self.m1, self.m2, self.m3)

    @property
    def norm_residual(self):
        return abs(sum(v * v for v in self.m) - 1.0)


@dataclass(frozen=True)
class GeneralMatchingParams:
    x1: float
    x2: float
    x3: float
    x4: float


@dataclass(frozen=True)
class SpectralLevel:
    n: int
    k: float
    energy: float

    def unperturbed_k(self, c):
        return self.n * math.pi / (2.0 * c)

    def shift(self, c):
        return self.k - self.unperturbed_k(c)


@dataclass(frozen=True)
class EquationRecord:
    """One printed equation evaluated numerically: |lhs - rhs| is the residual.

    ``residual`` is None when the equation is undefined at the evaluation point
    (a vanishing printed denominator).
    """

    eq: int
    lhs: Optional[complex]
    rhs: Optional[complex]
    residual: Optional[float]
    note: str = ""

    @classmethod
    def compare(cls, eq, lhs, rhs, note=""):
        return cls(eq, complex(lhs), complex(rhs), abs(complex(lhs) - complex(rhs)), note)

    @property
    def defined(self):
        return self.residual is not None
