"""Exception hierarchy shared by every package of the solver.

Every class carries the process exit code the command line reports for it.
"""


class WellSpectrumError(Exception):
    exit_code = 1


class UsageError(WellSpectrumError):
    exit_code = 2


class InvalidConfig(UsageError):
    """Non-positive half-width or mass, or non-finite couplings."""


class SingularCoupling(WellSpectrumError):
    """|mass * b| = 1: the origin matching matrix diverges."""

    exit_code = 3


class NumericDegeneracy(WellSpectrumError):
    exit_code = 4


class SingularMatrix(NumericDegeneracy):
    pass


class NoSignChange(NumericDegeneracy):
    pass


class SingularDenominator(NumericDegeneracy):
    pass


class DegenerateTransfer(NumericDegeneracy):
    """The wall transfer map needs 1/Delta and Delta vanishes (m1 = m2 = 0)."""


class DegenerateA(NumericDegeneracy):
    pass


class NotAnEigenvalue(NumericDegeneracy):
    pass


class BadNorm(NumericDegeneracy):
    pass


class NonFiniteValue(NumericDegeneracy):
    """A NaN or infinity reached a matrix entry."""
