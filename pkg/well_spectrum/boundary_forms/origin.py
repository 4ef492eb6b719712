"""Origin-side parametrization: matching matrices and the transfer M^-1 T M."""
from dataclasses import dataclass

from model import is_singular_coupling
from numerics import Mat2, mat_mul
from utils.errors import InvalidConfig, SingularCoupling, SingularDenominator

DENOMINATOR_TOL = 1e-14


@dataclass(frozen=True)
class TDecomposition:
    t1: float
    t2: float


def build_T(p, mass):
    """Matching matrix of the a*delta + b*delta' interaction, with its (t1, t2)."""
    if is_singular_coupling(p, mass):
        raise SingularCoupling(f"|mass*b| = 1 (mass={mass!r}, b={p.b!r}): T diverges")
    mb = mass * p.b
    ma = mass * p.a
    t1 = (1.0 + mb) / (1.0 - mb)
    t2 = -2.0 * ma / (1.0 - mb * mb)
    T = Mat2(t1, 0.0, t2, (1.0 - mb) / (1.0 + mb))
    return T, TDecomposition(t1, t2)


def matching_matrix_general(g, printed=False):
    """Four-parameter matching matrix at the origin.

    The (2,1) entry is -4 x1 / den by default, which puts the x1 axis on the
    orientation of T so that (2ma, 2mb, 0, 0) reproduces ``build_T``. With
    ``printed=True`` the entry carries the literal +4 x1 of the general form.
    """
    x1, x2, x3, x4 = g.x1, g.x2, g.x3, g.x4
    den = (2.0 - 1j * x3) ** 2 + x1 * x4 - x2 * x2
    scale = 4.0 + x3 * x3 + abs(x1 * x4) + x2 * x2
    if abs(den) <= DENOMINATOR_TOL * scale:
        raise SingularDenominator(f"matching denominator {den!r} vanishes for {g!r}")
    sign = 1.0 if printed else -1.0
    return Mat2(
        ((2.0 + x2) ** 2 - x1 * x4 + x3 * x3) / den,
        -4.0 * x4 / den,
        sign * 4.0 * x1 / den,
        ((2.0 - x2) ** 2 - x1 * x4 + x3 * x3) / den,
    )


def m_matrix(k):
    return Mat2(1.0, 1.0, 1j * k, -1j * k)


def m_inverse(k):
    return Mat2(1j * k, 1.0, 1j * k, -1.0).scale(1.0 / (2j * k))


def origin_transfer(p, mass, k):
    """M^-1 T M, mapping (D, C) to (A, B) across the origin."""
    if not k > 0.0:
        raise InvalidConfig(f"wavenumber must be positive, got {k!r}")
    T, _ = build_T(p, mass)
    return mat_mul(m_inverse(k), mat_mul(T, m_matrix(k)))
