"""Wall-side parametrization: the U(2) matrix and the plane-wave transfer R^-1 V.

With psi_1 = D e^{ikx} + C e^{-ikx} left of the origin and
psi_2 = A e^{ikx} + B e^{-ikx} right of it, the wall condition reads
R (A, B) = V (D, C) with alpha = 2ck + 1, beta = 2ck - 1.
"""
import cmath
from dataclasses import dataclass

from numerics import Mat2, mat_mul
from utils.errors import DegenerateTransfer, InvalidConfig

DELTA_REL_TOL = 1e-12


def build_U(ext):
    phase = cmath.exp(1j * ext.phi)
    return Mat2(
        phase * complex(ext.m0, -ext.m3),
        phase * complex(-ext.m2, -ext.m1),
        phase * complex(ext.m2, -ext.m1),
        phase * complex(ext.m0, ext.m3),
    )


@dataclass(frozen=True)
class RVAssembly:
    R: Mat2
    V: Mat2
    delta: complex
    U: Mat2
    alpha: float
    beta: float
    k: float
    c: float


def _check_k(k):
    if not k > 0.0:
        raise InvalidConfig(f"wavenumber must be positive, got {k!r}")


def assemble_RV(ext, cfg, k):
    _check_k(k)
    U = build_U(ext)
    alpha = 2.0 * cfg.c * k + 1.0
    beta = 2.0 * cfg.c * k - 1.0
    e_plus = cmath.exp(1j * k * cfg.c)
    e_minus = cmath.exp(-1j * k * cfg.c)
    R = Mat2(
        U.a12 * beta * e_plus,
        -U.a12 * alpha * e_minus,
        (alpha - U.a22 * beta) * e_plus,
        -(beta - U.a22 * alpha) * e_minus,
    )
    V = Mat2(
        (beta - U.a11 * alpha) * e_minus,
        -(alpha - U.a11 * beta) * e_plus,
        U.a21 * alpha * e_minus,
        -U.a21 * beta * e_plus,
    )
    delta = U.a12 * (alpha * alpha - beta * beta)
    return RVAssembly(R=R, V=V, delta=delta, U=U, alpha=alpha, beta=beta, k=k, c=cfg.c)


def delta_closed_form(ext, cfg, k):
    return -8.0 * cfg.c * k * complex(ext.m2, ext.m1) * cmath.exp(1j * ext.phi)


def delta_tolerance(cfg, k):
    # |Delta| <= 8ck for a unit m-vector
    return DELTA_REL_TOL * 8.0 * cfg.c * k


def _r_inverse(rv):
    if rv.delta == 0.0:
        raise DegenerateTransfer("Delta = 0 (m1 = m2 = 0): R is not invertible")
    U, alpha, beta = rv.U, rv.alpha, rv.beta
    e_plus = cmath.exp(1j * rv.k * rv.c)
    e_minus = cmath.exp(-1j * rv.k * rv.c)
    inv = Mat2(
        -(beta - U.a22 * alpha) * e_minus,
        U.a12 * alpha * e_minus,
        -(alpha - U.a22 * beta) * e_plus,
        U.a12 * beta * e_plus,
    )
    return inv.scale(1.0 / rv.delta)


def r_inverse_closed_form(ext, cfg, k):
    return _r_inverse(assemble_RV(ext, cfg, k))


def wall_transfer(ext, cfg, k, delta_tol=None):
    """R^-1 V, mapping (D, C) to (A, B) through the walls.

    Raises:
        DegenerateTransfer: when |Delta| is below ``delta_tol`` (default
            1e-12 * 8ck); the map does not exist for m1 = m2 = 0.
    """
    rv = assemble_RV(ext, cfg, k)
    tol = delta_tolerance(cfg, k) if delta_tol is None else delta_tol
    if abs(rv.delta) <= tol:
        raise DegenerateTransfer(
            f"|Delta| = {abs(rv.delta):.3e} below {tol:.3e}: extension has m1 = m2 = 0"
        )
    return mat_mul(_r_inverse(rv), rv.V)


def wall_condition_residual(ext, cfg, coeffs):
    """Largest mismatch of the wall condition for plane-wave coefficients.

    ``coeffs`` needs attributes A, B, C, D and k (spectrum.Coefficients).
    """
    k = coeffs.k
    rv = assemble_RV(ext, cfg, k)
    alpha, beta = rv.alpha, rv.beta
    e_plus = cmath.exp(1j * k * cfg.c)
    e_minus = cmath.exp(-1j * k * cfg.c)
    A, B, C, D = coeffs.A, coeffs.B, coeffs.C, coeffs.D
    lhs = (D * beta * e_minus - C * alpha * e_plus, A * alpha * e_plus - B * beta * e_minus)
    rhs = rv.U.apply(
        (D * alpha * e_minus - C * beta * e_plus, A * beta * e_plus - B * alpha * e_minus)
    )
    return max(abs(lhs[0] - rhs[0]), abs(lhs[1] - rhs[1]))
