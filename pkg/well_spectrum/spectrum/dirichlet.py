"""Cross-check model: hard walls psi(-c) = psi(c) = 0 with the delta/delta' matching.

The unknowns are (D, C) of psi_1 = D e^{ikx} + C e^{-ikx} on (-c, 0); the right
amplitudes follow from (A, B) = M^-1 T M (D, C). The two wall conditions form
the homogeneous system S(k) (D, C) = 0, whose determinant is 2i times a real
function of k.
"""
import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from boundary_forms import build_T, origin_transfer
from model import SpectralLevel, validate_matching
from numerics import Mat2, bracketed_root
from spectrum.quantization import check_levels, find_levels
from utils.errors import NoSignChange, NotAnEigenvalue
from utils.logger import get_module_logger

logger = get_module_logger("spectrum.dirichlet")

SCAN_STEPS_PER_CELL = 100
DIRICHLET_TOL = 1e-14
EIGEN_TOL = 1e-9


@dataclass(frozen=True)
class Coefficients:
    """Plane-wave amplitudes: psi_1 = D e^{ikx} + C e^{-ikx} left, psi_2 = A e^{ikx} + B e^{-ikx} right."""

    A: complex
    B: complex
    C: complex
    D: complex
    k: float
    c: float

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        plus, minus = np.exp(1j * self.k * x), np.exp(-1j * self.k * x)
        return np.where(x < 0.0, self.D * plus + self.C * minus, self.A * plus + self.B * minus)

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        plus, minus = np.exp(1j * self.k * x), np.exp(-1j * self.k * x)
        ik = 1j * self.k
        return np.where(
            x < 0.0, ik * (self.D * plus - self.C * minus), ik * (self.A * plus - self.B * minus)
        )

    def origin_values(self):
        """(psi(0-), psi'(0-)) and (psi(0+), psi'(0+))."""
        ik = 1j * self.k
        return (self.D + self.C, ik * (self.D - self.C)), (self.A + self.B, ik * (self.A - self.B))

    def norm(self):
        """Integral of |psi|^2 over [-c, c], in closed form."""
        k, c = self.k, self.c
        left_cross = (1.0 - cmath.exp(-2j * k * c)) / (2j * k)
        right_cross = (cmath.exp(2j * k * c) - 1.0) / (2j * k)
        left = (abs(self.D) ** 2 + abs(self.C) ** 2) * c + 2.0 * (
            self.D * self.C.conjugate() * left_cross
        ).real
        right = (abs(self.A) ** 2 + abs(self.B) ** 2) * c + 2.0 * (
            self.A * self.B.conjugate() * right_cross
        ).real
        return left + right

    def normalized(self):
        scale = 1.0 / math.sqrt(self.norm())
        return replace(self, A=self.A * scale, B=self.B * scale, C=self.C * scale, D=self.D * scale)


def dirichlet_system(p, cfg, k):
    O = origin_transfer(p, cfg.mass, k)
    e_plus = cmath.exp(1j * k * cfg.c)
    e_minus = cmath.exp(-1j * k * cfg.c)
    return Mat2(
        e_minus,
        e_plus,
        O.a11 * e_plus + O.a21 * e_minus,
        O.a12 * e_plus + O.a22 * e_minus,
    )


def _sigma_tau(p, cfg, k):
    _, td = build_T(p, cfg.mass)
    return 0.5 * (td.t1 + 1.0 / td.t1), td.t2 / (2.0 * k)


def dirichlet_determinant(p, cfg, k):
    """det S(k) times -i/2, which is real: tau (cos 2kc - 1) - sigma sin 2kc."""
    return (dirichlet_system(p, cfg, k).det() * -0.5j).real


def dirichlet_levels(p, cfg, n_max, tol=DIRICHLET_TOL):
    """First ``n_max`` roots of the Dirichlet determinant.

    Sign scan on the grid i pi / (200c), i >= 1, each sign change refined by
    ``bracketed_root``.
    """
    n_max = check_levels(n_max)
    validate_matching(p, cfg)
    step = math.pi / (2.0 * cfg.c * SCAN_STEPS_PER_CELL)
    max_steps = 2 * SCAN_STEPS_PER_CELL * (n_max + 2)

    def g(k):
        return dirichlet_determinant(p, cfg, k)

    levels = []
    k_prev, g_prev = step, g(step)
    if g_prev == 0.0:
        levels.append(SpectralLevel(1, k_prev, k_prev * k_prev / (2.0 * cfg.mass)))
    for i in range(2, max_steps + 1):
        if len(levels) == n_max:
            break
        k_cur = i * step
        g_cur = g(k_cur)
        if g_cur == 0.0:
            k = k_cur
        elif g_prev * g_cur < 0.0:
            k = bracketed_root(g, k_prev, k_cur, tol=tol, f_lo=g_prev, f_hi=g_cur)
        else:
            k_prev, g_prev = k_cur, g_cur
            continue
        levels.append(SpectralLevel(len(levels) + 1, k, k * k / (2.0 * cfg.mass)))
        k_prev, g_prev = k_cur, g_cur
    if len(levels) < n_max:
        logger.warning(f"scan found {len(levels)} of {n_max} Dirichlet roots")
        raise NoSignChange(f"only {len(levels)} of {n_max} Dirichlet roots below k={max_steps * step!r}")
    return levels


def eigenfunction(p, cfg, k):
    """Normalized eigenfunction of the Dirichlet model at a root ``k``.

    Raises:
        NotAnEigenvalue: when the determinant at ``k`` exceeds its tolerance.
    """
    validate_matching(p, cfg)
    sigma, tau = _sigma_tau(p, cfg, k)
    value = dirichlet_determinant(p, cfg, k)
    if abs(value) > EIGEN_TOL * max(1.0, abs(sigma), abs(tau)):
        raise NotAnEigenvalue(f"determinant {value!r} at k={k!r} is not zero")
    S = dirichlet_system(p, cfg, k)
    # first row of S annihilates (s12, -s11) exactly
    D, C = S.a12, -S.a11
    A, B = origin_transfer(p, cfg.mass, k).apply((D, C))
    return Coefficients(A=A, B=B, C=C, D=D, k=k, c=cfg.c).normalized()


def compare_models(p, cfg, n_max):
    """Rows (n, k from Q, k from the Dirichlet model, difference)."""
    validate_matching(p, cfg)
    quantized = find_levels(p, cfg, n_max)
    walls = dirichlet_levels(p, cfg, n_max)
    return [(q.n, q.k, w.k, q.k - w.k) for q, w in zip(quantized, walls)]
