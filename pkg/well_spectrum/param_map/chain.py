"""Wall parameters (phi, m0, m1, m2, m3) that reproduce the delta/delta' matching at one k.

Shorthands used throughout the package, with mu = ma, D = 1 - m^2 b^2,
K = k (1 + m^2 b^2) and p = 4 c^2 k^2:

    Q  = K sin 2ck + mu cos 2ck
    R  = K cos 2ck - mu sin 2ck
    N1 = (p - 1) mu + 2 (p + 1) Q
    N0 = (p + 1) mu + 2 (p - 1) Q
    A  = 16 c^2 R^2 + N1^2 / k^2
"""
import math
from dataclasses import dataclass, field
from typing import Dict

from model import ExtensionParams, validate_matching
from spectrum import find_levels
from utils.errors import DegenerateA, InvalidConfig
from utils.logger import get_module_logger

logger = get_module_logger("param_map")

DEGENERATE_A_TOL = 1e-14
CLAMP_WARN = 1e-9


@dataclass(frozen=True)
class ChainTerms:
    mu: float
    mb: float
    den: float
    K: float
    p: float
    Q: float
    R: float
    N1: float
    N0: float
    A: float


def chain_terms(p, cfg, k):
    mu = cfg.mass * p.a
    mb = cfg.mass * p.b
    c = cfg.c
    den = 1.0 - mb * mb
    K = k * (1.0 + mb * mb)
    four_c2k2 = 4.0 * c * c * k * k
    s, co = math.sin(2.0 * c * k), math.cos(2.0 * c * k)
    Q = K * s + mu * co
    R = K * co - mu * s
    N1 = (four_c2k2 - 1.0) * mu + 2.0 * (four_c2k2 + 1.0) * Q
    N0 = (four_c2k2 + 1.0) * mu + 2.0 * (four_c2k2 - 1.0) * Q
    # float ** raises on overflow where * gives inf
    n1_k = N1 / k
    A = 16.0 * c * c * R * R + n1_k * n1_k
    return ChainTerms(mu, mb, den, K, four_c2k2, Q, R, N1, N0, A)


@dataclass(frozen=True)
class ParamSolution:
    ext: ExtensionParams
    A_value: float
    S_value: float
    R_value: float
    Q_value: float
    cos_phi: float
    clamp: float = 0.0
    diagnostics: Dict[str, str] = field(default_factory=dict)


def m_params_at(p, cfg, k):
    """Parameter chain at wavenumber ``k``.

    m2 = 0; m1 = 4ck D / sqrt(A) (positive root); m3 = 2 mb m1 / D;
    m0 = -N0 m1 / (4 c k^2 D); cos(phi) = -N1 m1 / (4 c k^2 D), clamped to
    [-1, 1] so that phi lies in [0, pi].

    Raises:
        SingularCoupling: |mass * b| = 1.
        DegenerateA: A vanishes or overflows and m1 is undefined.
    """
    validate_matching(p, cfg)
    if not (math.isfinite(k) and k > 0.0):
        raise InvalidConfig(f"wavenumber must be positive, got {k!r}")
    t = chain_terms(p, cfg, k)
    c = cfg.c
    scale = 16.0 * c * c * (t.K * t.K + t.mu * t.mu)
    if not math.isfinite(t.A) or t.A <= DEGENERATE_A_TOL * scale:
        raise DegenerateA(f"A = {t.A!r} vanishes or overflows at k={k!r}")
    # k sqrt(A) = 4 c k^2 D / m1, which keeps k^2 out of the denominators
    k_root_A = k * math.sqrt(t.A)
    if not (math.isfinite(k_root_A) and k_root_A > 0.0):
        raise DegenerateA(f"k sqrt(A) = {k_root_A!r} at k={k!r}")

    m1 = 4.0 * c * k * t.den / math.sqrt(t.A)
    m3 = 2.0 * t.mb * m1 / t.den
    m0 = -t.N0 / k_root_A
    cos_raw = -t.N1 / k_root_A
    if not all(math.isfinite(v) for v in (m0, m1, m3, cos_raw)):
        raise DegenerateA(f"parameter chain is not finite at k={k!r}")
    cos_phi = min(1.0, max(-1.0, cos_raw))
    clamp = abs(cos_raw - cos_phi)
    if clamp > CLAMP_WARN:
        logger.warning(f"cos(phi) = {cos_raw!r} clamped to [-1, 1] at k={k!r}")

    diagnostics = {
        "m1_sign": "positive" if m1 > 0.0 else "negative",
        "phi_branch": "arccos",
        "sqrt_branch": "positive",
    }
    ext = ExtensionParams(math.acos(cos_phi), m0, m1, 0.0, m3)
    return ParamSolution(
        ext=ext,
        A_value=t.A,
        S_value=t.N1,
        R_value=t.R,
        Q_value=t.Q,
        cos_phi=cos_raw,
        clamp=clamp,
        diagnostics=diagnostics,
    )


def normalization_residual(sol):
    """|m0^2 + m1^2 + m2^2 + m3^2 - 1| of a ParamSolution or ExtensionParams."""
    return getattr(sol, "ext", sol).norm_residual


def level_map_table(p, cfg, n_max):
    """Rows (n, k_n, m1, phi, m0, m3): the wall parameters each level needs."""
    validate_matching(p, cfg)
    rows = []
    for lvl in find_levels(p, cfg, n_max):
        ext = m_params_at(p, cfg, lvl.k).ext
        rows.append((lvl.n, lvl.k, ext.m1, ext.phi, ext.m0, ext.m3))
    return rows
