import math
from dataclasses import dataclass
from typing import Optional, Tuple

from param_map.chain import chain_terms, m_params_at

UNDEFINED_TOL = 1e-12
SIGN_TOL = 1e-12


@dataclass(frozen=True)
class PhiVariant:
    eq: int
    value: Optional[float]
    cos_sign_consistent: Optional[bool]

    @property
    def defined(self):
        return self.value is not None


@dataclass(frozen=True)
class PhiVariants:
    phi_arccos: float
    variants: Tuple[PhiVariant, ...]

    def get(self, eq):
        for variant in self.variants:
            if variant.eq == eq:
                return variant
        raise KeyError(eq)

    @property
    def phi_eq59(self):
        return self.get(59).value

    @property
    def phi_eq64(self):
        return self.get(64).value

    @property
    def phi_eq65(self):
        return self.get(65).value


def _from_tangent(eq, num, den, cos_phi):
    if abs(den) <= UNDEFINED_TOL * max(1.0, abs(num)):
        return PhiVariant(eq, None, None)
    phi = math.fmod(math.atan(num / den), math.pi)
    if phi < 0.0:
        phi += math.pi
    if phi >= math.pi:
        phi = 0.0
    variant_cos = math.cos(phi)
    if abs(variant_cos) <= SIGN_TOL or abs(cos_phi) <= SIGN_TOL:
        consistent = True
    else:
        consistent = (variant_cos > 0.0) == (cos_phi > 0.0)
    return PhiVariant(eq, phi, consistent)


def phi_variants(p, cfg, k):
    """phi from the arccos definition and from the three tangent formulas.

    Each tangent is mapped to [0, pi); a vanishing denominator marks the
    variant undefined instead of raising.
    """
    sol = m_params_at(p, cfg, k)
    t = chain_terms(p, cfg, k)
    ck8 = 8.0 * cfg.c * k
    two_ck = 2.0 * cfg.c * k
    s, co = math.sin(two_ck), math.cos(two_ck)
    variants = (
        _from_tangent(59, -ck8 * t.R, t.N1, sol.cos_phi),
        _from_tangent(64, -ck8 * t.R, (t.p - 1.0) * t.mu, sol.cos_phi),
        _from_tangent(65, ck8 * (co - s * s), s * (t.p - 1.0), sol.cos_phi),
    )
    return PhiVariants(sol.ext.phi, variants)
