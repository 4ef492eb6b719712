import math

from model.records import ExtensionParams, GeneralMatchingParams
from utils.errors import BadNorm, InvalidConfig, SingularCoupling

COUPLING_TOL = 1e-12
NORM_TOL = 1e-9


def is_singular_coupling(p, mass, tol=COUPLING_TOL):
    return abs(abs(mass * p.b) - 1.0) <= tol


def validate_matching(p, cfg):
    """Check a coupling pair for the matching-matrix paths.

    The quantization-condition spectrum stays defined at |mass*b| = 1, so callers on that path
    do not run this check.
    """
    cfg.validate()
    if not (math.isfinite(p.a) and math.isfinite(p.b)):
        raise InvalidConfig(f"couplings must be finite, got a={p.a!r}, b={p.b!r}")
    if is_singular_coupling(p, cfg.mass):
        raise SingularCoupling(
            f"|mass*b| = 1 (mass={cfg.mass!r}, b={p.b!r}): the origin matching matrix diverges"
        )


def canonicalize_extension(phi, m, tol=NORM_TOL):
    """Bring (phi, m) to phi in [0, pi) with the same U matrix.

    Uses U(phi + pi, m) = U(phi, -m) and U(phi + 2 pi, m) = U(phi, m), then
    renormalizes m to unit length.
    """
    m = tuple(float(v) for v in m)
    if len(m) != 4:
        raise ValueError(f"expected four m components, got {len(m)}")
    norm = math.sqrt(sum(v * v for v in m))
    if abs(norm - 1.0) > tol:
        raise BadNorm(f"|m| = {norm!r} deviates from 1 by more than {tol:g}")
    m = tuple(v / norm for v in m)
    phi = math.fmod(float(phi), 2.0 * math.pi)
    if phi < 0.0:
        phi += 2.0 * math.pi
    # a tiny negative phi rounds to exactly 2*pi above, hence the loop
    while phi >= math.pi:
        phi -= math.pi
        m = tuple(-v for v in m)
    return ExtensionParams(phi, *m)


def general_from_matching(p, mass):
    return GeneralMatchingParams(2.0 * mass * p.a, 2.0 * mass * p.b, 0.0, 0.0)
