import math

import pytest

from boundary_forms import build_U
from model import (
    EquationRecord,
    ExtensionParams,
    MatchingParams,
    SpectralLevel,
    WellConfig,
    canonicalize_extension,
    general_from_matching,
    validate_matching,
)
from numerics import mat_sub, max_abs_entry
from utils.errors import BadNorm, InvalidConfig, SingularCoupling


@pytest.mark.parametrize("c, mass", [(0.0, 0.5), (-1.0, 0.5), (1.0, 0.0), (float("inf"), 1.0)])
def test_well_config_rejects(c, mass) -> None:
    with pytest.raises(InvalidConfig):
        WellConfig(c, mass)


def test_validate_matching() -> None:
    cfg = WellConfig(2.5, 0.5)
    validate_matching(MatchingParams(4.0, 1.0), cfg)
    with pytest.raises(SingularCoupling):
        validate_matching(MatchingParams(4.0, 2.0), cfg)
    with pytest.raises(SingularCoupling):
        validate_matching(MatchingParams(4.0, -2.0), cfg)
    with pytest.raises(InvalidConfig):
        validate_matching(MatchingParams(float("nan"), 0.0), cfg)


def test_canonicalize_extension_shifts_phi() -> None:
    ext = canonicalize_extension(math.pi + 0.5, (0.0, 1.0, 0.0, 0.0))
    assert ext.phi == pytest.approx(0.5)
    assert ext.m == pytest.approx((0.0, -1.0, 0.0, 0.0))

    ext = canonicalize_extension(-0.5, (0.6, 0.8, 0.0, 0.0))
    assert ext.phi == pytest.approx(math.pi - 0.5)
    assert ext.m == pytest.approx((-0.6, -0.8, 0.0, 0.0))

    ext = canonicalize_extension(2.0 * math.pi, (1.0, 0.0, 0.0, 0.0))
    assert 0.0 <= ext.phi < math.pi


def test_canonicalize_extension_bad_norm() -> None:
    with pytest.raises(BadNorm):
        canonicalize_extension(0.0, (1.0, 1.0, 0.0, 0.0))


@pytest.mark.parametrize(
    "phi, m",
    [
        (3.0 * math.pi / 2, (0.6, 0.0, 0.8, 0.0)),
        (-0.5, (0.5, 0.5, 0.5, 0.5)),
        (7.0, (0.0, 0.6, 0.0, -0.8)),
        (1.0, (0.0, 1.0, 0.0, 0.0)),
    ],
)
def test_canonicalize_extension_keeps_U(phi, m) -> None:
    ext = canonicalize_extension(phi, m)
    again = canonicalize_extension(ext.phi, ext.m)
    assert again.phi == pytest.approx(ext.phi, abs=1e-15)
    assert again.m == pytest.approx(ext.m, abs=1e-15)
    before = build_U(ExtensionParams(phi, *m))
    assert max_abs_entry(mat_sub(build_U(ext), before)) <= 1e-13


def test_norm_residual() -> None:
    assert ExtensionParams(0.0, 1.0, 1.0, 0.0, 0.0).norm_residual == pytest.approx(1.0)
    assert ExtensionParams(0.3, 0.6, 0.0, 0.0, 0.8).norm_residual < 1e-12


def test_general_from_matching() -> None:
    g = general_from_matching(MatchingParams(4.0, 1.0), 0.5)
    assert (g.x1, g.x2, g.x3, g.x4) == (4.0, 1.0, 0.0, 0.0)


def test_spectral_level_shift() -> None:
    lvl = SpectralLevel(2, 1.5, 1.5**2)
    assert lvl.unperturbed_k(1.0) == pytest.approx(math.pi)
    assert lvl.shift(1.0) == pytest.approx(1.5 - math.pi)


def test_equation_record_compare() -> None:
    rec = EquationRecord.compare(43, 1j, 1j + 3.0)
    assert rec.residual == pytest.approx(3.0)
    assert rec.defined
    assert not EquationRecord(64, None, 1.0, None).defined
