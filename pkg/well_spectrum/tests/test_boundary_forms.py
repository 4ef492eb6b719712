import cmath
import math

import numpy as np
import pytest

from boundary_forms import (
    assemble_RV,
    build_T,
    build_U,
    consistency_residuals,
    delta_closed_form,
    m_inverse,
    m_matrix,
    matching_matrix_general,
    origin_transfer,
    r_inverse_closed_form,
    transfer_pair,
    wall_condition_residual,
    wall_transfer,
)
from model import (
    ExtensionParams,
    GeneralMatchingParams,
    MatchingParams,
    WellConfig,
    general_from_matching,
)
from numerics import Mat2, mat_det, mat_mul, mat_sub, max_abs_entry
from spectrum import Coefficients, eigenfunction
from utils.errors import DegenerateTransfer, SingularCoupling, SingularDenominator


def _random_ext(rng, min_m1=0.0):
    while True:
        m = rng.normal(size=4)
        m /= np.linalg.norm(m)
        if abs(m[1]) >= min_m1:
            return ExtensionParams(float(rng.uniform(0.0, math.pi)), *map(float, m))


def _close(x, y, tol):
    return max_abs_entry(mat_sub(x, y)) <= tol


def test_U_is_unitary_with_phase_determinant() -> None:
    rng = np.random.default_rng(2)
    for _ in range(100):
        ext = _random_ext(rng)
        U = build_U(ext)
        assert _close(mat_mul(U.dagger(), U), Mat2.identity(), 1e-12)
        assert abs(mat_det(U) - cmath.exp(2j * ext.phi)) <= 1e-12


def test_delta_and_r_inverse() -> None:
    rng = np.random.default_rng(3)
    cfg = WellConfig(1.3, 0.5)
    for _ in range(50):
        ext = _random_ext(rng, min_m1=0.2)
        k = float(rng.uniform(0.1, 6.0))
        rv = assemble_RV(ext, cfg, k)
        assert abs(rv.delta - delta_closed_form(ext, cfg, k)) <= 1e-12 * max(1.0, abs(rv.delta))
        assert abs(mat_det(rv.R) - rv.delta) <= 1e-10 * max(1.0, abs(rv.delta))
        product = mat_mul(r_inverse_closed_form(ext, cfg, k), rv.R)
        assert _close(product, Mat2.identity(), 1e-10)


def test_wall_transfer_matches_linear_solve() -> None:
    rng = np.random.default_rng(4)
    cfg = WellConfig(1.0, 1.0)
    for _ in range(50):
        ext = _random_ext(rng, min_m1=0.2)
        k = float(rng.uniform(0.1, 5.0))
        rv = assemble_RV(ext, cfg, k)
        expected = np.linalg.solve(rv.R.to_array(), rv.V.to_array())
        assert np.allclose(wall_transfer(ext, cfg, k).to_array(), expected, atol=1e-9)


def test_wall_transfer_degenerate() -> None:
    cfg = WellConfig(1.0, 0.5)
    with pytest.raises(DegenerateTransfer):
        wall_transfer(ExtensionParams(0.3, 1.0, 0.0, 0.0, 0.0), cfg, 1.0)
    with pytest.raises(DegenerateTransfer):
        wall_transfer(ExtensionParams(0.3, 0.6, 0.0, 0.0, 0.8), cfg, 2.0)


def test_wall_condition_residual_on_transferred_coefficients() -> None:
    rng = np.random.default_rng(5)
    cfg = WellConfig(1.0, 0.5)
    for _ in range(20):
        ext = _random_ext(rng, min_m1=0.3)
        k = float(rng.uniform(0.2, 4.0))
        D, C = 1.0 + 0.5j, -0.3 + 0.2j
        A, B = wall_transfer(ext, cfg, k).apply((D, C))
        coeffs = Coefficients(A=A, B=B, C=C, D=D, k=k, c=cfg.c)
        assert wall_condition_residual(ext, cfg, coeffs) <= 1e-10


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unperturbed_levels_against_unperturbed_wall(n) -> None:
    # U = sigma_x: the cosine levels (odd n) violate it, the sine levels satisfy it
    cfg = WellConfig(1.0, 0.5)
    ext = ExtensionParams(math.pi / 2, 0.0, 1.0, 0.0, 0.0)
    k = n * math.pi / 2
    coeffs = eigenfunction(MatchingParams(0.0, 0.0), cfg, k)
    residual = wall_condition_residual(ext, cfg, coeffs)
    if n % 2:
        assert residual == pytest.approx(4.0 * k, rel=1e-9)
    else:
        assert residual <= 1e-12


def test_build_T() -> None:
    T, td = build_T(MatchingParams(1.0, 0.5), 1.0)
    assert td.t1 == pytest.approx(3.0)
    assert td.t2 == pytest.approx(-2.0 / 0.75)
    assert T.a12 == 0.0
    assert mat_det(T) == pytest.approx(1.0)
    with pytest.raises(SingularCoupling):
        build_T(MatchingParams(4.0, 2.0), 0.5)


def test_general_matching_reduces_to_T() -> None:
    rng = np.random.default_rng(6)
    checked = 0
    while checked < 1000:
        p = MatchingParams(float(rng.uniform(-5.0, 5.0)), float(rng.uniform(-5.0, 5.0)))
        mass = float(rng.uniform(0.1, 2.0))
        if abs(abs(mass * p.b) - 1.0) < 0.05:
            continue
        T, _ = build_T(p, mass)
        general = matching_matrix_general(general_from_matching(p, mass))
        for got, want in zip(general.entries(), T.entries()):
            assert got == pytest.approx(want, rel=1e-13, abs=1e-13)
        checked += 1


def test_general_matching_printed_sign() -> None:
    g = GeneralMatchingParams(2.0, 0.5, 0.0, 0.0)
    default, printed = matching_matrix_general(g), matching_matrix_general(g, printed=True)
    assert printed.a21 == -default.a21
    assert printed.a11 == default.a11
    assert printed.a22 == default.a22


def test_general_matching_singular() -> None:
    with pytest.raises(SingularDenominator):
        matching_matrix_general(GeneralMatchingParams(0.0, 2.0, 0.0, 0.0))


def test_m_pair_and_origin_transfer() -> None:
    k = 1.7
    assert _close(mat_mul(m_inverse(k), m_matrix(k)), Mat2.identity(), 1e-14)
    cfg = WellConfig(1.0, 0.5)
    assert _close(origin_transfer(MatchingParams(0.0, 0.0), cfg.mass, k), Mat2.identity(), 1e-14)
    O = origin_transfer(MatchingParams(1.0, 0.7), cfg.mass, k)
    assert abs(mat_det(O) - 1.0) <= 1e-12


def test_mismatched_pair_has_large_residual() -> None:
    ext = ExtensionParams(math.pi / 2, 0.0, 1.0, 0.0, 0.0)
    p, cfg, k = MatchingParams(1.0, 0.0), WellConfig(1.0, 1.0), 1.0
    assert _close(build_U(ext), Mat2(0.0, 1.0, 1.0, 0.0), 1e-15)
    pair = transfer_pair(ext, p, cfg, k)
    assert _close(pair.origin, Mat2(1 + 1j, 1j, -1j, 1 - 1j), 1e-14)
    result = consistency_residuals(ext, p, cfg, k)
    assert result.matrix_residual > 0.1
    assert [rec.eq for rec in result.records] == [30, 31, 32, 33, 34]
    assert all(math.isfinite(rec.residual) for rec in result.records)


def test_consistency_invariant_under_branch_flip() -> None:
    rng = np.random.default_rng(7)
    p, cfg = MatchingParams(1.0, 0.5), WellConfig(1.0, 1.0)
    for _ in range(20):
        ext = _random_ext(rng, min_m1=0.2)
        flipped = ExtensionParams(ext.phi + math.pi, *(-v for v in ext.m))
        assert _close(build_U(ext), build_U(flipped), 1e-12)
        k = float(rng.uniform(0.3, 3.0))
        base = consistency_residuals(ext, p, cfg, k)
        other = consistency_residuals(flipped, p, cfg, k)
        assert base.matrix_residual == pytest.approx(other.matrix_residual, abs=1e-10)
