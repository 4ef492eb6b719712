import math

import numpy as np
import pytest

from numerics import Mat2, bracketed_root, mat_det, mat_inv, mat_mul, mat_sub, max_abs_entry
from utils.errors import NoSignChange, NonFiniteValue, SingularMatrix


def _random_mat(rng):
    return Mat2.from_array(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))


def test_mat_mul_matches_numpy() -> None:
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y = _random_mat(rng), _random_mat(rng)
        assert np.allclose(mat_mul(x, y).to_array(), x.to_array() @ y.to_array(), atol=1e-14)
        assert np.allclose((x @ y).to_array(), x.to_array() @ y.to_array(), atol=1e-14)


def _well_conditioned(rng, count):
    mats = []
    while len(mats) < count:
        x = _random_mat(rng)
        if np.linalg.cond(x.to_array()) <= 20.0:
            mats.append(x)
    return mats


def test_mat_inv_closed_form() -> None:
    for x in _well_conditioned(np.random.default_rng(1), 50):
        residual = mat_sub(mat_mul(x, mat_inv(x)), Mat2.identity())
        assert max_abs_entry(residual) < 1e-13


def test_mat_inv_is_an_involution() -> None:
    for x in _well_conditioned(np.random.default_rng(2), 50):
        assert max_abs_entry(mat_sub(mat_inv(mat_inv(x)), x)) <= 1e-12 * max_abs_entry(x)


def test_det_is_multiplicative() -> None:
    rng = np.random.default_rng(3)
    for x, y in zip(_well_conditioned(rng, 50), _well_conditioned(rng, 50)):
        expected = mat_det(x) * mat_det(y)
        assert abs(mat_det(mat_mul(x, y)) - expected) <= 1e-12 * abs(expected)


def test_mat_inv_plane_wave_matrix() -> None:
    inv = mat_inv(Mat2(1.0, 1.0, 1j, -1j))
    expected = Mat2(1j, 1.0, 1j, -1.0).scale(1.0 / 2j)
    assert max_abs_entry(mat_sub(inv, expected)) <= 1e-14
    assert max_abs_entry(mat_sub(inv, Mat2(0.5, -0.5j, 0.5, 0.5j))) <= 1e-14


def test_mat_inv_singular() -> None:
    with pytest.raises(SingularMatrix):
        mat_inv(Mat2(1.0, 2.0, 2.0, 4.0))
    with pytest.raises(SingularMatrix):
        mat_inv(Mat2(0.0, 0.0, 0.0, 0.0))


def test_mat2_helpers() -> None:
    x = Mat2(1.0, 2j, -1j, 3.0)
    assert mat_det(x) == pytest.approx(3.0 - 2.0)
    assert x.det() == mat_det(x)
    assert x.dagger().entries() == (1.0, 1j, -2j, 3.0)
    assert x.apply((1.0, 1.0)) == (1.0 + 2j, 3.0 - 1j)
    assert max_abs_entry(x.scale(2.0)) == pytest.approx(6.0)
    assert Mat2.from_array(x.to_array()) == x


def test_mat2_rejects_non_finite() -> None:
    with pytest.raises(NonFiniteValue):
        Mat2(float("nan"), 0.0, 0.0, 1.0)
    with pytest.raises(NonFiniteValue):
        Mat2(1.0, complex(float("inf"), 0.0), 0.0, 1.0)
    assert NonFiniteValue.exit_code == 4


def test_bracketed_root_cosine() -> None:
    root = bracketed_root(math.cos, 0.0, 3.0)
    assert root == pytest.approx(math.pi / 2, abs=1e-13)


@pytest.mark.parametrize(
    "f, lo, hi, expected",
    [
        (math.sin, 3.0, 3.3, math.pi),
        (lambda k: k * math.sin(2.0 * k), 1.4, 1.7, math.pi / 2),
    ],
)
def test_bracketed_root_residual_bound(f, lo, hi, expected) -> None:
    tol = 1e-13
    root = bracketed_root(f, lo, hi, tol=tol)
    assert lo <= root <= hi
    assert root == pytest.approx(expected, abs=1e-12)
    slope = abs(f(expected + 1e-6) - f(expected - 1e-6)) / 2e-6
    assert abs(f(root)) <= 10.0 * tol * max(1.0, abs(root)) * slope


def test_bracketed_root_uses_given_endpoint_values() -> None:
    # sin(pi) rounds to a tiny positive number; the exact sign is passed in
    root = bracketed_root(math.sin, 3.0, math.pi, f_lo=math.sin(3.0), f_hi=-1e-20)
    assert 3.0 < root <= math.pi


def test_bracketed_root_endpoint_zero() -> None:
    assert bracketed_root(lambda x: x - 1.0, 1.0, 2.0) == 1.0


@pytest.mark.parametrize(
    "lo, hi",
    [(0.0, 1.0), (2.0, 1.0), (0.0, float("inf"))],
)
def test_bracketed_root_invalid_bracket(lo, hi) -> None:
    with pytest.raises(NoSignChange):
        bracketed_root(lambda x: x * x + 1.0, lo, hi)
