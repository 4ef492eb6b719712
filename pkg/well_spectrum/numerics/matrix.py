"""Complex scalars and 2x2 complex matrices.

Scalars are plain Python ``complex``. ``Mat2`` is an immutable record of four
complex entries; every operation returns a new value.
"""
import cmath
from dataclasses import dataclass

import numpy as np

from utils.errors import NonFiniteValue, SingularMatrix

Complex = complex

DEFAULT_INV_TOL = 1e-14


def ensure_finite(z):
    z = complex(z)
    if not cmath.isfinite(z):
        raise NonFiniteValue(f"non-finite complex value {z!r}")
    return z


@dataclass(frozen=True)
class Mat2:
    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, ensure_finite(getattr(self, name)))

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_array(cls, arr):
        arr = np.asarray(arr, dtype=np.complex128)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {arr.shape}")
        return cls(complex(arr[0, 0]), complex(arr[0, 1]), complex(arr[1, 0]), complex(arr[1, 1]))

    def to_array(self):
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=np.complex128)

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def det(self):
        return mat_det(self)

    def dagger(self):
        return Mat2(
            self.a11.conjugate(), self.a21.conjugate(), self.a12.conjugate(), self.a22.conjugate()
        )

    def scale(self, factor):
        factor = complex(factor)
        return Mat2(*(factor * z for z in self.entries()))

    def apply(self, vec):
        """Matrix times the column vector ``vec = (v1, v2)``."""
        v1, v2 = vec
        return (self.a11 * v1 + self.a12 * v2, self.a21 * v1 + self.a22 * v2)

    def __matmul__(self, other):
        return mat_mul(self, other)


def mat_mul(lhs, rhs):
    return Mat2.from_array(lhs.to_array() @ rhs.to_array())


def mat_det(x):
    return x.a11 * x.a22 - x.a12 * x.a21


def mat_sub(lhs, rhs):
    return Mat2(lhs.a11 - rhs.a11, lhs.a12 - rhs.a12, lhs.a21 - rhs.a21, lhs.a22 - rhs.a22)


def max_abs_entry(x):
    return max(abs(z) for z in x.entries())


def mat_inv(x, tol=DEFAULT_INV_TOL):
    """Closed-form inverse.

    The determinant is compared against ``tol`` times the squared largest entry
    magnitude, so the test does not depend on the overall scale of ``x``.
    """
    det = mat_det(x)
    scale = max_abs_entry(x)
    if scale == 0.0 or abs(det) <= tol * scale * scale:
        raise SingularMatrix(f"determinant {det!r} below tolerance {tol:g} (scale {scale:g})")
    return Mat2(x.a22 / det, -x.a12 / det, -x.a21 / det, x.a11 / det)
