from .matrix import (
    Complex,
    Mat2,
    ensure_finite,
    mat_mul,
    mat_inv,
    mat_det,
    mat_sub,
    max_abs_entry,
    DEFAULT_INV_TOL,
)
from .roots import bracketed_root, DEFAULT_TOL
