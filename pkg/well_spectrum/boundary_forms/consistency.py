import cmath
from dataclasses import dataclass
from typing import Tuple

from boundary_forms.origin import build_T, origin_transfer
from boundary_forms.wall import assemble_RV, wall_transfer
from model import EquationRecord
from numerics import Mat2, mat_det, mat_sub, max_abs_entry


@dataclass(frozen=True)
class TransferPair:
    wall: Mat2
    origin: Mat2
    k: float
    delta: complex

    @property
    def origin_det(self):
        return mat_det(self.origin)


def transfer_pair(ext, p, cfg, k, delta_tol=None):
    wall = wall_transfer(ext, cfg, k, delta_tol=delta_tol)
    origin = origin_transfer(p, cfg.mass, k)
    return TransferPair(wall=wall, origin=origin, k=k, delta=assemble_RV(ext, cfg, k).delta)


@dataclass(frozen=True)
class ConsistencyResiduals:
    matrix_residual: float
    eq31: float
    eq32: float
    eq33: float
    eq34: float
    records: Tuple[EquationRecord, ...]


def consistency_residuals(ext, p, cfg, k, delta_tol=None):
    """Residuals of R^-1 V = M^-1 T M and of its four entrywise forms.

    Diagnostic only: nothing here asserts that the residuals vanish.
    """
    pair = transfer_pair(ext, p, cfg, k, delta_tol=delta_tol)
    rv = assemble_RV(ext, cfg, k)
    T, td = build_T(p, cfg.mass)
    t1, inv_t1, t2 = td.t1, T.a22, td.t2
    U, alpha, beta, delta = rv.U, rv.alpha, rv.beta, rv.delta
    u11, u12, u21, u22 = U.entries()
    ik = 1j * k
    phase = cmath.exp(2j * k * cfg.c)

    matrix_residual = max_abs_entry(mat_sub(pair.wall, pair.origin))
    records = [
        EquationRecord(
            30,
            max_abs_entry(pair.wall),
            max_abs_entry(pair.origin),
            matrix_residual,
            "matrix identity; lhs/rhs are max-entry magnitudes",
        ),
        EquationRecord.compare(
            31,
            -(beta - u22 * alpha) * (beta - u11 * alpha) + u12 * u21 * alpha**2,
            (ik * (t1 + inv_t1) + t2) / (2.0 * ik) * phase * delta,
        ),
        EquationRecord.compare(
            32,
            (beta - u22 * alpha) * (alpha - u11 * beta) - u12 * u21 * alpha * beta,
            (ik * (t1 - inv_t1) + t2) / (2.0 * ik) * delta,
        ),
        EquationRecord.compare(
            33,
            -(alpha - u22 * beta) * (beta - u11 * alpha) + u12 * u21 * alpha * beta,
            (ik * (t1 - inv_t1) - t2) / (2.0 * ik) * delta,
        ),
        EquationRecord.compare(
            34,
            (alpha - u22 * beta) * (alpha - u11 * beta) - beta**2 * u12 * u21,
            (ik * (t1 + inv_t1) - t2) / (2.0 * ik) / phase * delta,
        ),
    ]
    return ConsistencyResiduals(
        matrix_residual=matrix_residual,
        eq31=records[1].residual,
        eq32=records[2].residual,
        eq33=records[3].residual,
        eq34=records[4].residual,
        records=tuple(records),
    )
