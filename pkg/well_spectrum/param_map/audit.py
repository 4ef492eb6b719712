"""Numerical audit of the derivation that leads from the wall conditions to Q(k) = 0.

Every equation is evaluated exactly as written, left and right side separately;
nothing is corrected. Records carry |lhs - rhs|.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from boundary_forms import consistency_residuals
from model import EquationRecord
from param_map.chain import chain_terms, normalization_residual
from param_map.phi import phi_variants

CHAIN_IDS = tuple(range(30, 55))
PHI_IDS = (59, 64, 65)
AUDIT_IDS = CHAIN_IDS + PHI_IDS


def _encode_complex(z):
    return None if z is None else [z.real, z.imag]


def _decode_complex(v):
    return None if v is None else complex(v[0], v[1])


@dataclass(frozen=True)
class AuditReport:
    a: float
    b: float
    mass: float
    c: float
    k: float
    q_value: float
    normalization_residual: float
    records: Tuple[EquationRecord, ...]

    def record(self, eq):
        for rec in self.records:
            if rec.eq == eq:
                return rec
        raise KeyError(eq)

    def residual(self, eq) -> Optional[float]:
        return self.record(eq).residual

    @property
    def equation_ids(self):
        return tuple(rec.eq for rec in self.records)

    def to_dict(self):
        return {
            "inputs": {"a": self.a, "b": self.b, "mass": self.mass, "c": self.c, "k": self.k},
            "q_value": self.q_value,
            "normalization_residual": self.normalization_residual,
            "records": [
                {
                    "eq": rec.eq,
                    "lhs": _encode_complex(rec.lhs),
                    "rhs": _encode_complex(rec.rhs),
                    "residual": rec.residual,
                    "note": rec.note,
                }
                for rec in self.records
            ],
        }

    @classmethod
    def from_dict(cls, data):
        inputs = data["inputs"]
        records = tuple(
            EquationRecord(
                int(r["eq"]),
                _decode_complex(r["lhs"]),
                _decode_complex(r["rhs"]),
                r["residual"],
                r.get("note", ""),
            )
            for r in data["records"]
        )
        return cls(
            a=inputs["a"],
            b=inputs["b"],
            mass=inputs["mass"],
            c=inputs["c"],
            k=inputs["k"],
            q_value=data["q_value"],
            normalization_residual=data["normalization_residual"],
            records=records,
        )


def eight_equation_residuals(sol, p, cfg, k):
    """Records for the real system obtained by splitting the chain into parts."""
    t = chain_terms(p, cfg, k)
    ext = sol.ext
    c = cfg.c
    cos_phi, sin_phi = math.cos(ext.phi), math.sin(ext.phi)
    return (
        EquationRecord.compare(47, 2.0 * t.mb / t.den * ext.m2, 0.0),
        EquationRecord.compare(48, 2.0 * t.mb / t.den * ext.m1, ext.m3),
        EquationRecord.compare(49, 4.0 * c * t.mu / t.den * ext.m2, 0.0),
        EquationRecord.compare(
            50,
            (t.p - 1.0) * cos_phi - (t.p + 1.0) * ext.m0,
            4.0 * c * t.mu / t.den * ext.m1,
        ),
        EquationRecord.compare(
            51,
            (t.p + 1.0) * cos_phi - (t.p - 1.0) * ext.m0,
            -8.0 * c * t.Q / t.den * ext.m1,
        ),
        EquationRecord.compare(52, 8.0 * c * t.Q / t.den * ext.m2, 0.0),
        EquationRecord.compare(53, 8.0 * c * t.R / t.den * ext.m2, 0.0),
        EquationRecord.compare(54, 4.0 * c * k * sin_phi, 8.0 * c * t.R / t.den * ext.m1),
    )


def _printed_chain(sol, p, cfg, k):
    t = chain_terms(p, cfg, k)
    ext = sol.ext
    c = cfg.c
    m0, m1, m2, m3 = ext.m
    e_phi = cmath.exp(1j * ext.phi)
    cos_phi, sin_phi = math.cos(ext.phi), math.sin(ext.phi)
    w = complex(m2, m1)
    wave = cmath.exp(2j * c * k)
    alpha, beta = 2.0 * c * k + 1.0, 2.0 * c * k - 1.0
    pm, pp = t.p - 1.0, t.p + 1.0
    ck4 = 4.0 * c * k
    mb_term = 2.0 * k * t.mb
    return (
        EquationRecord.compare(
            35,
            -(beta**2) + 2.0 * pm * m0 * e_phi - alpha**2 * e_phi**2,
            -8.0 * c * complex(t.K, t.mu) / t.den * e_phi * w * wave,
        ),
        EquationRecord.compare(
            36,
            pm - 2.0 * pp * m0 * e_phi - 1j * m3 * 2.0 * ck4 * e_phi + pm * e_phi**2,
            -8.0 * c * complex(mb_term, t.mu) / t.den * e_phi * w,
        ),
        EquationRecord.compare(
            37,
            -pm + 2.0 * pp * m0 * e_phi - 1j * m3 * 2.0 * ck4 * e_phi - pm * e_phi**2,
            -8.0 * c * complex(mb_term, -t.mu) / t.den * e_phi * w,
        ),
        EquationRecord.compare(
            38,
            alpha**2 - 2.0 * pm * m0 * e_phi + beta**2 * e_phi**2,
            -8.0 * c * complex(t.K, -t.mu) / t.den * e_phi * w / wave,
            note="denominator 1 - m^2 b taken as 1 - m^2 b^2",
        ),
        EquationRecord.compare(
            39,
            pp * cos_phi + 1j * ck4 * sin_phi - pm * m0,
            4.0 * c * complex(t.K, t.mu) / t.den * w * wave,
        ),
        EquationRecord.compare(
            40,
            pm * cos_phi - pp * m0 - 1j * m3 * ck4,
            -4.0 * c * complex(mb_term, t.mu) / t.den * w,
        ),
        EquationRecord.compare(
            41,
            pm * cos_phi - pp * m0 + 1j * m3 * ck4,
            4.0 * c * complex(mb_term, -t.mu) / t.den * w,
        ),
        EquationRecord.compare(
            42,
            pp * cos_phi - 1j * ck4 * sin_phi - pm * m0,
            -4.0 * c * complex(t.K, -t.mu) / t.den * w / wave,
        ),
        EquationRecord.compare(43, 1j * m3, 2.0 * t.mb / t.den * w),
        EquationRecord.compare(44, pm * cos_phi - pp * m0, -4.0 * c * 1j * t.mu / t.den * w),
        EquationRecord.compare(45, pp * cos_phi - pm * m0, 8j * c * t.Q / t.den * w),
        EquationRecord.compare(46, 1j * ck4 * sin_phi, 8.0 * c * t.R / t.den * w),
    )


def _phi_records(p, cfg, k):
    variants = phi_variants(p, cfg, k)
    records = []
    for variant in variants.variants:
        if not variant.defined:
            records.append(EquationRecord(variant.eq, None, variants.phi_arccos, None, "undefined"))
            continue
        note = "" if variant.cos_sign_consistent else "cos sign differs from arccos branch"
        records.append(
            EquationRecord.compare(variant.eq, variant.value, variants.phi_arccos, note=note)
        )
    return tuple(records)


def chain_residuals(sol, p, cfg, k):
    """Full audit at ``k`` for the parameters in ``sol``."""
    consistency = consistency_residuals(sol.ext, p, cfg, k)
    records = (
        consistency.records
        + _printed_chain(sol, p, cfg, k)
        + eight_equation_residuals(sol, p, cfg, k)
        + _phi_records(p, cfg, k)
    )
    return AuditReport(
        a=p.a,
        b=p.b,
        mass=cfg.mass,
        c=cfg.c,
        k=k,
        q_value=chain_terms(p, cfg, k).Q,
        normalization_residual=normalization_residual(sol),
        records=records,
    )
