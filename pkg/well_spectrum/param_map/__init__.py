from .chain import (
    ChainTerms,
    ParamSolution,
    chain_terms,
    m_params_at,
    normalization_residual,
    level_map_table,
)
from .phi import PhiVariant, PhiVariants, phi_variants
from .audit import (
    AUDIT_IDS,
    AuditReport,
    eight_equation_residuals,
    chain_residuals,
)
