from .records import (
    WellConfig,
    MatchingParams,
    ExtensionParams,
    GeneralMatchingParams,
    SpectralLevel,
    EquationRecord,
)
from .validation import (
    validate_matching,
    canonicalize_extension,
    general_from_matching,
    is_singular_coupling,
    COUPLING_TOL,
)
