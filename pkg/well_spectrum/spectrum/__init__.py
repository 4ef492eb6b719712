from .quantization import (
    QuantizationFn,
    q_eval,
    find_levels,
    unperturbed_levels,
    level_shifts,
)
from .dirichlet import (
    Coefficients,
    dirichlet_system,
    dirichlet_determinant,
    dirichlet_levels,
    eigenfunction,
    compare_models,
)
from .sweep import sweep_levels, sweep_values
