from .wall import (
    RVAssembly,
    build_U,
    assemble_RV,
    delta_closed_form,
    delta_tolerance,
    r_inverse_closed_form,
    wall_transfer,
    wall_condition_residual,
)
from .origin import (
    TDecomposition,
    build_T,
    matching_matrix_general,
    m_matrix,
    m_inverse,
    origin_transfer,
)
from .consistency import TransferPair, ConsistencyResiduals, transfer_pair, consistency_residuals
