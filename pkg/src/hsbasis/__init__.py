"""Orthogonal bases of the Hilbert-Schmidt space of d x d complex matrices.

Constructions of the standard, generalized Gell-Mann, and Weyl operator
bases (all normalized to Tr(g^dag g) = d), unitary transformations
between bases, basis expansions of SWAP, the Bell projector, and the
coherent state, an executable catalogue of the expansion identities, and
basis-expanded maps (trace, transposition, partial transpose,
reshuffling, Choi representation, universal state inversion,
concurrence).
"""

from .bases import (
    BasisSplit,
    MatrixBasis,
    gellmann_basis,
    random_basis,
    random_unitary,
    rotated_basis,
    split_diag_offdiag,
    standard_basis,
    validate_basis,
    weyl_basis,
)
from .identities import IdentityId, check_identity, run_catalogue
from .linalg import (
    dagger,
    devectorize,
    frob_norm,
    hs_inner,
    partial_trace,
    partial_transpose,
    reshuffle,
    scalar_tolerance,
    tensor,
    tolerance,
    vectorize,
)
from .maps import (
    BlochVector,
    ChoiState,
    Superoperator,
    apply_via_choi,
    bloch_decompose,
    bloch_reconstruct,
    choi_state,
    concurrence_squared,
    identity_map,
    partial_transpose_map,
    reshuffle_map,
    state_inversion,
    state_inversion_two,
    state_inversion_y,
    superop_from_action,
    trace_map,
    transpose_map,
)
from .operators import (
    bell_expansion,
    bell_projector,
    bell_state,
    coherent_expansion,
    coherent_state,
    swap_diag_expansion,
    swap_expansion,
    swap_operator,
)
from .report import IdentityCheck, IdentityReport
from .transforms import (
    BasisChange,
    BlockStructure,
    block_structure,
    change_of_basis,
    from_standard,
    to_standard,
)

__version__ = "0.1.0"

__all__ = [
    "BasisChange",
    "BasisSplit",
    "BlochVector",
    "BlockStructure",
    "ChoiState",
    "IdentityCheck",
    "IdentityId",
    "IdentityReport",
    "MatrixBasis",
    "Superoperator",
    "apply_via_choi",
    "bell_expansion",
    "bell_projector",
    "bell_state",
    "bloch_decompose",
    "bloch_reconstruct",
    "block_structure",
    "change_of_basis",
    "check_identity",
    "choi_state",
    "coherent_expansion",
    "coherent_state",
    "concurrence_squared",
    "dagger",
    "devectorize",
    "frob_norm",
    "from_standard",
    "gellmann_basis",
    "hs_inner",
    "identity_map",
    "partial_trace",
    "partial_transpose",
    "partial_transpose_map",
    "random_basis",
    "random_unitary",
    "reshuffle",
    "reshuffle_map",
    "rotated_basis",
    "run_catalogue",
    "scalar_tolerance",
    "split_diag_offdiag",
    "standard_basis",
    "state_inversion",
    "state_inversion_two",
    "state_inversion_y",
    "superop_from_action",
    "swap_diag_expansion",
    "swap_expansion",
    "swap_operator",
    "tensor",
    "to_standard",
    "tolerance",
    "transpose_map",
    "trace_map",
    "validate_basis",
    "vectorize",
    "weyl_basis",
]
