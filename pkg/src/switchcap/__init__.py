"""Capacity bounds for flip channels traversed in a superposition of causal orders."""

from .bounds import (
    BoundsReport,
    Threshold,
    binary_entropy,
    bounds_report,
    gain,
    lb_qs,
    lb_qs_diagonal,
    plus_branch_coherent_info,
    ree_plus_branch,
    separable_state_diagonal,
    threshold_p0,
    threshold_p1,
    ub_classical,
    ub_qs,
    ub_qs_symmetrized,
    uncertainty,
)
from .channels import (
    KrausChannel,
    apply,
    bit_flip,
    choi_matrix,
    compose,
    flip_channel_capacity,
    identity_channel,
    phase_flip,
)
from .linalg import (
    hermitian_eigenvalues,
    kron,
    partial_trace,
    relative_entropy,
    validate_density_matrix,
    von_neumann_entropy,
)
from .oracle import (
    GridSpec,
    VerificationReport,
    numeric_coherent_info,
    simulate_choi,
    simulate_fixed_order_choi,
    sweep_input_states,
    verify_all,
)
from .qswitch import (
    Branch,
    DegenerateBranchError,
    HeraldedBranch,
    branch_choi,
    heralded_branches,
    plus_branch_choi_operator_form,
    plus_branch_eigenvalues,
    plus_branch_separable_state,
    switch_kraus,
    switch_output,
    switch_output_closed_form,
)

__version__ = "0.1.0"
