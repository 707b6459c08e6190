"""Error-exponent bounds for binary classical-quantum channels."""

from .bounds import (
    BinaryBoundParams,
    BoundPoint,
    binary_entropy,
    binary_expurgated_exponent,
    cutoff_exponent,
    effective_distance,
    expurgated_exponent,
    expurgated_rate,
    gv_distance,
    inverse_binary_entropy,
    positivity_threshold,
    quantum_cutoff_rate,
    random_coding_exponent,
    theorem1_bound,
    theorem2_bound,
)
from .channel import (
    CQChannel,
    DensityMatrix,
    PriorDistribution,
    bsc_channel,
    channel_param_c,
    holevo_capacity,
    mu,
    mu_tilde,
    pure_state_channel,
    von_neumann_entropy,
)
