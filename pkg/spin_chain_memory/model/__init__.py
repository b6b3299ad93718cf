from .ChainSpec import ChainSpec, ChainSpecError
from .adjacency import (
    AdjacencyDecomposition,
    CoefficientSet,
    OriginCoefficients,
    build_adjacency,
    coefficient_series_check,
    coefficients,
    origin_coefficients,
)
from .bessel_reference import (
    equal_field_coefficients,
    equal_field_f,
    equal_field_flux,
    first_positive_flux_window,
    markov_point_coefficients,
    markov_point_f,
    sqrt2_coupling_coefficients,
    sqrt2_coupling_flux,
)
from .exact_diagonalization import (
    CHAIN_STATE_LABELS,
    chain_ground_state,
    ed_oracle_evolve,
    ground_state_magnetization,
    ground_state_string_correlator,
)

__version__ = "0.1.0"
__description__ = "Chain parameters, adjacency decomposition and propagator coefficients."
__all__ = [f for f in dir() if not f.startswith("_")]
