from .model import (
    AdjacencyDecomposition,
    ChainSpec,
    ChainSpecError,
    CoefficientSet,
    build_adjacency,
    coefficients,
    ed_oracle_evolve,
    origin_coefficients,
)
from .chain_state import chain_correlators, fermi_number, g_of_t
from .dynamics import (
    MapInvariantError,
    MapSnapshot,
    QubitState,
    equatorial_pair,
    evolve,
    map_snapshots,
    probe_states,
    trace_distance,
    trajectory,
)
from .nonmarkov import (
    blp_measure,
    flux_profile,
    markovianity_detuning,
    sweep_measure,
    verify_optimal_pair,
)
from .spectral import (
    classify_localization,
    excitation_distribution,
    flatness,
    localization_scan,
    numeric_localized_levels,
)
from .channels import (
    ChiMatrix,
    CompletePositivityError,
    GadChannelParams,
    KrausSet,
    SingularMapError,
    choi_positivity,
    divisibility_C,
    divisibility_grid,
    fit_gad,
    fixed_point_ensemble,
    gad_channel,
    intermediate_map,
    kraus_from_chi,
    process_fidelity,
    process_tomography,
)
from .statistics import max_pairwise_distance, power_law_exponent
from .utils import recursive_dict_update, setup_default_logger, setup_logger

__version__ = "0.1.0"
__description__ = "Memory effects of a qubit coupled to an XY spin chain."
__all__ = [f for f in dir() if not f.startswith("_")]
