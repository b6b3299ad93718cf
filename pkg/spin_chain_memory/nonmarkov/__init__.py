from .flux import (
    FluxProfile,
    flux,
    flux_numerator,
    flux_profile,
    flux_windows,
    pair_distance,
)
from .measure import (
    MeasureResult,
    OptimalPairReport,
    blp_measure,
    markovianity_detuning,
    measure_time_grid,
    recurrence_horizon,
    sweep_measure,
    verify_optimal_pair,
)

__version__ = "0.1.0"
__description__ = "Information flux, backflow windows and the non-Markovianity measure."
__all__ = [f for f in dir() if not f.startswith("_")]
