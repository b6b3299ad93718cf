from .excitations import ExcitationDistribution, excitation_distribution, flatness
from .localization import (
    BOUNDARY_MARGIN,
    LocalizationReport,
    band_edges,
    band_tolerance,
    check_uniform_bulk,
    classify_localization,
    distance_to_boundary,
    in_band_mask,
    localization_scan,
    numeric_localized_levels,
    parabola,
    single_particle_matrix,
)

__version__ = "0.1.0"
__description__ = "Localized single-particle levels and the excitation content of the initial state."
__all__ = [f for f in dir() if not f.startswith("_")]
