from .divisibility import (
    IntermediateMap,
    SingularMapError,
    choi_matrix,
    choi_positivity,
    divisibility_C,
    divisibility_grid,
    intermediate_map,
)
from .tomography import (
    PAULI_BASIS,
    PAULI_LABELS,
    ChiMatrix,
    CompletePositivityError,
    KrausSet,
    apply_chi,
    kraus_from_chi,
    probe_outputs,
    process_tomography,
)
from .gad import (
    GadChannelParams,
    GadFit,
    fit_gad,
    gad_channel,
    gad_chi,
    process_fidelity,
)
from .fixed_point import FixedPointReport, fixed_point_ensemble, offset_scaling

__version__ = "0.1.0"
__description__ = "Divisibility, process tomography and the reference-channel fit."
__all__ = [f for f in dir() if not f.startswith("_")]
