from .QubitState import (
    QubitState,
    equatorial_pair,
    pair_difference,
    probe_states,
    trace_distance,
)
from .dynamical_map import (
    MapInvariantError,
    MapSnapshot,
    evolve,
    evolve_general,
    map_snapshots,
    snapshot,
    trajectory,
    xx_trace_distance,
)

__version__ = "0.1.0"
__description__ = "Qubit states and the reduced dynamical map."
__all__ = [f for f in dir() if not f.startswith("_")]
