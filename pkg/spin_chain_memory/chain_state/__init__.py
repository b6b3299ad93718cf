from .correlators import (
    GroundStateCorrelators,
    chain_correlators,
    correlators,
    fermi_number,
    g_of_t,
    polarized_correlators,
)

__version__ = "0.1.0"
__description__ = "Initial state of the chain and the population function of the qubit map."
__all__ = [f for f in dir() if not f.startswith("_")]
