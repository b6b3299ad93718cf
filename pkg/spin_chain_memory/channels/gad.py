#!/usr/bin/env python3
"""
Generalized amplitude damping with independent dephasing, and the process-fidelity fit.

With e = exp(-2 gamma (2 mu + 1)) the reference channel maps

    rho00 -> rho00 e + (mu + 1)/(2 mu + 1) (1 - e)
    rho01 -> rho01 exp(-[2 Gamma + gamma (2 mu + 1)])

where mu, gamma and Gamma are the thermal occupation, damping and dephasing rates already
multiplied by the elapsed time.

Classes:
    GadChannelParams
    GadFit

Functions:
    gad_channel(GadChannelParams, QubitState):
    gad_chi(GadChannelParams):
    process_fidelity(ChiMatrix | np.ndarray, ChiMatrix | np.ndarray):
    fit_gad(ChiMatrix, int, np.random.Generator):
"""

import logging
from dataclasses import astuple, dataclass
from typing import Optional, Union

import numpy as np
import scipy.linalg
from scipy.optimize import minimize

from ..constants import GAD_PARAMETER_BOX, GAD_RESTARTS, GAD_START_FLOOR
from ..dynamics import QubitState, probe_states
from .tomography import ChiMatrix, process_tomography

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadChannelParams:
    mu: float
    gamma: float
    big_gamma: float

    def __post_init__(self):
        for name, value in zip(("mu", "gamma", "big_gamma"), astuple(self)):
            if not (np.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and nonnegative, got {value}.")


@dataclass(frozen=True)
class GadFit:
    """
    Attributes:
        params (GadChannelParams): best parameters found
        fidelity (float): process fidelity at the best parameters
        converged (bool): whether the optimizer reported success for the best start
    """

    params: GadChannelParams
    fidelity: float
    converged: bool


def gad_channel(params: GadChannelParams, initial: QubitState) -> QubitState:
    rate = 2 * params.mu + 1
    damping = np.exp(-2 * params.gamma * rate)
    target = (params.mu + 1) / rate
    return QubitState(
        rho00=initial.rho00 * damping + target * (1 - damping),
        rho01=initial.rho01 * np.exp(-(2 * params.big_gamma + params.gamma * rate)),
    )


def gad_chi(params: GadChannelParams) -> ChiMatrix:
    """Process matrix of the reference channel, through the same tomography as the chain."""
    outputs = {
        key: gad_channel(params, state).density_matrix() for key, state in probe_states().items()
    }
    return process_tomography(outputs)


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    values, vectors = scipy.linalg.eigh(matrix)
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.conj().T


def process_fidelity(
    chi_a: Union[ChiMatrix, np.ndarray], chi_b: Union[ChiMatrix, np.ndarray]
) -> float:
    """
    [Tr sqrt(sqrt(a) b sqrt(a))]^2 of the two process matrices scaled to unit trace.
    """
    a, b = (
        np.asarray(chi.matrix if isinstance(chi, ChiMatrix) else chi, dtype=complex)
        for chi in (chi_a, chi_b)
    )
    a, b = a / np.trace(a).real, b / np.trace(b).real
    root = _psd_sqrt(a)
    inner = scipy.linalg.eigvalsh(root @ b @ root)
    return float(np.sum(np.sqrt(np.clip(inner, 0.0, None))) ** 2)


def fit_gad(
    chi: ChiMatrix,
    restarts: int = GAD_RESTARTS,
    rng: Optional[np.random.Generator] = None,
) -> GadFit:
    """
    Reference channel closest to chi in process fidelity.

    Nelder-Mead inside the parameter box, started from (0.1, 0.1, 0.1) and from
    restarts - 1 random points drawn log-uniformly between 1e-2 and the upper edge of the box.

    Args:
        chi (ChiMatrix): process matrix to approximate
        restarts (int): number of starting points
        rng (np.random.Generator): source of the random starts

    Returns:
        GadFit: a warning is logged when the best start did not converge
    """
    if restarts < 1:
        raise ValueError(f"Need at least one start, got {restarts}.")
    rng = np.random.default_rng() if rng is None else rng
    lower, upper = GAD_PARAMETER_BOX

    def infidelity(x: np.ndarray) -> float:
        x = np.clip(x, lower, upper)
        return 1.0 - process_fidelity(gad_chi(GadChannelParams(*x)), chi)

    log_range = (np.log(GAD_START_FLOOR), np.log(upper))
    starts = [np.full(3, 0.1)] + [
        np.exp(rng.uniform(*log_range, size=3)) for _ in range(restarts - 1)
    ]
    best = None
    for start in starts:
        result = minimize(
            infidelity,
            start,
            method="Nelder-Mead",
            bounds=[(lower, upper)] * 3,
            options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
        )
        if best is None or result.fun < best.fun:
            best = result

    if not best.success:
        logger.warning(f"GAD fit at t = {chi.t} did not converge: {best.message}")
    params = GadChannelParams(*(float(v) for v in np.clip(best.x, lower, upper)))
    return GadFit(params=params, fidelity=1.0 - float(best.fun), converged=bool(best.success))
