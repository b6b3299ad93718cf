#!/usr/bin/env python3
"""
Divisibility of the qubit map.

The map is divisible when every intermediate map Psi(t + t1, t), defined by
Phi(t + t1) = Psi(t + t1, t) Phi(t), is completely positive. For an XX chain Psi acts as

    rho00 -> R rho00 + a00(t + t1) - R a00(t),   R = f(t + t1)/f(t)
    rho11 -> R rho11 + a11(t + t1) - R a11(t)
    rho01 -> [A01(t + t1)/A01(t)] rho01

with a00 = (1 - f + g)/2 and a11 = (1 - f - g)/2 the population gains of the map.

Classes:
    SingularMapError
    IntermediateMap

Functions:
    intermediate_map(MapSnapshot, MapSnapshot):
    divisibility_C(MapSnapshot, MapSnapshot, QubitState):
    choi_matrix(IntermediateMap):
    choi_positivity(IntermediateMap):
    divisibility_grid(ChainSpec, np.ndarray, np.ndarray, QubitState, str):
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
import scipy.linalg

from ..constants import SINGULAR_MAP_TOL
from ..dynamics import MapSnapshot, QubitState, equatorial_pair, map_snapshots
from ..model import ChainSpec
from ..utils import setup_default_logger


class SingularMapError(ZeroDivisionError):
    """The map at the earlier time is not invertible, so Psi does not exist."""


@dataclass(frozen=True)
class IntermediateMap:
    """
    Psi(t + t1, t) for an XX chain.

    Attributes:
        t (float): earlier time
        t1 (float): time step
        ratio_f (float): f(t + t1)/f(t)
        ratio_coh (complex): A01(t + t1)/A01(t)
        gain_00 (float): population added to rho00
        gain_11 (float): population added to rho11
    """

    t: float
    t1: float
    ratio_f: float
    ratio_coh: complex
    gain_00: float
    gain_11: float

    def apply(self, state: QubitState) -> np.ndarray:
        """Image of a state as a 2x2 matrix, which need not be positive."""
        rho00 = self.ratio_f * state.rho00 + self.gain_00
        rho11 = self.ratio_f * state.rho11 + self.gain_11
        rho01 = self.ratio_coh * state.rho01
        return np.array([[rho00, rho01], [np.conj(rho01), rho11]], dtype=complex)


def intermediate_map(earlier: MapSnapshot, later: MapSnapshot) -> IntermediateMap:
    """
    Psi connecting the map at earlier.t to the map at later.t.

    Raises:
        ValueError: if either map is not of XX form or later precedes earlier
        SingularMapError: if f(t) or A01(t) vanishes
    """
    if not (earlier.is_xx and later.is_xx):
        raise ValueError("Intermediate maps are built for XX chains only.")
    if later.t < earlier.t:
        raise ValueError(f"Later time {later.t} precedes earlier time {earlier.t}.")
    if abs(earlier.f) < SINGULAR_MAP_TOL:
        raise SingularMapError(f"f(t) = {earlier.f:.3g} vanishes at t = {earlier.t}.")
    if abs(earlier.a0101) < SINGULAR_MAP_TOL:
        raise SingularMapError(f"A01(t) = {earlier.a0101:.3g} vanishes at t = {earlier.t}.")

    ratio_f = later.f / earlier.f
    return IntermediateMap(
        t=earlier.t,
        t1=later.t - earlier.t,
        ratio_f=ratio_f,
        ratio_coh=later.a0101 / earlier.a0101,
        gain_00=later.gain_to_00 - ratio_f * earlier.gain_to_00,
        gain_11=later.gain_to_11 - ratio_f * earlier.gain_to_11,
    )


def divisibility_C(
    earlier: MapSnapshot, later: MapSnapshot, probe: Optional[QubitState] = None
) -> float:
    """
    C = 4|rho01|^2 + (rho00 - rho11)^2 of Psi applied to the probe.

    The probe plays the role of the state at the earlier time; Psi is positive on it only if
    0 <= C <= 1.

    Args:
        earlier (MapSnapshot): map at t
        later (MapSnapshot): map at t + t1
        probe (QubitState): default |+>
    """
    if probe is None:
        probe = equatorial_pair()[0]
    image = intermediate_map(earlier, later).apply(probe)
    return float(4 * abs(image[0, 1]) ** 2 + (image[0, 0] - image[1, 1]).real ** 2)


def choi_matrix(psi: IntermediateMap) -> np.ndarray:
    """
    Unit-trace Choi matrix (Psi x I)(|Phi+><Phi+|) in the basis |out, in>.
    """
    choi = np.zeros((4, 4), dtype=complex)
    choi[0, 0] = psi.ratio_f + psi.gain_00
    choi[1, 1] = psi.gain_00
    choi[2, 2] = psi.gain_11
    choi[3, 3] = psi.ratio_f + psi.gain_11
    choi[0, 3] = psi.ratio_coh
    choi[3, 0] = np.conj(psi.ratio_coh)
    return choi / 2


def choi_positivity(psi: IntermediateMap) -> np.ndarray:
    """Ascending eigenvalues of the Choi matrix; Psi is CP when the smallest is >= 0."""
    return scipy.linalg.eigvalsh(choi_matrix(psi))


def divisibility_grid(
    spec: ChainSpec,
    times,
    t1_values,
    probe: Optional[QubitState] = None,
    chain_state: str = "ground",
    logger: Optional[logging.Logger] = None,
) -> pd.DataFrame:
    """
    C and the smallest Choi eigenvalue over a (t, t1) grid.

    Singular cells are kept as NaN and counted in a warning.

    Returns:
        pd.DataFrame: columns t, t1, C, choi_min with t1 varying fastest
    """
    if logger is None:
        logger = setup_default_logger()
    times = np.asarray(times, dtype=float)
    t1_values = np.asarray(t1_values, dtype=float)
    if np.any(times < 0) or np.any(t1_values < 0):
        raise ValueError("Divisibility grids need nonnegative t and t1.")

    needed = np.concatenate([times, (times[:, None] + t1_values[None, :]).ravel()])
    grid = np.unique(np.round(needed, 12))
    snaps = map_snapshots(spec, grid, chain_state)

    def at(t: float) -> MapSnapshot:
        return snaps[int(np.searchsorted(grid, round(t, 12)))]

    rows, singular = [], 0
    for t in times:
        earlier = at(t)
        for t1 in t1_values:
            later = at(t + t1)
            try:
                psi = intermediate_map(earlier, later)
            except SingularMapError:
                singular += 1
                rows.append({"t": t, "t1": t1, "C": np.nan, "choi_min": np.nan})
                continue
            rows.append(
                {
                    "t": t,
                    "t1": t1,
                    "C": divisibility_C(earlier, later, probe),
                    "choi_min": float(choi_positivity(psi)[0]),
                }
            )
    if singular:
        logger.warning(f"{singular} grid cells have a singular intermediate map.")
    return pd.DataFrame(rows, columns=["t", "t1", "C", "choi_min"])
