#!/usr/bin/env python3
"""
Long-time fixed point of the qubit map.

An ensemble of random pure inputs is evolved to a final time; a Markovian map squeezes it
onto a single state near the maximally mixed one, offset along z, while memory effects leave
a finite-volume cloud.

Classes:
    FixedPointReport

Functions:
    fixed_point_ensemble(ChainSpec, float, int, np.random.Generator, str):
    offset_scaling(ChainSpec, list, float, int, np.random.Generator):
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from ..dynamics import QubitState, evolve, map_snapshots
from ..model import ChainSpec
from ..nonmarkov import recurrence_horizon
from ..statistics import centroid, max_pairwise_distance, power_law_exponent
from ..utils import setup_default_logger


@dataclass(frozen=True)
class FixedPointReport:
    """
    Attributes:
        final_time (float): time the ensemble was evolved to
        f (float): population contraction factor at final_time
        final_states (np.ndarray): (n_states, 3) half-Bloch vectors
        max_spread (float): largest trace distance between two final states
        centroid (np.ndarray): mean half-Bloch vector of the final states
    """

    final_time: float
    f: float
    final_states: np.ndarray
    max_spread: float
    centroid: np.ndarray

    @property
    def z_offset(self) -> float:
        return float(self.centroid[2])

    @property
    def transverse_offset(self) -> float:
        return float(np.hypot(self.centroid[0], self.centroid[1]))


def fixed_point_ensemble(
    spec: ChainSpec,
    final_time: float,
    n_states: int = 500,
    rng: Optional[np.random.Generator] = None,
    chain_state: str = "ground",
) -> FixedPointReport:
    """Evolve n_states random pure inputs to final_time and measure the final cloud."""
    if not final_time > 0:
        raise ValueError(f"Final time must be positive, got {final_time}.")
    if n_states < 1:
        raise ValueError(f"Need at least one state, got {n_states}.")
    rng = np.random.default_rng() if rng is None else rng

    snap = map_snapshots(spec, [0.0, final_time], chain_state)[-1]
    final = np.array(
        [evolve(QubitState.random_pure(rng), snap).bloch for _ in range(n_states)]
    )
    return FixedPointReport(
        final_time=float(final_time),
        f=snap.f,
        final_states=final,
        max_spread=max_pairwise_distance(final),
        centroid=centroid(final),
    )


def offset_scaling(
    template: ChainSpec,
    site_counts,
    final_time: float,
    n_states: int = 500,
    rng: Optional[np.random.Generator] = None,
    chain_state: str = "ground",
    logger: Optional[logging.Logger] = None,
) -> tuple[pd.DataFrame, float]:
    """
    z-offset and spread of the fixed point over chain lengths.

    Each chain is evolved to min(final_time, 2N/3) so that no reflected front reaches the
    qubit.

    Returns:
        table (pd.DataFrame): columns n_sites, final_time, z_offset, max_spread
        exponent (float): power-law exponent of |z_offset| against n_sites, NaN when any
            offset vanishes
    """
    if logger is None:
        logger = setup_default_logger()
    rng = np.random.default_rng() if rng is None else rng
    rows = []
    for n_sites in site_counts:
        spec = template.extended(int(n_sites))
        horizon = min(final_time, recurrence_horizon(spec))
        report = fixed_point_ensemble(spec, horizon, n_states, rng, chain_state)
        logger.info(f"N = {n_sites}: z-offset {report.z_offset:.3e} at t = {horizon}.")
        rows.append(
            {
                "n_sites": int(n_sites),
                "final_time": horizon,
                "z_offset": report.z_offset,
                "max_spread": report.max_spread,
            }
        )
    table = pd.DataFrame(rows, columns=["n_sites", "final_time", "z_offset", "max_spread"])
    if len(table) < 2 or np.any(table["z_offset"] == 0):
        return table, float("nan")
    return table, power_law_exponent(table["n_sites"], table["z_offset"])
