#!/usr/bin/env python3
"""
Fermion excitations of the coupled system carried by the initial product state.

Classes:
    ExcitationDistribution

Functions:
    excitation_distribution(ChainSpec, QubitState, str):
    flatness(ExcitationDistribution):
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
import scipy.linalg

from ..chain_state import chain_correlators
from ..dynamics import QubitState, equatorial_pair
from ..model import ChainSpec
from .localization import check_uniform_bulk, in_band_mask, single_particle_matrix


@dataclass(frozen=True)
class ExcitationDistribution:
    """
    Attributes:
        energies (np.ndarray): single-particle eigenvalues, ascending
        occupations (np.ndarray): <n_q> of each level in the initial state
        in_band (np.ndarray): mask of levels inside the bulk band
        k_fermi (int): filled chain modes
        qubit_population (float): G_00, the |1> population of the qubit
    """

    energies: np.ndarray
    occupations: np.ndarray
    in_band: np.ndarray
    k_fermi: int
    qubit_population: float

    @property
    def total(self) -> float:
        return float(np.sum(self.occupations))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"energy": self.energies, "occupation": self.occupations})


def excitation_distribution(
    spec: ChainSpec,
    qubit_state: Optional[QubitState] = None,
    chain_state: str = "ground",
) -> ExcitationDistribution:
    """
    Occupations diag(W^T G W) of the single-particle levels W of the full system.

    G is the one-body correlation matrix of the initial product state: G_00 is the qubit's
    |1> population, the qubit-chain block vanishes and the chain block is the Fermi-sea
    table of the chain.

    Args:
        spec (ChainSpec): XX chain with uniform bulk
        qubit_state (QubitState): default the equatorial |+>
        chain_state (str): "ground" or "polarized"
    """
    check_uniform_bulk(spec)
    if qubit_state is None:
        qubit_state = equatorial_pair()[0]
    corr = chain_correlators(spec, chain_state)

    one_body = np.zeros((spec.n_sites + 1, spec.n_sites + 1))
    one_body[0, 0] = qubit_state.rho11
    one_body[1:, 1:] = corr.g_matrix

    energies, vectors = scipy.linalg.eigh(single_particle_matrix(spec))
    occupations = np.einsum("iq,ij,jq->q", vectors, one_body, vectors)
    return ExcitationDistribution(
        energies=energies,
        occupations=np.clip(occupations, 0.0, 1.0),
        in_band=in_band_mask(spec, energies),
        k_fermi=corr.k_fermi,
        qubit_population=qubit_state.rho11,
    )


def flatness(distribution: ExcitationDistribution) -> float:
    """Standard deviation of the occupations over the in-band levels."""
    in_band = distribution.occupations[distribution.in_band]
    if in_band.size == 0:
        return 0.0
    return float(np.std(in_band))
