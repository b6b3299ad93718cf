#!/usr/bin/env python3
"""
Ground-state correlators of a uniform open XX chain and the population function g(t).

The chain ground state is a Fermi sea of the Jordan-Wigner modes
    phi_{j,k} = sqrt(2/(N+1)) sin(j theta_k),  theta_k = k pi/(N+1),
filled where eps_k = -2J cos(theta_k) - 2h < 0. A filled mode flips its spin to the
computational |1>, so <Z_n> = 1 - 2 sum_{k<=kF} phi_{n,k}^2.

Functions:
    fermi_number(int, float):
    correlators(int, float):
    polarized_correlators(int):
    chain_correlators(ChainSpec, str):
    g_of_t(CoefficientSet, GroundStateCorrelators):

Classes:
    GroundStateCorrelators
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..constants import ZERO_MODE_TOL
from ..model import CHAIN_STATE_LABELS, ChainSpec, CoefficientSet


@dataclass(frozen=True)
class GroundStateCorrelators:
    """
    Attributes:
        n_sites (int): chain length N
        k_fermi (int): number of filled modes
        sigma_z (np.ndarray): <Z_n> for n = 1..N
        g_matrix (np.ndarray): symmetric N x N table of g_nm = sum_{k<=kF} phi_{n,k} phi_{m,k};
            row/column i is chain site i+1 and the diagonal holds the site occupations
    """

    n_sites: int
    k_fermi: int
    sigma_z: np.ndarray
    g_matrix: np.ndarray

    def g(self, n: int, m: int) -> float:
        """g_nm for chain sites 1 <= n, m <= N."""
        return float(self.g_matrix[n - 1, m - 1])

    def sigma_z_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"site": np.arange(1, self.n_sites + 1), "sigma_z": self.sigma_z}
        )

    def g_frame(self) -> pd.DataFrame:
        n, m = np.triu_indices(self.n_sites, k=1)
        return pd.DataFrame({"n": n + 1, "m": m + 1, "g_nm": self.g_matrix[n, m]})


def _mode_angles(n_sites: int) -> np.ndarray:
    return np.arange(1, n_sites + 1) * np.pi / (n_sites + 1)


def _modes(n_sites: int, k: int) -> np.ndarray:
    """phi_{j,k} for j = 1..N; zero for k = 0 and k = N+1."""
    j = np.arange(1, n_sites + 1)
    return np.sqrt(2.0 / (n_sites + 1)) * np.sin(j * k * np.pi / (n_sites + 1))


def fermi_number(n_sites: int, h_over_J: float) -> int:
    """
    Number of modes with eps_k = -2 cos(theta_k) - 2 h/J below zero.

    Modes with |eps_k| < 1e-12 stay empty, which settles the filling at level crossings.
    """
    if n_sites < 1:
        raise ValueError(f"Chain needs at least one site, got {n_sites}.")
    energies = -2.0 * np.cos(_mode_angles(n_sites)) - 2.0 * h_over_J
    return int(np.count_nonzero(energies < -ZERO_MODE_TOL))


def _magnetization(n_sites: int, k_fermi: int) -> np.ndarray:
    theta = _mode_angles(n_sites)
    partial_sum = np.cos((k_fermi + 1) * theta) * np.sin(k_fermi * theta) / np.sin(theta)
    return 1.0 - 2.0 / (n_sites + 1) * (k_fermi - partial_sum)


def _two_point(n_sites: int, k_fermi: int) -> np.ndarray:
    # Christoffel-Darboux sum; the diagonal is filled from the magnetization
    theta = _mode_angles(n_sites)
    upper = _modes(n_sites, k_fermi + 1)
    lower = _modes(n_sites, k_fermi)
    numerator = np.outer(upper, lower) - np.outer(lower, upper)
    denominator = 2.0 * (np.cos(theta)[:, None] - np.cos(theta)[None, :])
    np.fill_diagonal(denominator, 1.0)
    g_matrix = numerator / denominator
    np.fill_diagonal(g_matrix, 0.5 * (1.0 - _magnetization(n_sites, k_fermi)))
    return g_matrix


def correlators(n_sites: int, h_over_J: float) -> GroundStateCorrelators:
    """Magnetization and two-point table of the XX chain ground state at field h/J."""
    k_fermi = fermi_number(n_sites, h_over_J)
    return GroundStateCorrelators(
        n_sites=n_sites,
        k_fermi=k_fermi,
        sigma_z=_magnetization(n_sites, k_fermi),
        g_matrix=_two_point(n_sites, k_fermi),
    )


def polarized_correlators(n_sites: int) -> GroundStateCorrelators:
    """All chain spins in |0>: the empty Fermi sea."""
    if n_sites < 1:
        raise ValueError(f"Chain needs at least one site, got {n_sites}.")
    return GroundStateCorrelators(
        n_sites=n_sites,
        k_fermi=0,
        sigma_z=np.ones(n_sites),
        g_matrix=np.zeros((n_sites, n_sites)),
    )


def chain_correlators(spec: ChainSpec, chain_state: str = "ground") -> GroundStateCorrelators:
    """
    Correlators of the chain part of spec in the requested initial state.

    Raises:
        ValueError: for an unknown label, or a ground state of a chain that is not a
            uniform XX chain with positive coupling
    """
    if chain_state == "polarized":
        return polarized_correlators(spec.n_sites)
    if chain_state != "ground":
        raise ValueError(
            f"Unknown chain state [{chain_state}]; expected one of {CHAIN_STATE_LABELS}."
        )
    bulk_jx, bulk_jy = np.array(spec.jx[1:]), np.array(spec.jy[1:])
    bulk_fields = np.array(spec.fields[1:])
    if not spec.is_xx():
        raise ValueError("Ground-state correlators are only available for XX chains.")
    if bulk_jx.size and (np.any(bulk_jx != bulk_jx[0]) or np.any(bulk_jy != bulk_jx[0])):
        raise ValueError("Ground-state correlators need a uniform chain coupling.")
    if np.any(bulk_fields != bulk_fields[0]):
        raise ValueError("Ground-state correlators need a uniform chain field.")
    # a single chain spin has no internal bond, only its field matters
    coupling = float(bulk_jx[0]) if bulk_jx.size else 1.0
    if coupling <= 0:
        raise ValueError(f"Ground-state correlators need a positive chain coupling, got {coupling}.")
    return correlators(spec.n_sites, spec.bulk_field / coupling)


def g_of_t(coeffs: CoefficientSet, corr: GroundStateCorrelators) -> np.ndarray:
    """
    Population function g(t) on the time grid of coeffs.

    g(t) = sum_{n>=1} (Pi^x_n Pi^y_n + Delta^x_n Delta^y_n) <Z_n>
           - 2 sum_{n != m >= 1} (-1)^(n+m) (Pi^x_n Pi^y_m + Delta^x_n Delta^y_m) g_nm
    """
    if coeffs.n_sites != corr.n_sites:
        raise ValueError(
            f"Coefficients describe {coeffs.n_sites} chain sites but correlators {corr.n_sites}."
        )
    pi_x, pi_y = coeffs.pi_x[:, 1:], coeffs.pi_y[:, 1:]
    delta_x, delta_y = coeffs.delta_x[:, 1:], coeffs.delta_y[:, 1:]

    diagonal = (pi_x * pi_y + delta_x * delta_y) @ corr.sigma_z

    if corr.k_fermi == 0:
        return diagonal
    signs = (-1.0) ** np.arange(1, corr.n_sites + 1)
    off_diagonal = corr.g_matrix * np.outer(signs, signs)
    np.fill_diagonal(off_diagonal, 0.0)
    cross = np.sum((pi_x @ off_diagonal) * pi_y, axis=1) + np.sum(
        (delta_x @ off_diagonal) * delta_y, axis=1
    )
    return diagonal - 2.0 * cross
