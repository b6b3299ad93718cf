#!/usr/bin/env python3
"""
Localized single-particle levels of a chain with an impurity at the qubit site.

After the Jordan-Wigner mapping an XX chain is a tight-binding model with hopping -J_n and
on-site energy -2 h_n. The bulk band is [-2J - 2h, 2J - 2h]; the qubit bond J0 and the
detuning dh = h - h0 act as an impurity that binds levels outside the band. The boundaries
in the (dh/J, J0/J) plane are the parabolae dh/J = +-[1 - (J0/J)^2/2]:

    J0/J < sqrt(2):  |dh| < p  no localized level,  |dh| > p  one
    J0/J > sqrt(2):  |dh| < |p| two localized levels, |dh| > |p| one

Classes:
    LocalizationReport

Functions:
    parabola(float):
    classify_localization(float, float):
    single_particle_matrix(ChainSpec):
    band_edges(ChainSpec):
    in_band_mask(ChainSpec, np.ndarray):
    numeric_localized_levels(ChainSpec):
    localization_scan(list, list, int):
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np
import pandas as pd
import scipy.linalg

from ..constants import PARABOLA_TOL
from ..model import ChainSpec
from ..utils import parallel_map, setup_default_logger

# distance from a parabola below which the finite-size count is not compared
BOUNDARY_MARGIN = 0.02


@dataclass(frozen=True)
class LocalizationReport:
    """
    Attributes:
        analytic_count (int): localized levels predicted by the parabola rule
        numeric_count (int): eigenvalues outside the bulk band
        boundary_flag (bool): the point lies on a parabola
        energies (np.ndarray): out-of-band eigenvalues, ascending
        ipr (np.ndarray): inverse participation ratios of the out-of-band eigenvectors
        qubit_weights (np.ndarray): weight of each out-of-band eigenvector on sites 0 and 1
    """

    analytic_count: int
    numeric_count: int
    boundary_flag: bool
    energies: np.ndarray
    ipr: np.ndarray
    qubit_weights: np.ndarray

    @property
    def localization_lengths(self) -> np.ndarray:
        return 1.0 / self.ipr

    @property
    def consistent(self) -> bool:
        return self.analytic_count == self.numeric_count


def parabola(j0_over_J: float) -> float:
    """1 - (J0/J)^2/2, the detuning at which a level leaves the band."""
    return 1.0 - j0_over_J**2 / 2


def classify_localization(h_over_J: float, j0_over_J: float) -> tuple[int, bool]:
    """
    Number of localized levels from the parabola rule and whether the point is on a parabola.

    Args:
        h_over_J (float): detuning dh/J
        j0_over_J (float): qubit coupling J0/J

    Returns:
        count (int): 0, 1 or 2
        boundary (bool): |dh| within 1e-9 of |1 - (J0/J)^2/2|
    """
    if not (np.isfinite(h_over_J) and np.isfinite(j0_over_J)):
        raise ValueError(f"Non-finite point ({h_over_J}, {j0_over_J}).")
    edge = parabola(j0_over_J)
    boundary = abs(abs(h_over_J) - abs(edge)) <= PARABOLA_TOL
    if edge > 0:
        count = 0 if abs(h_over_J) < edge else 1
    else:
        count = 2 if abs(h_over_J) < -edge else 1
    return count, boundary


def distance_to_boundary(h_over_J: float, j0_over_J: float) -> float:
    return abs(abs(h_over_J) - abs(parabola(j0_over_J)))


def check_uniform_bulk(spec: ChainSpec):
    if not spec.is_xx():
        raise ValueError("Single-particle spectrum needs an XX chain.")
    bulk_j = np.asarray(spec.jx[1:])
    bulk_h = np.asarray(spec.fields[1:])
    if np.any(bulk_j != spec.bulk_coupling) or np.any(bulk_h != spec.bulk_field):
        raise ValueError("Single-particle spectrum needs a uniform bulk.")
    if spec.bulk_coupling <= 0:
        raise ValueError(f"Bulk coupling must be positive, got {spec.bulk_coupling}.")


def single_particle_matrix(spec: ChainSpec) -> np.ndarray:
    """(N+1)x(N+1) tight-binding matrix, hopping -J_n and on-site -2 h_n."""
    matrix = np.diag(-2.0 * np.asarray(spec.fields))
    idx = np.arange(spec.n_sites)
    matrix[idx, idx + 1] = -np.asarray(spec.jx)
    matrix[idx + 1, idx] = -np.asarray(spec.jx)
    return matrix


def band_tolerance(spec: ChainSpec) -> float:
    """
    Finite-size distance of the outermost band level from the infinite-chain edge.

    The edge level of the bulk sits 2J(1 - cos(pi/(N+1))) ~ J (pi/(N+1))^2 inside the band.
    """
    return spec.bulk_coupling * (np.pi / (spec.n_sites + 1)) ** 2


def band_edges(spec: ChainSpec) -> tuple[float, float]:
    J, h = spec.bulk_coupling, spec.bulk_field
    return -2.0 * J - 2.0 * h, 2.0 * J - 2.0 * h


def in_band_mask(spec: ChainSpec, energies: np.ndarray) -> np.ndarray:
    lower, upper = band_edges(spec)
    tol = band_tolerance(spec)
    return (energies >= lower - tol) & (energies <= upper + tol)


def numeric_localized_levels(spec: ChainSpec) -> LocalizationReport:
    """
    Diagonalize the single-particle matrix and collect the levels outside the bulk band.

    Raises:
        ValueError: if the chain is not XX or its bulk is not uniform
    """
    check_uniform_bulk(spec)
    energies, vectors = scipy.linalg.eigh(single_particle_matrix(spec))
    outside = ~in_band_mask(spec, energies)
    bound = vectors[:, outside]

    J = spec.bulk_coupling
    analytic, boundary = classify_localization(spec.detuning / J, spec.qubit_coupling / J)
    return LocalizationReport(
        analytic_count=analytic,
        numeric_count=int(np.count_nonzero(outside)),
        boundary_flag=boundary,
        energies=energies[outside],
        ipr=np.sum(bound**4, axis=0),
        qubit_weights=np.sum(bound[:2] ** 2, axis=0),
    )


def _scan_point(point: tuple[float, float], n_sites: int) -> dict:
    h_over_J, j0_over_J = point
    report = numeric_localized_levels(
        ChainSpec.uniform(J=1.0, J0=j0_over_J, h=h_over_J, h0=0.0, N=n_sites)
    )
    return {
        "h": h_over_J,
        "j0": j0_over_J,
        "analytic": report.analytic_count,
        "numeric": report.numeric_count,
        "boundary": report.boundary_flag,
        "max_ipr": float(report.ipr.max()) if report.ipr.size else np.nan,
        "near_boundary": distance_to_boundary(h_over_J, j0_over_J)
        <= BOUNDARY_MARGIN + PARABOLA_TOL,
    }


def localization_scan(
    h_values,
    j0_values,
    n_sites: int = 400,
    n_jobs: int = 1,
    logger: Optional[logging.Logger] = None,
) -> pd.DataFrame:
    """
    Analytic and numeric level counts over a grid with h0 = 0.

    Returns:
        pd.DataFrame: columns h, j0, analytic, numeric, boundary, max_ipr, near_boundary;
            near_boundary marks points within 0.02 of a parabola
    """
    if logger is None:
        logger = setup_default_logger()
    points = [(float(h), float(j0)) for j0 in j0_values for h in h_values]
    rows = parallel_map(partial(_scan_point, n_sites=n_sites), points, n_jobs=n_jobs)
    table = pd.DataFrame(rows)
    mismatches = table[~table["near_boundary"] & (table["analytic"] != table["numeric"])]
    if len(mismatches):
        logger.warning(f"{len(mismatches)} scan points disagree away from the parabolae.")
    return table
