#!/usr/bin/env python3
"""
Information flux between the qubit and the chain.

For an input pair with half-Bloch difference dr = r1(0) - r2(0) the evolved distance is
D(t)^2 = (A dr_z)^2 + B^2 + C^2, where
    A = Pi^x_0 Pi^y_0 + Delta^x_0 Delta^y_0
    B = Pi^x_0 dr_x + Delta^x_0 dr_y
    C = Pi^y_0 dr_y - Delta^y_0 dr_x
and the flux is sigma = dD/dt = (dr_z^2 A A' + B B' + C C') / D. Backflow windows are the
intervals where the numerator is positive; for an XX chain its sign is the sign of f'(t).

Classes:
    FluxProfile

Functions:
    pair_distance(OriginCoefficients, np.ndarray):
    flux_numerator(OriginCoefficients, np.ndarray):
    flux_profile(AdjacencyDecomposition, np.ndarray, tuple):
    flux(CoefficientSet, tuple):
    flux_windows(AdjacencyDecomposition, np.ndarray, np.ndarray, np.ndarray):
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from ..constants import FLUX_DERIVATIVE_TOL, WINDOW_XTOL
from ..dynamics import QubitState, equatorial_pair
from ..model import AdjacencyDecomposition, CoefficientSet, OriginCoefficients, origin_coefficients

Pair = tuple[QubitState, QubitState]


@dataclass(frozen=True)
class FluxProfile:
    """
    Attributes:
        times (np.ndarray): evaluation grid
        d_values (np.ndarray): trace distance of the evolved pair
        sigma (np.ndarray): flux dD/dt, +-inf where D vanishes with a nonzero numerator
        windows (list[tuple[float, float]]): disjoint ordered intervals of positive flux
        pair (tuple[QubitState, QubitState]): input pair
    """

    times: np.ndarray
    d_values: np.ndarray
    sigma: np.ndarray
    windows: list[tuple[float, float]]
    pair: Pair

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.times, "D": self.d_values, "sigma": self.sigma})

    def windows_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.windows, columns=["a", "b"])


def _difference(pair: Optional[Pair]) -> np.ndarray:
    if pair is None:
        pair = equatorial_pair()
    return pair[0].bloch - pair[1].bloch


def _abc(origin: OriginCoefficients, dr: np.ndarray):
    a = origin.population_factor
    b = origin.pi_x * dr[0] + origin.delta_x * dr[1]
    c = origin.pi_y * dr[1] - origin.delta_y * dr[0]
    d_a = origin.d_population_factor
    d_b = origin.d_pi_x * dr[0] + origin.d_delta_x * dr[1]
    d_c = origin.d_pi_y * dr[1] - origin.d_delta_y * dr[0]
    return (a, b, c), (d_a, d_b, d_c)


def pair_distance(origin: OriginCoefficients, dr: np.ndarray) -> np.ndarray:
    """Trace distance of the evolved pair with initial half-Bloch difference dr."""
    (a, b, c), _ = _abc(origin, dr)
    return np.sqrt((a * dr[2]) ** 2 + b**2 + c**2)


def flux_numerator(origin: OriginCoefficients, dr: np.ndarray) -> np.ndarray:
    """sigma * D, which carries the sign of the flux without the 1/D singularity."""
    (a, b, c), (d_a, d_b, d_c) = _abc(origin, dr)
    return dr[2] ** 2 * a * d_a + b * d_b + c * d_c


def _numerator_at(decomp: AdjacencyDecomposition, dr: np.ndarray, t: float) -> float:
    return float(flux_numerator(origin_coefficients(decomp, [t]), dr)[0])


def _refine(decomp, dr, left: float, right: float) -> float:
    return brentq(lambda t: _numerator_at(decomp, dr, t), left, right, xtol=WINDOW_XTOL)


def flux_windows(
    decomp: AdjacencyDecomposition,
    times: np.ndarray,
    numerator: np.ndarray,
    dr: np.ndarray,
    tol: float = FLUX_DERIVATIVE_TOL,
) -> list[tuple[float, float]]:
    """
    Maximal intervals of positive flux, endpoints refined by root finding.

    Grid points with |numerator| <= tol count as non-positive, so plateaus never open a
    window. Windows reaching the first or last grid point are clipped there.
    """
    positive = numerator > tol
    windows = []
    n = len(times)
    i = 0
    while i < n:
        if not positive[i]:
            i += 1
            continue
        start = i
        while i < n and positive[i]:
            i += 1
        stop = i - 1

        if start == 0:
            a = float(times[0])
        elif numerator[start - 1] < 0:
            a = _refine(decomp, dr, times[start - 1], times[start])
        else:
            a = float(times[start - 1])
        if stop == n - 1:
            b = float(times[-1])
        elif numerator[stop + 1] < 0:
            b = _refine(decomp, dr, times[stop], times[stop + 1])
        else:
            b = float(times[stop + 1])
        if b > a:
            windows.append((a, b))
    return windows


def flux_profile(
    decomp: AdjacencyDecomposition, times, pair: Optional[Pair] = None
) -> FluxProfile:
    """
    Flux of a pair on a time grid.

    Args:
        decomp (AdjacencyDecomposition): decomposition of the chain
        times (np.ndarray): strictly increasing grid
        pair (tuple[QubitState, QubitState]): inputs, default the antipodal equatorial pair

    Returns:
        FluxProfile
    """
    if pair is None:
        pair = equatorial_pair()
    dr = _difference(pair)
    origin = origin_coefficients(decomp, times)
    d_values = pair_distance(origin, dr)
    numerator = flux_numerator(origin, dr)

    with np.errstate(divide="ignore", invalid="ignore"):
        sigma = numerator / d_values
    vanishing = d_values == 0
    sigma[vanishing] = np.where(
        numerator[vanishing] == 0, 0.0, np.sign(numerator[vanishing]) * np.inf
    )

    return FluxProfile(
        times=origin.times,
        d_values=d_values,
        sigma=sigma,
        windows=flux_windows(decomp, origin.times, numerator, dr),
        pair=pair,
    )


def flux(coeffs: CoefficientSet, pair: Optional[Pair] = None) -> FluxProfile:
    """Flux of a pair on the grid of an already evaluated coefficient set."""
    return flux_profile(coeffs.decomposition, coeffs.times, pair)
