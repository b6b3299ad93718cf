"""
Closed forms of the qubit-site coefficients for a semi-infinite uniform XX chain (J = 1).

They hold for a finite chain of N sites until the front reflected at the far end returns,
roughly t < N. Times are in units of 1/J.
"""

import numpy as np
from scipy.special import jn_zeros, jv


def _j1_over_t(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    safe = np.where(t == 0, 1.0, t)
    return np.where(t == 0, 1.0, jv(1, 2 * safe) / safe)


def equal_field_coefficients(t, h: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Pi_0, Delta_0 for J0 = J and h0 = h: J1(2t) cos(2ht)/t and -J1(2t) sin(2ht)/t."""
    t = np.asarray(t, dtype=float)
    amplitude = _j1_over_t(t)
    return amplitude * np.cos(2 * h * t), -amplitude * np.sin(2 * h * t)


def equal_field_f(t) -> np.ndarray:
    return _j1_over_t(t) ** 2


def equal_field_flux(t) -> np.ndarray:
    """Flux of the antipodal equatorial pair for h0 = h: -(2/t) sgn(J1(2t)) J2(2t)."""
    t = np.asarray(t, dtype=float)
    safe = np.where(t == 0, 1.0, t)
    return np.where(t == 0, 0.0, -2.0 / safe * np.sign(jv(1, 2 * safe)) * jv(2, 2 * safe))


def first_positive_flux_window() -> tuple[float, float]:
    """
    First interval of information backflow for h0 = h.

    It opens at the first zero of J1(2t) and closes at the first zero of J2(2t).
    """
    return float(jn_zeros(1, 1)[0] / 2), float(jn_zeros(2, 1)[0] / 2)


def markov_point_coefficients(t) -> tuple[np.ndarray, np.ndarray]:
    """Pi_0, Delta_0 for J0 = J, h0 = 0, h = J/2."""
    t = np.asarray(t, dtype=float)
    j0, j1 = jv(0, 2 * t), jv(1, 2 * t)
    return j0 * np.cos(t) + j1 * np.sin(t), j1 * np.cos(t) - j0 * np.sin(t)


def markov_point_f(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return jv(0, 2 * t) ** 2 + jv(1, 2 * t) ** 2


def sqrt2_coupling_coefficients(t, h: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Pi_0, Delta_0 for J0 = sqrt(2) J and h0 = h: J0(2t) cos(2ht) and -J0(2t) sin(2ht)."""
    t = np.asarray(t, dtype=float)
    amplitude = jv(0, 2 * t)
    return amplitude * np.cos(2 * h * t), -amplitude * np.sin(2 * h * t)


def sqrt2_coupling_flux(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return -2.0 * np.sign(jv(0, 2 * t)) * jv(1, 2 * t)
