#!/usr/bin/env python3
"""
Single-particle propagator of the qubit plus chain.

The Heisenberg-picture transverse operators of every site are linear combinations of the
operators at time zero. The combination coefficients Pi(t), Delta(t) follow from the
tridiagonal adjacency matrix tau through its singular value decomposition tau = U diag(lam) V^T:

    Pi^x    = U cos(lam t) U^T v        Delta^x = V sin(lam t) U^T v
    Pi^y    = V cos(lam t) V^T v        Delta^y = U sin(lam t) V^T v

where v is the unit vector on the qubit site. For an XX chain tau is symmetric and the x and y
families coincide.

Functions:
    build_adjacency(ChainSpec):
    coefficients(AdjacencyDecomposition, np.ndarray):
    origin_coefficients(AdjacencyDecomposition, np.ndarray):
    coefficient_series_check(AdjacencyDecomposition, float, int):

Classes:
    AdjacencyDecomposition
    CoefficientSet
    OriginCoefficients
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd
import scipy.linalg

from ..constants import DECOMPOSITION_TOL
from .ChainSpec import ChainSpec


def _as_time_grid(times) -> np.ndarray:
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if times.ndim != 1 or times.size == 0:
        raise ValueError("Time grid must be a nonempty one-dimensional array.")
    if not np.all(np.isfinite(times)):
        raise ValueError("Time grid contains non-finite values.")
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise ValueError("Time grid must be strictly increasing.")
    return times


@dataclass(frozen=True)
class AdjacencyDecomposition:
    """
    Adjacency matrix tau and its SVD, with the pairing tau^T U = V diag(lam).

    Attributes:
        spec (ChainSpec): the chain the matrix was built from
        tau (np.ndarray): (N+1)x(N+1) tridiagonal matrix
        u (np.ndarray): left singular vectors as columns
        v (np.ndarray): right singular vectors as columns
        singular_values (np.ndarray): lam_i in descending order
    """

    spec: ChainSpec
    tau: np.ndarray
    u: np.ndarray
    v: np.ndarray
    singular_values: np.ndarray

    @property
    def size(self) -> int:
        return self.tau.shape[0]

    @property
    def max_frequency(self) -> float:
        return float(self.singular_values[0])

    def reconstruction_error(self) -> float:
        return float(
            np.linalg.norm(self.tau - (self.u * self.singular_values) @ self.v.T, "fro")
        )

    def pairing_error(self) -> float:
        return float(
            np.linalg.norm(self.tau.T @ self.u - self.v * self.singular_values, "fro")
        )


@dataclass(frozen=True)
class OriginCoefficients:
    """
    Qubit-site components Pi_0(t), Delta_0(t) of both families and their time derivatives.

    These are all the dynamical map of the qubit needs from the single-particle problem.
    """

    times: np.ndarray
    pi_x: np.ndarray
    delta_x: np.ndarray
    pi_y: np.ndarray
    delta_y: np.ndarray
    d_pi_x: np.ndarray
    d_delta_x: np.ndarray
    d_pi_y: np.ndarray
    d_delta_y: np.ndarray

    @property
    def coherence_factor(self) -> np.ndarray:
        """Pi_0 + i Delta_0, the factor multiplying rho01 for an XX chain."""
        return self.pi_x + 1j * self.delta_x

    @property
    def population_factor(self) -> np.ndarray:
        """Pi^x_0 Pi^y_0 + Delta^x_0 Delta^y_0, equal to f(t) for an XX chain."""
        return self.pi_x * self.pi_y + self.delta_x * self.delta_y

    @property
    def d_population_factor(self) -> np.ndarray:
        return (
            self.d_pi_x * self.pi_y
            + self.pi_x * self.d_pi_y
            + self.d_delta_x * self.delta_y
            + self.delta_x * self.d_delta_y
        )


@dataclass(frozen=True)
class CoefficientSet:
    """
    Full coefficient vectors on a time grid, one row per time and one column per site.

    Attributes:
        decomposition (AdjacencyDecomposition): source of the coefficients
        times (np.ndarray): strictly increasing time grid, units of 1/J
        pi_x, delta_x, pi_y, delta_y (np.ndarray): shape (len(times), N+1)
        d_pi_x, d_delta_x, d_pi_y, d_delta_y (np.ndarray): exact time derivatives
    """

    decomposition: AdjacencyDecomposition
    times: np.ndarray
    pi_x: np.ndarray
    delta_x: np.ndarray
    pi_y: np.ndarray
    delta_y: np.ndarray
    d_pi_x: np.ndarray
    d_delta_x: np.ndarray
    d_pi_y: np.ndarray
    d_delta_y: np.ndarray

    @property
    def n_sites(self) -> int:
        return self.pi_x.shape[1] - 1

    def origin(self) -> OriginCoefficients:
        return OriginCoefficients(
            times=self.times,
            pi_x=self.pi_x[:, 0],
            delta_x=self.delta_x[:, 0],
            pi_y=self.pi_y[:, 0],
            delta_y=self.delta_y[:, 0],
            d_pi_x=self.d_pi_x[:, 0],
            d_delta_x=self.d_delta_x[:, 0],
            d_pi_y=self.d_pi_y[:, 0],
            d_delta_y=self.d_delta_y[:, 0],
        )

    def norm_x(self) -> np.ndarray:
        return np.sum(self.pi_x**2 + self.delta_x**2, axis=1)

    def norm_y(self) -> np.ndarray:
        return np.sum(self.pi_y**2 + self.delta_y**2, axis=1)

    def to_frame(self) -> pd.DataFrame:
        """Qubit-site coefficients of both families and f as a table."""
        origin = self.origin()
        return pd.DataFrame(
            {
                "t": self.times,
                "pi_x0": origin.pi_x,
                "delta_x0": origin.delta_x,
                "pi_y0": origin.pi_y,
                "delta_y0": origin.delta_y,
                "f": origin.population_factor,
            }
        )


def build_adjacency(spec: ChainSpec) -> AdjacencyDecomposition:
    """
    Build tau with tau[i, i-1] = Jx_{i-1}, tau[i, i+1] = Jy_i, tau[i, i] = -2 h_i and decompose it.

    Args:
        spec (ChainSpec): chain parameters

    Returns:
        AdjacencyDecomposition: tau, U, V and the descending singular values

    Raises:
        ValueError: if tau is not finite or the SVD fails to reproduce it
    """
    size = spec.n_sites + 1
    jx = np.asarray(spec.jx)
    jy = np.asarray(spec.jy)
    tau = np.diag(-2.0 * np.asarray(spec.fields))
    idx = np.arange(spec.n_sites)
    tau[idx + 1, idx] = jx
    tau[idx, idx + 1] = jy

    if not np.all(np.isfinite(tau)):
        raise ValueError("Adjacency matrix contains non-finite entries.")
    try:
        u, singular_values, vh = scipy.linalg.svd(tau, lapack_driver="gesvd")
    except (np.linalg.LinAlgError, ValueError) as err:
        raise ValueError(f"SVD of the {size}x{size} adjacency matrix failed: {err}") from err

    decomp = AdjacencyDecomposition(
        spec=spec, tau=tau, u=u, v=vh.T, singular_values=singular_values
    )
    error = decomp.reconstruction_error()
    if error > DECOMPOSITION_TOL * max(1.0, np.linalg.norm(tau, "fro")):
        raise ValueError(f"SVD reconstruction error {error:.3e} exceeds tolerance.")
    return decomp


def _trig_tables(decomp: AdjacencyDecomposition, times: np.ndarray):
    phases = np.outer(times, decomp.singular_values)
    return np.cos(phases), np.sin(phases), decomp.singular_values


def coefficients(decomp: AdjacencyDecomposition, times) -> CoefficientSet:
    """
    Evaluate Pi and Delta of both families, with exact derivatives, on a time grid.

    Derivatives replace cos(lam t) by -lam sin(lam t) and sin(lam t) by lam cos(lam t).
    """
    times = _as_time_grid(times)
    cos_t, sin_t, lam = _trig_tables(decomp, times)
    u, v = decomp.u, decomp.v
    ut_v = u[0]
    vt_v = v[0]

    return CoefficientSet(
        decomposition=decomp,
        times=times,
        pi_x=(cos_t * ut_v) @ u.T,
        delta_x=(sin_t * ut_v) @ v.T,
        pi_y=(cos_t * vt_v) @ v.T,
        delta_y=(sin_t * vt_v) @ u.T,
        d_pi_x=(-lam * sin_t * ut_v) @ u.T,
        d_delta_x=(lam * cos_t * ut_v) @ v.T,
        d_pi_y=(-lam * sin_t * vt_v) @ v.T,
        d_delta_y=(lam * cos_t * vt_v) @ u.T,
    )


def origin_coefficients(decomp: AdjacencyDecomposition, times) -> OriginCoefficients:
    """
    Qubit-site coefficients only, without forming the (len(times), N+1) tables.

    Pi^x_0 = sum_i U_0i^2 cos(lam_i t), Pi^y_0 = sum_i V_0i^2 cos(lam_i t) and
    Delta^x_0 = Delta^y_0 = sum_i U_0i V_0i sin(lam_i t).
    """
    times = _as_time_grid(times)
    cos_t, sin_t, lam = _trig_tables(decomp, times)
    uu = decomp.u[0] ** 2
    vv = decomp.v[0] ** 2
    uv = decomp.u[0] * decomp.v[0]

    delta = sin_t @ uv
    d_delta = cos_t @ (lam * uv)
    return OriginCoefficients(
        times=times,
        pi_x=cos_t @ uu,
        delta_x=delta,
        pi_y=cos_t @ vv,
        delta_y=delta,
        d_pi_x=-(sin_t @ (lam * uu)),
        d_delta_x=d_delta,
        d_pi_y=-(sin_t @ (lam * vv)),
        d_delta_y=d_delta,
    )


def coefficient_series_check(
    decomp: AdjacencyDecomposition, t: float, order: int
) -> float:
    """
    Compare the truncated power series of the coefficients with the resummed values.

    The series keeps the terms p = 0 .. order of
        Pi^x    = sum_p (-1)^p t^(2p)/(2p)!     (tau tau^T)^p v
        Delta^x = sum_p (-1)^p t^(2p+1)/(2p+1)! tau^T (tau tau^T)^p v
    and the mirrored expressions with tau^T tau for the y family.

    Args:
        decomp (AdjacencyDecomposition): decomposition to check
        t (float): time at which both sides are evaluated
        order (int): highest power p kept

    Returns:
        residual (float): maximum absolute deviation over the four families

    Raises:
        ValueError: if lam_max * t is too large for the series to be summed in floating point
        OverflowError: if a series term stops being finite
    """
    if order < 0:
        raise ValueError(f"Series order must be nonnegative, got {order}.")
    if decomp.max_frequency * abs(t) > 10.0:
        raise ValueError(
            f"lam_max * t = {decomp.max_frequency * abs(t):.2f} is too large for the series; reduce t."
        )

    tau = decomp.tau
    left = tau @ tau.T
    right = tau.T @ tau
    unit = np.zeros(decomp.size)
    unit[0] = 1.0

    pi_x = np.zeros(decomp.size)
    delta_x = np.zeros(decomp.size)
    pi_y = np.zeros(decomp.size)
    delta_y = np.zeros(decomp.size)

    power_left = unit.copy()
    power_right = unit.copy()
    even_coef = 1.0
    odd_coef = float(t)
    with np.errstate(over="raise", invalid="raise"):
        try:
            for p in range(order + 1):
                if p > 0:
                    even_coef *= -(t**2) / ((2 * p - 1) * (2 * p))
                    odd_coef *= -(t**2) / ((2 * p) * (2 * p + 1))
                    power_left = left @ power_left
                    power_right = right @ power_right
                pi_x += even_coef * power_left
                delta_x += odd_coef * (tau.T @ power_left)
                pi_y += even_coef * power_right
                delta_y += odd_coef * (tau @ power_right)
        except FloatingPointError as err:
            raise OverflowError(
                f"Series term overflowed at t={t}, order={order}; reduce t or order."
            ) from err
    for series in (pi_x, delta_x, pi_y, delta_y):
        if not np.all(np.isfinite(series)):
            raise OverflowError(f"Series at t={t}, order={order} is not finite.")

    exact = coefficients(decomp, [t])
    return float(
        max(
            np.max(np.abs(pi_x - exact.pi_x[0])),
            np.max(np.abs(delta_x - exact.delta_x[0])),
            np.max(np.abs(pi_y - exact.pi_y[0])),
            np.max(np.abs(delta_y - exact.delta_y[0])),
        )
    )
