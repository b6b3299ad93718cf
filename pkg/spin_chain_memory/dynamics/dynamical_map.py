#!/usr/bin/env python3
"""
Reduced dynamics of the qubit.

For an initially uncorrelated qubit and chain the qubit evolves under an affine map of its
Bloch vector. With Pauli expectations (x, y, z) = 2r:

    x(t) = Pi^x_0 x + Delta^x_0 y
    y(t) = Pi^y_0 y - Delta^y_0 x
    z(t) = f z + g(t),           f = Pi^x_0 Pi^y_0 + Delta^x_0 Delta^y_0

For an XX chain this is rho01(t) = (Pi_0 + i Delta_0) rho01(0) and
rho00(t) = f rho00(0) + (1 - f + g)/2, with f = Pi_0^2 + Delta_0^2.

Classes:
    MapInvariantError
    MapSnapshot

Functions:
    snapshot(CoefficientSet, np.ndarray, int):
    map_snapshots(ChainSpec, np.ndarray, str):
    evolve(QubitState, MapSnapshot):
    evolve_general(QubitState, MapSnapshot):
    xx_trace_distance(float, complex, float):
    trajectory(list[QubitState], list[MapSnapshot]):
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd

from ..chain_state import chain_correlators, g_of_t
from ..constants import MAP_INVARIANT_TOL
from ..model import ChainSpec, CoefficientSet, build_adjacency, coefficients
from .QubitState import QubitState


class MapInvariantError(RuntimeError):
    """The map or its output left the physical region by more than the tolerance."""


@dataclass(frozen=True)
class MapSnapshot:
    """
    Affine action of the dynamical map at one time.

    Attributes:
        t (float): time
        f (float): population contraction factor
        g (float): population function g(t)
        gain_to_00 (float): (1 - f + g)/2, added to rho00
        gain_to_11 (float): (1 - f - g)/2, added to rho11
        a0101 (complex): Pi_0 + i Delta_0, multiplies rho01 for an XX chain
        transverse (np.ndarray): 2x2 matrix acting on (x, y)
        is_xx (bool): whether the x and y families coincide
    """

    t: float
    f: float
    g: float
    gain_to_00: float
    gain_to_11: float
    a0101: complex
    transverse: np.ndarray
    is_xx: bool = True

    @classmethod
    def identity(cls, t: float = 0.0) -> "MapSnapshot":
        return cls(
            t=t,
            f=1.0,
            g=0.0,
            gain_to_00=0.0,
            gain_to_11=0.0,
            a0101=1.0 + 0.0j,
            transverse=np.eye(2),
        )

    def check_invariants(self, tol: float = MAP_INVARIANT_TOL) -> None:
        lower = 0.0 if self.is_xx else -1.0
        if not lower - tol <= self.f <= 1.0 + tol:
            raise MapInvariantError(f"f({self.t}) = {self.f} outside [{lower}, 1].")
        for name in ("gain_to_00", "gain_to_11"):
            value = getattr(self, name)
            if not -tol <= value <= 1.0 + tol:
                raise MapInvariantError(f"{name}({self.t}) = {value} outside [0, 1].")
        if self.is_xx and abs(abs(self.a0101) ** 2 - self.f) > tol:
            raise MapInvariantError(
                f"|A01({self.t})|^2 = {abs(self.a0101) ** 2} differs from f = {self.f}."
            )


def snapshot(coeffs: CoefficientSet, g_values: np.ndarray, t_index: int) -> MapSnapshot:
    """
    Map at times[t_index] from the coefficient tables and the population function.

    Raises:
        IndexError: if t_index is outside the grid
        MapInvariantError: if the resulting map is unphysical beyond 1e-8
    """
    if not -len(coeffs.times) <= t_index < len(coeffs.times):
        raise IndexError(f"Time index {t_index} outside a grid of {len(coeffs.times)} points.")
    if len(g_values) != len(coeffs.times):
        raise ValueError("g(t) and the coefficient grid have different lengths.")

    pi_x, pi_y = coeffs.pi_x[t_index, 0], coeffs.pi_y[t_index, 0]
    delta_x, delta_y = coeffs.delta_x[t_index, 0], coeffs.delta_y[t_index, 0]
    f = pi_x * pi_y + delta_x * delta_y
    g = float(g_values[t_index])
    snap = MapSnapshot(
        t=float(coeffs.times[t_index]),
        f=float(f),
        g=g,
        gain_to_00=float((1.0 - f + g) / 2),
        gain_to_11=float((1.0 - f - g) / 2),
        a0101=complex(pi_x, delta_x),
        transverse=np.array([[pi_x, delta_x], [-delta_y, pi_y]]),
        is_xx=coeffs.decomposition.spec.is_xx(),
    )
    snap.check_invariants()
    return snap


def map_snapshots(
    spec: ChainSpec, times, chain_state: str = "ground"
) -> list[MapSnapshot]:
    """Dynamical map of the qubit on a time grid, from chain parameters to snapshots."""
    coeffs = coefficients(build_adjacency(spec), times)
    g_values = g_of_t(coeffs, chain_correlators(spec, chain_state))
    return [snapshot(coeffs, g_values, i) for i in range(len(coeffs.times))]


def _bounded_state(r: np.ndarray, t: float) -> QubitState:
    length = np.linalg.norm(r)
    if length > 0.5 + MAP_INVARIANT_TOL:
        raise MapInvariantError(f"Evolved state at t={t} has |r| = {length} > 1/2.")
    if length > 0.5:
        r = r * (0.5 / length)
    return QubitState.from_bloch(r)


def evolve_general(initial: QubitState, snap: MapSnapshot) -> QubitState:
    """Affine Bloch action, valid for XY chains as well."""
    r = initial.bloch
    transverse = snap.transverse @ r[:2]
    return _bounded_state(
        np.array([transverse[0], transverse[1], snap.f * r[2] + snap.g / 2]), snap.t
    )


def evolve(initial: QubitState, snap: MapSnapshot) -> QubitState:
    """Apply the map at one time to a qubit state."""
    if not snap.is_xx:
        return evolve_general(initial, snap)
    rho00 = snap.f * initial.rho00 + snap.gain_to_00
    rho01 = snap.a0101 * initial.rho01
    return _bounded_state(np.array([rho01.real, -rho01.imag, rho00 - 0.5]), snap.t)


def xx_trace_distance(p: float, c: complex, f) -> np.ndarray:
    """Trace distance of an evolved pair under an XX map: sqrt((p^2 f + |c|^2) f)."""
    f = np.asarray(f, dtype=float)
    return np.sqrt(np.clip((p**2 * f + abs(c) ** 2) * f, 0.0, None))


def trajectory(
    states: Sequence[QubitState], snapshots: Sequence[MapSnapshot]
) -> pd.DataFrame:
    """
    Evolve every state through every snapshot.

    Returns:
        pd.DataFrame: columns t, state_id, rho00, re_rho01, im_rho01, rx, ry, rz,
            ordered by state then time
    """
    rows = []
    for state_id, state in enumerate(states):
        for snap in snapshots:
            out = evolve(state, snap)
            rx, ry, rz = out.bloch
            rows.append(
                {
                    "t": snap.t,
                    "state_id": state_id,
                    "rho00": out.rho00,
                    "re_rho01": out.rho01.real,
                    "im_rho01": out.rho01.imag,
                    "rx": rx,
                    "ry": ry,
                    "rz": rz,
                }
            )
    return pd.DataFrame(rows)
