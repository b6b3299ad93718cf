#!/usr/bin/env python3
"""
Single-qubit density matrices in the half-Bloch convention.

The half-Bloch vector r = (<s^x>, <s^y>, <s^z>) collects spin-1/2 expectations, so pure states
have |r| = 1/2 and the trace distance of two states is |r1 - r2|.

Classes:
    QubitState

Functions:
    trace_distance(QubitState, QubitState):
    pair_difference(QubitState, QubitState):
    probe_states():
"""

from dataclasses import dataclass

import numpy as np

from ..constants import STATE_TOL


@dataclass(frozen=True)
class QubitState:
    """
    Attributes:
        rho00 (float): population of the computational |0>
        rho01 (complex): coherence <0|rho|1>
    """

    rho00: float
    rho01: complex

    def __post_init__(self):
        object.__setattr__(self, "rho00", float(np.real(self.rho00)))
        object.__setattr__(self, "rho01", complex(self.rho01))
        if not (np.isfinite(self.rho00) and np.isfinite(self.rho01)):
            raise ValueError("Qubit state entries must be finite.")
        length = np.linalg.norm(self.bloch)
        if length > 0.5 + STATE_TOL:
            raise ValueError(f"Half-Bloch vector has length {length:.15f} > 1/2.")

    @property
    def rho11(self) -> float:
        return 1.0 - self.rho00

    @property
    def rho10(self) -> complex:
        return self.rho01.conjugate()

    @property
    def bloch(self) -> np.ndarray:
        return np.array([self.rho01.real, -self.rho01.imag, self.rho00 - 0.5])

    @property
    def purity(self) -> float:
        return 0.5 + 2.0 * float(np.dot(self.bloch, self.bloch))

    def density_matrix(self) -> np.ndarray:
        return np.array([[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=complex)

    def mix(self, other: "QubitState", weight: float) -> "QubitState":
        """weight * self + (1 - weight) * other."""
        return QubitState(
            rho00=weight * self.rho00 + (1 - weight) * other.rho00,
            rho01=weight * self.rho01 + (1 - weight) * other.rho01,
        )

    @classmethod
    def from_bloch(cls, r) -> "QubitState":
        rx, ry, rz = np.asarray(r, dtype=float)
        return cls(rho00=0.5 + rz, rho01=complex(rx, -ry))

    @classmethod
    def from_density_matrix(cls, rho, atol: float = 1e-10) -> "QubitState":
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise ValueError(f"Expected a 2x2 matrix, got shape {rho.shape}.")
        if not np.allclose(rho, rho.conj().T, atol=atol):
            raise ValueError("Density matrix is not Hermitian.")
        if abs(np.trace(rho) - 1.0) > atol:
            raise ValueError(f"Density matrix has trace {np.trace(rho).real:.12f}.")
        return cls(rho00=rho[0, 0].real, rho01=rho[0, 1])

    @classmethod
    def pure(cls, theta: float, phi: float = 0.0) -> "QubitState":
        """cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>."""
        return cls(
            rho00=np.cos(theta / 2) ** 2,
            rho01=np.cos(theta / 2) * np.sin(theta / 2) * np.exp(-1j * phi),
        )

    @classmethod
    def random_pure(cls, rng: np.random.Generator) -> "QubitState":
        """Pure state drawn uniformly from the Bloch sphere."""
        direction = rng.standard_normal(3)
        direction /= np.linalg.norm(direction)
        return cls.from_bloch(0.5 * direction)

    @classmethod
    def maximally_mixed(cls) -> "QubitState":
        return cls(rho00=0.5, rho01=0.0)


def trace_distance(s1: QubitState, s2: QubitState) -> float:
    """1/2 Tr|rho1 - rho2|, the Euclidean distance of the half-Bloch vectors."""
    return float(np.linalg.norm(s1.bloch - s2.bloch))


def pair_difference(s1: QubitState, s2: QubitState) -> tuple[float, complex]:
    """(p, c) with p = rho11^(1) - rho11^(2) and c = rho01^(1) - rho01^(2)."""
    return s1.rho11 - s2.rho11, s1.rho01 - s2.rho01


def probe_states() -> dict[str, QubitState]:
    """|0>, |1>, |+> and |+y> = (|0> + i|1>)/sqrt(2), the inputs of process tomography."""
    return {
        "0": QubitState(rho00=1.0, rho01=0.0),
        "1": QubitState(rho00=0.0, rho01=0.0),
        "+": QubitState(rho00=0.5, rho01=0.5),
        "+y": QubitState(rho00=0.5, rho01=-0.5j),
    }


def equatorial_pair() -> tuple[QubitState, QubitState]:
    """Antipodal pure states on the equator, |+> and |->."""
    return QubitState(rho00=0.5, rho01=0.5), QubitState(rho00=0.5, rho01=-0.5)
