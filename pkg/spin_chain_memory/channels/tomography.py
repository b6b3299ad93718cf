#!/usr/bin/env python3
"""
Single-qubit process tomography.

A channel is written E(rho) = sum_mn chi_mn K_m rho K_n^dagger in the fixed operator basis
K = (I, X, Y, Z). The outputs of the probes |0>, |1>, |+> and |+y> determine E on the four
matrix units |n><m| through

    E(|n><m|) = E(|+><+|) + i E(|+y><+y|) - (1 + i)/2 [E(|n><n|) + E(|m><m|)]

(with i -> -i for |1><0|). Writing E(rho_j) = sum_k lambda_jk rho_k and
K_m rho_j K_n^dagger = sum_k beta^mn_jk rho_k gives the linear system lambda = beta chi.

Classes:
    CompletePositivityError
    ChiMatrix
    KrausSet

Functions:
    probe_outputs(MapSnapshot):
    process_tomography(dict, float):
    apply_chi(ChiMatrix, np.ndarray):
    kraus_from_chi(ChiMatrix):
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.linalg

from ..constants import CHI_CLIP_TOL, CHI_ERROR_TOL
from ..dynamics import MapSnapshot, QubitState, evolve, probe_states

logger = logging.getLogger(__name__)

PAULI_LABELS = ("I", "X", "Y", "Z")
PAULI_BASIS = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
# matrix units |0><0|, |0><1|, |1><0|, |1><1|
MATRIX_UNITS = np.eye(4, dtype=complex).reshape(4, 2, 2)

# beta[(j, k), (m, n)] = <rho_k, K_m rho_j K_n^dagger>
BETA = np.einsum("mab,jbc,ndc->jadmn", PAULI_BASIS, MATRIX_UNITS, PAULI_BASIS.conj()).reshape(
    16, 16
)
BETA_LU = scipy.linalg.lu_factor(BETA)

PROBE_KEYS = ("0", "1", "+", "+y")

Matrix = Union[np.ndarray, QubitState]


class CompletePositivityError(ValueError):
    """A process matrix has an eigenvalue too negative to be numerical noise."""


@dataclass(frozen=True)
class ChiMatrix:
    """
    Process matrix in the basis PAULI_LABELS.

    Attributes:
        matrix (np.ndarray): 4x4 Hermitian matrix, unit trace for trace-preserving maps
        t (float): time the channel belongs to
    """

    matrix: np.ndarray
    t: float = np.nan

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def eigenvalues(self) -> np.ndarray:
        return scipy.linalg.eigvalsh(self.matrix)

    def normalized(self) -> np.ndarray:
        return self.matrix / self.trace

    def trace_condition(self) -> np.ndarray:
        """sum_mn chi_mn K_n^dagger K_m, the identity for a trace-preserving map."""
        return np.einsum("mn,nba,mbc->ac", self.matrix, PAULI_BASIS.conj(), PAULI_BASIS)


@dataclass(frozen=True)
class KrausSet:
    """
    Attributes:
        operators (np.ndarray): (n, 2, 2) Kraus operators
        weights (np.ndarray): eigenvalues of chi they were built from
    """

    operators: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.operators)

    def apply(self, rho: Matrix) -> np.ndarray:
        rho = _as_matrix(rho)
        return np.einsum("iab,bc,idc->ad", self.operators, rho, self.operators.conj())

    def completeness(self) -> np.ndarray:
        return np.einsum("iba,ibc->ac", self.operators.conj(), self.operators)


def _as_matrix(rho: Matrix) -> np.ndarray:
    if isinstance(rho, QubitState):
        return rho.density_matrix()
    return np.asarray(rho, dtype=complex)


def _validated_output(key: str, rho: Matrix) -> np.ndarray:
    rho = _as_matrix(rho)
    if rho.shape != (2, 2):
        raise ValueError(f"Output of probe {key} has shape {rho.shape}, expected (2, 2).")
    if not np.allclose(rho, rho.conj().T, atol=1e-10):
        raise ValueError(f"Output of probe {key} is not Hermitian.")
    if abs(np.trace(rho) - 1.0) > 1e-8:
        raise ValueError(f"Output of probe {key} has trace {np.trace(rho).real:.12f}.")
    smallest = scipy.linalg.eigvalsh(rho)[0]
    if smallest < -CHI_ERROR_TOL:
        raise ValueError(f"Output of probe {key} has eigenvalue {smallest:.3g}.")
    return rho


def probe_outputs(snap: MapSnapshot) -> dict[str, np.ndarray]:
    """Density matrices of the four probes evolved by the map at one time."""
    return {key: evolve(state, snap).density_matrix() for key, state in probe_states().items()}


def process_tomography(outputs: dict[str, Matrix], t: float = np.nan) -> ChiMatrix:
    """
    Reconstruct chi from the images of |0>, |1>, |+> and |+y>.

    Args:
        outputs (dict): maps "0", "1", "+", "+y" to 2x2 density matrices or QubitStates
        t (float): time stamp stored on the result

    Raises:
        ValueError: if a probe is missing or its output is not a density matrix
    """
    missing = [key for key in PROBE_KEYS if key not in outputs]
    if missing:
        raise ValueError(f"Missing probe outputs {missing}.")
    e0, e1, ep, ey = (_validated_output(key, outputs[key]) for key in PROBE_KEYS)

    populations = e0 + e1
    images = np.array(
        [
            e0,
            ep + 1j * ey - (1 + 1j) / 2 * populations,
            ep - 1j * ey - (1 - 1j) / 2 * populations,
            e1,
        ]
    )
    chi = scipy.linalg.lu_solve(BETA_LU, images.reshape(16)).reshape(4, 4)
    if not np.allclose(chi, chi.conj().T, atol=1e-8):
        raise ValueError("Reconstructed process matrix is not Hermitian.")
    return ChiMatrix(matrix=(chi + chi.conj().T) / 2, t=t)


def apply_chi(chi: ChiMatrix, rho: Matrix) -> np.ndarray:
    """sum_mn chi_mn K_m rho K_n^dagger."""
    return np.einsum(
        "mn,mab,bc,ndc->ad", chi.matrix, PAULI_BASIS, _as_matrix(rho), PAULI_BASIS.conj()
    )


def kraus_from_chi(chi: ChiMatrix) -> KrausSet:
    """
    Kraus operators K_i = sqrt(D_i) sum_j U_ji K_j from chi = U D U^dagger.

    Eigenvalues down to -1e-6 are clipped to zero; levels with weight at most 1e-8 are
    dropped.

    Raises:
        CompletePositivityError: if an eigenvalue lies below -1e-6
    """
    weights, vectors = scipy.linalg.eigh(chi.matrix)
    if weights[0] < -CHI_ERROR_TOL:
        raise CompletePositivityError(
            f"Process matrix at t = {chi.t} has eigenvalue {weights[0]:.3g}."
        )
    if weights[0] < -CHI_CLIP_TOL:
        logger.warning(f"Clipping chi eigenvalue {weights[0]:.3g} at t = {chi.t}.")
    weights = np.clip(weights, 0.0, None)
    keep = weights > CHI_CLIP_TOL
    amplitudes = vectors[:, keep] * np.sqrt(weights[keep])
    operators = np.einsum("ji,jab->iab", amplitudes, PAULI_BASIS)
    order = np.argsort(weights[keep])[::-1]
    return KrausSet(operators=operators[order], weights=weights[keep][order])
