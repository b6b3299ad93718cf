#!/usr/bin/env python3
"""
Brute-force many-body reference for small chains.

The full Hamiltonian of qubit plus chain is built in the 2^(N+1) dimensional computational
basis with site 0 as the most significant bit:

    H = -1/2 sum_n (Jx_n X_n X_{n+1} + Jy_n Y_n Y_{n+1}) + sum_n h_n Z_n

so that the computational state |0> is the spin anti-aligned with a positive field. The chain
is prepared either in the ground state of its own Hamiltonian or fully polarized in |0...0>,
the qubit in any density matrix, and the product state is evolved exactly.

Functions:
    chain_hamiltonian(ChainSpec):
    full_hamiltonian(ChainSpec):
    chain_ground_state(ChainSpec):
    ground_state_magnetization(ChainSpec):
    ground_state_string_correlator(ChainSpec, int, int):
    ed_oracle_evolve(ChainSpec, state, str, np.ndarray):
"""

from functools import reduce

import numpy as np
import scipy.linalg

from ..constants import ED_MAX_SITES
from .ChainSpec import ChainSpec

PAULI_I = np.eye(2)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])

CHAIN_STATE_LABELS = ("ground", "polarized")


def _check_size(spec: ChainSpec):
    if spec.n_sites > ED_MAX_SITES:
        raise ValueError(
            f"Exact diagonalization is limited to N <= {ED_MAX_SITES} chain sites, got {spec.n_sites}."
        )


def site_operator(op: np.ndarray, site: int, n_qubits: int) -> np.ndarray:
    """op acting on one site of an n_qubits register, identity elsewhere."""
    factors = [PAULI_I] * n_qubits
    factors[site] = op
    return reduce(np.kron, factors)


def _hamiltonian(spec: ChainSpec, first_site: int) -> np.ndarray:
    n_qubits = spec.n_sites + 1 - first_site
    dim = 2**n_qubits
    hamiltonian = np.zeros((dim, dim), dtype=complex)
    for bond in range(first_site, spec.n_sites):
        left, right = bond - first_site, bond + 1 - first_site
        for op, coupling in ((PAULI_X, spec.jx[bond]), (PAULI_Y, spec.jy[bond])):
            hamiltonian -= (
                0.5
                * coupling
                * site_operator(op, left, n_qubits)
                @ site_operator(op, right, n_qubits)
            )
    for site in range(first_site, spec.n_sites + 1):
        hamiltonian += spec.fields[site] * site_operator(
            PAULI_Z, site - first_site, n_qubits
        )
    return hamiltonian


def full_hamiltonian(spec: ChainSpec) -> np.ndarray:
    _check_size(spec)
    return _hamiltonian(spec, first_site=0)


def chain_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Hamiltonian of chain sites 1..N alone (the qubit bond and qubit field dropped)."""
    _check_size(spec)
    return _hamiltonian(spec, first_site=1)


def chain_ground_state(spec: ChainSpec, gap_tol: float = 1e-9) -> np.ndarray:
    """
    Ground state of the chain Hamiltonian.

    Raises:
        ValueError: if the ground state is degenerate within gap_tol
    """
    energies, vectors = scipy.linalg.eigh(chain_hamiltonian(spec))
    if energies.size > 1 and energies[1] - energies[0] < gap_tol:
        raise ValueError(
            f"Chain ground state is degenerate (gap {energies[1] - energies[0]:.2e}); "
            "pick a field away from level crossings."
        )
    return vectors[:, 0]


def _chain_state(spec: ChainSpec, chain_state_label: str) -> np.ndarray:
    if chain_state_label == "ground":
        return chain_ground_state(spec)
    if chain_state_label == "polarized":
        state = np.zeros(2**spec.n_sites, dtype=complex)
        state[0] = 1.0
        return state
    raise ValueError(
        f"Unknown chain state [{chain_state_label}]; expected one of {CHAIN_STATE_LABELS}."
    )


def ground_state_magnetization(spec: ChainSpec) -> np.ndarray:
    """<Z_n> for chain sites n = 1..N in the chain ground state."""
    psi = chain_ground_state(spec)
    n_qubits = spec.n_sites
    return np.array(
        [
            np.real(np.vdot(psi, site_operator(PAULI_Z, site, n_qubits) @ psi))
            for site in range(n_qubits)
        ]
    )


def ground_state_string_correlator(spec: ChainSpec, n: int, m: int) -> float:
    """
    1/2 <X_n Z_{n+1} ... Z_{m-1} X_m> in the chain ground state, chain sites 1 <= n < m <= N.

    This is the fermionic one-body correlator <c_n^dag c_m + c_m^dag c_n>/2 after the
    Jordan-Wigner mapping.
    """
    if not 1 <= n < m <= spec.n_sites:
        raise ValueError(f"Need 1 <= n < m <= {spec.n_sites}, got n={n}, m={m}.")
    psi = chain_ground_state(spec)
    n_qubits = spec.n_sites
    factors = [PAULI_I] * n_qubits
    factors[n - 1] = PAULI_X
    factors[m - 1] = PAULI_X
    for site in range(n, m - 1):
        factors[site] = PAULI_Z
    operator = reduce(np.kron, factors)
    return 0.5 * float(np.real(np.vdot(psi, operator @ psi)))


def _qubit_density_matrix(qubit_state) -> np.ndarray:
    if hasattr(qubit_state, "density_matrix"):
        rho = qubit_state.density_matrix()
    else:
        rho = np.asarray(qubit_state, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"Qubit state must be a 2x2 density matrix, got shape {rho.shape}.")
    return rho


def ed_oracle_evolve(
    spec: ChainSpec, qubit_state, chain_state_label: str, times
) -> np.ndarray:
    """
    Reduced qubit density matrices from exact unitary evolution of the whole system.

    Args:
        spec (ChainSpec): chain with N <= 10 sites
        qubit_state: QubitState or 2x2 density matrix of the qubit at t = 0
        chain_state_label (str): "ground" or "polarized"
        times (np.ndarray): evaluation times

    Returns:
        rho (np.ndarray): shape (len(times), 2, 2)

    Raises:
        ValueError: if the chain is too large or the chain state is unknown or degenerate
    """
    _check_size(spec)
    rho_qubit = _qubit_density_matrix(qubit_state)
    chain = _chain_state(spec, chain_state_label)
    times = np.atleast_1d(np.asarray(times, dtype=float))

    energies, vectors = scipy.linalg.eigh(full_hamiltonian(spec))
    weights, qubit_vectors = scipy.linalg.eigh(rho_qubit)
    overlaps = [
        vectors.conj().T @ np.kron(qubit_vectors[:, a], chain) for a in range(2)
    ]

    result = np.empty((times.size, 2, 2), dtype=complex)
    for i, t in enumerate(times):
        if t == 0:
            result[i] = rho_qubit
            continue
        phases = np.exp(-1j * energies * t)
        rho = np.zeros((2, 2), dtype=complex)
        for weight, overlap in zip(weights, overlaps):
            if weight <= 0:
                continue
            psi = (vectors @ (phases * overlap)).reshape(2, -1)
            rho += weight * psi @ psi.conj().T
        result[i] = rho
    return result
