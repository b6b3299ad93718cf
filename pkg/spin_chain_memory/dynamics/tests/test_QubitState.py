import unittest

import numpy as np

from spin_chain_memory.dynamics import (
    QubitState,
    equatorial_pair,
    pair_difference,
    probe_states,
    trace_distance,
)


class TestQubitState(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

    def test_rejects_states_outside_the_ball(self):
        with self.assertRaises(ValueError):
            QubitState(rho00=1.0, rho01=0.5)
        with self.assertRaises(ValueError):
            QubitState(rho00=np.nan, rho01=0.0)

    def test_bloch_round_trip(self):
        state = QubitState(rho00=0.7, rho01=0.2 - 0.1j)
        np.testing.assert_allclose(state.bloch, [0.2, 0.1, 0.2])
        rebuilt = QubitState.from_bloch(state.bloch)
        self.assertAlmostEqual(rebuilt.rho00, state.rho00, places=15)
        self.assertAlmostEqual(rebuilt.rho01, state.rho01, places=15)

    def test_density_matrix(self):
        rho = QubitState(rho00=0.7, rho01=0.2 - 0.1j).density_matrix()
        np.testing.assert_allclose(rho, rho.conj().T)
        self.assertAlmostEqual(np.trace(rho).real, 1.0)
        self.assertEqual(QubitState.from_density_matrix(rho), QubitState(0.7, 0.2 - 0.1j))

    def test_from_density_matrix_validation(self):
        with self.assertRaises(ValueError):
            QubitState.from_density_matrix(np.eye(3) / 3)
        with self.assertRaises(ValueError):
            QubitState.from_density_matrix(np.array([[0.5, 0.1], [0.2, 0.5]]))
        with self.assertRaises(ValueError):
            QubitState.from_density_matrix(np.eye(2))

    def test_pure_states_have_unit_purity(self):
        for _ in range(20):
            state = QubitState.random_pure(self.rng)
            self.assertAlmostEqual(state.purity, 1.0, places=12)
        self.assertAlmostEqual(QubitState.maximally_mixed().purity, 0.5)

    def test_pure_matches_vector(self):
        theta, phi = 1.1, 0.4
        psi = np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])
        np.testing.assert_allclose(
            QubitState.pure(theta, phi).density_matrix(), np.outer(psi, psi.conj()), atol=1e-14
        )

    def test_trace_distance_matches_eigenvalues(self):
        for _ in range(20):
            s1 = QubitState.random_pure(self.rng).mix(QubitState.maximally_mixed(), 0.8)
            s2 = QubitState.random_pure(self.rng)
            eigenvalues = np.linalg.eigvalsh(s1.density_matrix() - s2.density_matrix())
            self.assertAlmostEqual(trace_distance(s1, s2), 0.5 * np.sum(np.abs(eigenvalues)))

    def test_antipodal_pairs(self):
        plus, minus = equatorial_pair()
        self.assertAlmostEqual(trace_distance(plus, minus), 1.0)
        probes = probe_states()
        self.assertAlmostEqual(trace_distance(probes["0"], probes["1"]), 1.0)
        self.assertEqual(pair_difference(probes["0"], probes["1"]), (-1.0, 0j))

    def test_plus_y_probe(self):
        psi = np.array([1.0, 1j]) / np.sqrt(2)
        np.testing.assert_allclose(
            probe_states()["+y"].density_matrix(), np.outer(psi, psi.conj()), atol=1e-15
        )


if __name__ == "__main__":
    unittest.main()
