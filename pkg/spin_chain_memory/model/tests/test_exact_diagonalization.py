import unittest

import numpy as np

from spin_chain_memory.model import (
    ChainSpec,
    chain_ground_state,
    ed_oracle_evolve,
    ground_state_magnetization,
    ground_state_string_correlator,
)

PLUS = 0.5 * np.array([[1.0, 1.0], [1.0, 1.0]], dtype=complex)


class TestExactDiagonalization(unittest.TestCase):
    def setUp(self):
        self.times = np.linspace(0.0, 5.0, 26)

    def test_two_spin_rabi(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.0, h0=0.0, N=1)
        rho = ed_oracle_evolve(spec, PLUS, "polarized", self.times)
        sx = np.real(rho[:, 0, 1] + rho[:, 1, 0]) / 2
        np.testing.assert_allclose(sx, np.cos(self.times) / 2, atol=1e-12)

    def test_zero_time_returns_input(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.3, h=0.5, h0=0.0, N=6)
        rho0 = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
        rho = ed_oracle_evolve(spec, rho0, "ground", [0.0, 1.0])
        np.testing.assert_array_equal(rho[0], rho0)
        self.assertAlmostEqual(np.trace(rho[1]).real, 1.0, places=12)
        np.testing.assert_allclose(rho[1], rho[1].conj().T, atol=1e-12)

    def test_refuses_large_chains(self):
        with self.assertRaises(ValueError):
            ed_oracle_evolve(ChainSpec.uniform(N=11), PLUS, "polarized", self.times)

    def test_unknown_chain_state(self):
        with self.assertRaises(ValueError):
            ed_oracle_evolve(ChainSpec.uniform(N=2), PLUS, "thermal", self.times)

    def test_degenerate_ground_state_is_refused(self):
        # N=5 at zero field has a zero-energy fermion mode
        with self.assertRaises(ValueError):
            chain_ground_state(ChainSpec.uniform(J=1.0, h=0.0, N=5))

    def test_half_filled_ground_state(self):
        spec = ChainSpec.uniform(J=1.0, h=0.0, N=6)
        magnetization = ground_state_magnetization(spec)
        self.assertEqual(magnetization.shape, (6,))
        self.assertAlmostEqual(np.sum(magnetization), 0.0, places=10)
        np.testing.assert_allclose(magnetization, magnetization[::-1], atol=1e-10)

    def test_saturated_ground_state_is_fully_flipped(self):
        spec = ChainSpec.uniform(J=1.0, h=1.5, N=4)
        np.testing.assert_allclose(ground_state_magnetization(spec), -1.0, atol=1e-10)
        self.assertAlmostEqual(ground_state_string_correlator(spec, 1, 2), 0.0, places=10)

    def test_string_correlator_index_checks(self):
        spec = ChainSpec.uniform(J=1.0, h=0.0, N=4)
        with self.assertRaises(ValueError):
            ground_state_string_correlator(spec, 2, 2)
        with self.assertRaises(ValueError):
            ground_state_string_correlator(spec, 0, 3)


if __name__ == "__main__":
    unittest.main()
