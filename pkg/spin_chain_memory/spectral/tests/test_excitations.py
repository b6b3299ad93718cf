import unittest

import numpy as np

from spin_chain_memory.dynamics import QubitState, probe_states
from spin_chain_memory.model import ChainSpec
from spin_chain_memory.spectral import excitation_distribution, flatness


class TestExcitationDistribution(unittest.TestCase):
    def setUp(self):
        self.spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=49)

    def test_particle_number_sum_rule(self):
        distribution = excitation_distribution(self.spec)
        self.assertAlmostEqual(distribution.total, 0.5 + distribution.k_fermi, places=10)
        self.assertEqual(distribution.qubit_population, 0.5)

    def test_sum_rule_for_computational_qubit_states(self):
        probes = probe_states()
        excited = excitation_distribution(self.spec, probes["1"])
        empty = excitation_distribution(self.spec, probes["0"])
        self.assertAlmostEqual(excited.total, excited.k_fermi + 1, places=10)
        self.assertAlmostEqual(empty.total, empty.k_fermi, places=10)

    def test_occupations_are_probabilities(self):
        for h in (0.4, 0.5, 0.6):
            spec = ChainSpec.uniform(J=1.0, J0=1.0, h=h, h0=0.0, N=49)
            occupations = excitation_distribution(spec, QubitState.pure(1.0, 0.3)).occupations
            self.assertTrue(np.all(occupations >= 0.0))
            self.assertTrue(np.all(occupations <= 1.0))

    def test_spike_on_the_bound_level(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.6, h0=0.0, N=49)
        distribution = excitation_distribution(spec)
        bound = distribution.occupations[~distribution.in_band]
        self.assertEqual(bound.size, 1)
        self.assertGreater(bound[0], 0.1)
        upper_band = distribution.in_band & (distribution.energies > 0.5)
        self.assertGreater(np.count_nonzero(upper_band), 0)
        self.assertGreater(bound[0], distribution.occupations[upper_band].max())

    def test_no_bound_level_at_the_markov_point(self):
        distribution = excitation_distribution(self.spec)
        self.assertTrue(np.all(distribution.in_band))
        self.assertGreaterEqual(flatness(distribution), 0.0)

    def test_frame(self):
        frame = excitation_distribution(self.spec).to_frame()
        self.assertEqual(list(frame.columns), ["energy", "occupation"])
        self.assertEqual(len(frame), 50)
        self.assertTrue(frame["energy"].is_monotonic_increasing)


if __name__ == "__main__":
    unittest.main()
