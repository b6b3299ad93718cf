import unittest

import numpy as np

from spin_chain_memory.channels import fixed_point_ensemble, offset_scaling
from spin_chain_memory.model import ChainSpec
from spin_chain_memory.utils import setup_default_logger


class TestFixedPoint(unittest.TestCase):
    def setUp(self):
        self.markov = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=149)

    def test_markov_point_collapses_the_ensemble(self):
        report = fixed_point_ensemble(
            self.markov, 100.0, n_states=500, rng=np.random.default_rng(42)
        )
        self.assertEqual(report.final_states.shape, (500, 3))
        self.assertLessEqual(report.max_spread, np.sqrt(report.f) + 1e-12)
        self.assertLess(report.max_spread, 0.02)
        self.assertLess(report.transverse_offset, 1e-3)

    def test_bound_state_keeps_a_finite_volume(self):
        markov = fixed_point_ensemble(
            self.markov, 100.0, n_states=200, rng=np.random.default_rng(42)
        )
        detuned = fixed_point_ensemble(
            ChainSpec.uniform(J=1.0, J0=1.0, h=0.6, h0=0.0, N=149),
            100.0,
            n_states=200,
            rng=np.random.default_rng(42),
        )
        # the bound level keeps about 0.3 of the weight at h = 0.6, a ratio near 5 at t = 100
        self.assertGreater(detuned.max_spread, 3 * markov.max_spread)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            fixed_point_ensemble(self.markov, 0.0)
        with self.assertRaises(ValueError):
            fixed_point_ensemble(self.markov, 10.0, n_states=0)


class TestOffsetScaling(unittest.TestCase):
    def test_table_over_chain_lengths(self):
        template = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=30)
        table, exponent = offset_scaling(
            template,
            [30, 45, 60],
            final_time=100.0,
            n_states=50,
            rng=np.random.default_rng(42),
            logger=setup_default_logger(),
        )
        self.assertEqual(list(table.columns), ["n_sites", "final_time", "z_offset", "max_spread"])
        self.assertEqual(list(table["n_sites"]), [30, 45, 60])
        np.testing.assert_allclose(table["final_time"], [20.0, 30.0, 40.0])
        self.assertTrue(np.isnan(exponent) or np.isfinite(exponent))


if __name__ == "__main__":
    unittest.main()
