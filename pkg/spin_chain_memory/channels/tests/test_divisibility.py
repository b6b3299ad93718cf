import dataclasses
import unittest

import numpy as np

from spin_chain_memory.channels import (
    SingularMapError,
    choi_matrix,
    choi_positivity,
    divisibility_C,
    divisibility_grid,
    intermediate_map,
)
from spin_chain_memory.dynamics import MapSnapshot, QubitState, evolve, map_snapshots
from spin_chain_memory.model import ChainSpec
from spin_chain_memory.utils import setup_default_logger


class TestIntermediateMap(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.8, h0=0.0, N=60)
        self.times = np.linspace(0.0, 12.0, 25)
        self.snaps = map_snapshots(self.spec, self.times)

    def test_zero_step_is_identity(self):
        snap = self.snaps[7]
        psi = intermediate_map(snap, snap)
        self.assertAlmostEqual(psi.ratio_f, 1.0, places=14)
        self.assertAlmostEqual(abs(psi.ratio_coh - 1.0), 0.0, places=14)
        self.assertAlmostEqual(psi.gain_00, 0.0, places=14)
        self.assertAlmostEqual(psi.gain_11, 0.0, places=14)
        np.testing.assert_allclose(choi_positivity(psi), [0.0, 0.0, 0.0, 1.0], atol=1e-14)

    def test_zero_step_gives_squared_bloch_length(self):
        snap = self.snaps[3]
        probe = QubitState(rho00=0.7, rho01=0.1 + 0.2j)
        expected = 4 * float(np.dot(probe.bloch, probe.bloch))
        self.assertAlmostEqual(divisibility_C(snap, snap, probe), expected, places=12)
        self.assertAlmostEqual(divisibility_C(snap, snap), 1.0, places=12)

    def test_composition_reproduces_the_later_map(self):
        for _ in range(5):
            state = QubitState.random_pure(self.rng)
            i, j = sorted(self.rng.choice(len(self.snaps), size=2, replace=False))
            earlier, later = self.snaps[i], self.snaps[j]
            composed = intermediate_map(earlier, later).apply(evolve(state, earlier))
            np.testing.assert_allclose(
                composed, evolve(state, later).density_matrix(), atol=1e-9
            )

    def test_choi_matrix_has_unit_trace(self):
        psi = intermediate_map(self.snaps[4], self.snaps[10])
        choi = choi_matrix(psi)
        self.assertAlmostEqual(np.trace(choi).real, 1.0, places=12)
        np.testing.assert_allclose(choi, choi.conj().T, atol=1e-15)

    def test_singular_map_names_the_denominator(self):
        dead = dataclasses.replace(MapSnapshot.identity(2.0), f=0.0, a0101=0.0j)
        with self.assertRaisesRegex(SingularMapError, r"f\(t\)"):
            intermediate_map(dead, self.snaps[-1])
        no_coherence = dataclasses.replace(MapSnapshot.identity(2.0), a0101=0.0j)
        with self.assertRaisesRegex(SingularMapError, r"A01\(t\)"):
            intermediate_map(no_coherence, self.snaps[-1])

    def test_refusals(self):
        with self.assertRaises(ValueError):
            intermediate_map(self.snaps[5], self.snaps[2])
        anisotropic = dataclasses.replace(self.snaps[2], is_xx=False)
        with self.assertRaises(ValueError):
            intermediate_map(anisotropic, self.snaps[5])


class TestDivisibilityGrid(unittest.TestCase):
    def setUp(self):
        self.grid = np.arange(0.0, 30.0 + 1e-9, 1.0)
        self.logger = setup_default_logger()

    def test_markov_point_is_divisible(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=99)
        table = divisibility_grid(spec, self.grid, self.grid, logger=self.logger)
        self.assertEqual(list(table.columns), ["t", "t1", "C", "choi_min"])
        self.assertEqual(len(table), len(self.grid) ** 2)
        self.assertFalse(table["C"].isna().any())
        self.assertTrue((table["C"] >= -1e-8).all())
        self.assertTrue((table["C"] <= 1 + 1e-8).all())
        self.assertTrue((table["choi_min"] >= -1e-8).all())

    def test_strong_detuning_breaks_divisibility(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=1.1, h0=0.0, N=99)
        table = divisibility_grid(spec, self.grid, self.grid, logger=self.logger)
        violating = table[table["C"] > 1 + 1e-4]
        self.assertGreater(len(violating), 0)
        self.assertTrue((violating["choi_min"] < 0).all())

    def test_negative_times_are_rejected(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=20)
        with self.assertRaises(ValueError):
            divisibility_grid(spec, [-1.0, 0.0], [0.0], logger=self.logger)


if __name__ == "__main__":
    unittest.main()
