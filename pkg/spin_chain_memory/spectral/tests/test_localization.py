import unittest

import numpy as np

from spin_chain_memory.model import ChainSpec
from spin_chain_memory.spectral import (
    band_edges,
    band_tolerance,
    classify_localization,
    in_band_mask,
    localization_scan,
    numeric_localized_levels,
    single_particle_matrix,
)


class TestClassifyLocalization(unittest.TestCase):
    def test_regions(self):
        self.assertEqual(classify_localization(0.0, 1.0), (0, False))
        self.assertEqual(classify_localization(0.8, 1.0), (1, False))
        self.assertEqual(classify_localization(-0.8, 1.0), (1, False))
        self.assertEqual(classify_localization(0.0, 1.5), (2, False))
        self.assertEqual(classify_localization(0.5, 1.5), (1, False))

    def test_boundary(self):
        count, boundary = classify_localization(0.5, 1.0)
        self.assertTrue(boundary)
        self.assertEqual(count, 1)
        self.assertTrue(classify_localization(0.0, np.sqrt(2))[1])

    def test_rejects_non_finite(self):
        with self.assertRaises(ValueError):
            classify_localization(np.nan, 1.0)


class TestNumericLocalizedLevels(unittest.TestCase):
    def test_single_particle_spectrum(self):
        spec = ChainSpec.uniform(J=1.0, h=0.3, h0=0.3, N=20)
        energies = np.linalg.eigvalsh(single_particle_matrix(spec))
        expected = -2.0 * np.cos(np.arange(1, 22) * np.pi / 22) - 0.6
        np.testing.assert_allclose(np.sort(energies), np.sort(expected), atol=1e-12)
        np.testing.assert_allclose(band_edges(spec), (-2.6, 1.4), atol=1e-14)

    def test_band_tolerance_follows_the_edge_level_spacing(self):
        spec = ChainSpec.uniform(J=2.0, h=0.2, h0=0.0, N=400)
        tol = band_tolerance(spec)
        self.assertAlmostEqual(tol, 2.0 * (np.pi / 401) ** 2, places=15)
        self.assertLess(tol, 3.0 / 400)
        lower, upper = band_edges(spec)
        near_edges = np.array(
            [upper + 0.5 * tol, upper + 2 * tol, lower - 0.5 * tol, lower - 2 * tol]
        )
        np.testing.assert_array_equal(in_band_mask(spec, near_edges), [True, False, True, False])

        homogeneous = ChainSpec.uniform(J=1.0, h=0.0, h0=0.0, N=400)
        energies = np.linalg.eigvalsh(single_particle_matrix(homogeneous))
        self.assertTrue(in_band_mask(homogeneous, energies).all())

    def test_homogeneous_chain_has_no_bound_level(self):
        report = numeric_localized_levels(ChainSpec.uniform(J=1.0, h=0.0, h0=0.0, N=400))
        self.assertEqual(report.numeric_count, 0)
        self.assertTrue(report.consistent)

    def test_strong_coupling_binds_two_levels_at_the_qubit(self):
        report = numeric_localized_levels(ChainSpec.uniform(J=1.0, J0=1.5, h=0.0, h0=0.0, N=400))
        self.assertEqual(report.numeric_count, 2)
        # E^2 = J0^4/(J0^2 - 1) with decay ratio 0.894 per site
        self.assertTrue(np.all(report.qubit_weights > 0.2))
        self.assertTrue(np.all(report.ipr > 0.05))
        np.testing.assert_allclose(report.energies[0], -report.energies[1], atol=1e-10)

    def test_localization_grows_with_detuning(self):
        iprs = [
            numeric_localized_levels(ChainSpec.uniform(J=1.0, h=h, h0=0.0, N=200)).ipr[0]
            for h in (0.7, 0.9, 1.1, 1.3)
        ]
        self.assertTrue(np.all(np.diff(iprs) > 0))

    def test_rejects_anisotropic_chain(self):
        with self.assertRaises(ValueError):
            numeric_localized_levels(ChainSpec.uniform(N=10, gamma=0.1))


class TestLocalizationScan(unittest.TestCase):
    def test_counts_agree_away_from_the_parabolae(self):
        table = localization_scan(
            np.linspace(0.0, 1.5, 16), np.linspace(0.2, 1.6, 15), n_sites=400
        )
        self.assertEqual(len(table), 16 * 15)
        far = table[~table["near_boundary"]]
        self.assertGreater(len(far), 150)
        self.assertTrue((far["analytic"] == far["numeric"]).all())


if __name__ == "__main__":
    unittest.main()
