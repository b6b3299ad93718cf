import unittest

import numpy as np

from spin_chain_memory.model import (
    ChainSpec,
    build_adjacency,
    coefficient_series_check,
    coefficients,
    equal_field_coefficients,
    markov_point_coefficients,
    origin_coefficients,
    sqrt2_coupling_coefficients,
)


def random_spec(rng, n_sites: int, xx: bool = False) -> ChainSpec:
    jx = rng.uniform(0.2, 1.2, n_sites)
    jy = jx if xx else rng.uniform(0.2, 1.2, n_sites)
    fields = rng.uniform(-1.0, 1.0, n_sites + 1)
    return ChainSpec(n_sites=n_sites, jx=jx, jy=jy, fields=fields)


class TestBuildAdjacency(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

    def test_two_site_hopping(self):
        decomp = build_adjacency(ChainSpec.uniform(J=1.0, h=0.0, h0=0.0, N=1))
        np.testing.assert_array_equal(decomp.tau, [[0.0, 1.0], [1.0, 0.0]])
        np.testing.assert_allclose(decomp.singular_values, [1.0, 1.0], atol=1e-14)

    def test_decoupled_fields(self):
        decomp = build_adjacency(ChainSpec.uniform(J=1.0, J0=0.0, h=1.0, h0=1.0, N=1))
        np.testing.assert_array_equal(decomp.tau, -2.0 * np.eye(2))
        np.testing.assert_allclose(decomp.singular_values, [2.0, 2.0], atol=1e-14)

    def test_entries_follow_bond_convention(self):
        spec = ChainSpec(n_sites=2, jx=[0.3, 0.5], jy=[0.7, 0.9], fields=[0.1, 0.2, 0.4])
        tau = build_adjacency(spec).tau
        expected = np.array(
            [
                [-0.2, 0.7, 0.0],
                [0.3, -0.4, 0.9],
                [0.0, 0.5, -0.8],
            ]
        )
        np.testing.assert_allclose(tau, expected)

    def test_singular_values_match_eigensolver(self):
        decomp = build_adjacency(ChainSpec.uniform(J=1.0, h=0.0, h0=0.0, N=7))
        eigenvalues = np.linalg.eigvalsh(decomp.tau)
        np.testing.assert_allclose(
            decomp.singular_values, np.sort(np.abs(eigenvalues))[::-1], atol=1e-12
        )

    def test_random_specs_reconstruct(self):
        for _ in range(10):
            decomp = build_adjacency(random_spec(self.rng, n_sites=int(self.rng.integers(1, 30))))
            identity = np.eye(decomp.size)
            self.assertLess(decomp.reconstruction_error(), 1e-10)
            self.assertLess(decomp.pairing_error(), 1e-10)
            np.testing.assert_allclose(decomp.u.T @ decomp.u, identity, atol=1e-10)
            np.testing.assert_allclose(decomp.v.T @ decomp.v, identity, atol=1e-10)
            self.assertTrue(np.all(np.diff(decomp.singular_values) <= 0))


class TestCoefficients(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.times = np.linspace(0.0, 30.0, 301)

    def test_initial_values(self):
        coeffs = coefficients(build_adjacency(random_spec(self.rng, 12)), [0.0, 0.5])
        unit = np.zeros(13)
        unit[0] = 1.0
        np.testing.assert_allclose(coeffs.pi_x[0], unit, atol=1e-12)
        np.testing.assert_allclose(coeffs.pi_y[0], unit, atol=1e-12)
        np.testing.assert_allclose(coeffs.delta_x[0], 0.0, atol=1e-12)
        np.testing.assert_allclose(coeffs.delta_y[0], 0.0, atol=1e-12)

    def test_normalization_both_families(self):
        for xx in (True, False):
            coeffs = coefficients(build_adjacency(random_spec(self.rng, 20, xx=xx)), self.times)
            np.testing.assert_allclose(coeffs.norm_x(), 1.0, atol=1e-10)
            np.testing.assert_allclose(coeffs.norm_y(), 1.0, atol=1e-10)

    def test_xx_families_coincide(self):
        coeffs = coefficients(build_adjacency(random_spec(self.rng, 15, xx=True)), self.times)
        np.testing.assert_allclose(coeffs.pi_x, coeffs.pi_y, atol=1e-12)
        np.testing.assert_allclose(coeffs.delta_x, coeffs.delta_y, atol=1e-12)

    def test_origin_matches_full_tables(self):
        decomp = build_adjacency(random_spec(self.rng, 15))
        full = coefficients(decomp, self.times).origin()
        origin = origin_coefficients(decomp, self.times)
        for name in ("pi_x", "delta_x", "pi_y", "delta_y", "d_pi_x", "d_delta_x", "d_pi_y", "d_delta_y"):
            np.testing.assert_allclose(getattr(origin, name), getattr(full, name), atol=1e-12)

    def test_derivatives_match_centered_differences(self):
        decomp = build_adjacency(random_spec(self.rng, 10))
        probe_times = np.array([0.7, 1.9, 4.2])
        exact = coefficients(decomp, probe_times)

        def fd_error(dt):
            plus = coefficients(decomp, probe_times + dt)
            minus = coefficients(decomp, probe_times - dt)
            return max(
                np.max(np.abs((getattr(plus, name) - getattr(minus, name)) / (2 * dt) - getattr(exact, "d_" + name)))
                for name in ("pi_x", "delta_x", "pi_y", "delta_y")
            )

        coarse, fine = fd_error(1e-2), fd_error(5e-3)
        self.assertLess(coarse, 1e-2)
        self.assertGreater(coarse / fine, 3.5)
        self.assertLess(coarse / fine, 4.5)

    def test_rejects_bad_grids(self):
        decomp = build_adjacency(random_spec(self.rng, 3))
        with self.assertRaises(ValueError):
            coefficients(decomp, [])
        with self.assertRaises(ValueError):
            coefficients(decomp, [0.0, 1.0, 0.5])

    def test_two_site_rabi(self):
        coeffs = coefficients(build_adjacency(ChainSpec.uniform(J=1.0, N=1)), self.times)
        origin = coeffs.origin()
        np.testing.assert_allclose(origin.pi_x, np.cos(self.times), atol=1e-12)
        np.testing.assert_allclose(origin.delta_x, 0.0, atol=1e-12)
        np.testing.assert_allclose(origin.population_factor, np.cos(self.times) ** 2, atol=1e-12)


class TestBesselClosedForms(unittest.TestCase):
    def setUp(self):
        self.times = np.linspace(0.0, 30.0, 601)

    def assert_origin_matches(self, spec, pi_expected, delta_expected):
        origin = origin_coefficients(build_adjacency(spec), self.times)
        np.testing.assert_allclose(origin.pi_x, pi_expected, atol=1e-8)
        np.testing.assert_allclose(origin.delta_x, delta_expected, atol=1e-8)

    def test_equal_fields(self):
        for h in (0.0, 0.3, 1.7):
            spec = ChainSpec.uniform(J=1.0, J0=1.0, h=h, h0=h, N=200)
            self.assert_origin_matches(spec, *equal_field_coefficients(self.times, h))

    def test_markov_point(self):
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=200)
        self.assert_origin_matches(spec, *markov_point_coefficients(self.times))

    def test_sqrt2_coupling(self):
        for h in (0.0, 0.4):
            spec = ChainSpec.uniform(J=1.0, J0=np.sqrt(2.0), h=h, h0=h, N=200)
            self.assert_origin_matches(spec, *sqrt2_coupling_coefficients(self.times, h))


class TestSeriesCheck(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.decomp = build_adjacency(ChainSpec.uniform(J=1.0, h=0.2, h0=0.0, N=5))

    def test_zero_time(self):
        self.assertLess(coefficient_series_check(self.decomp, 0.0, 10), 1e-14)

    def test_converged_and_truncated(self):
        self.assertLess(coefficient_series_check(self.decomp, 1.0, 40), 1e-10)
        self.assertGreater(coefficient_series_check(self.decomp, 1.0, 2), 1e-3)

    def test_random_specs(self):
        for _ in range(5):
            decomp = build_adjacency(random_spec(self.rng, 6))
            for t in (0.5, 1.0, 2.0):
                self.assertLess(coefficient_series_check(decomp, t, 60), 1e-9)

    def test_refuses_large_times(self):
        with self.assertRaises(ValueError):
            coefficient_series_check(self.decomp, 50.0, 10)


if __name__ == "__main__":
    unittest.main()
