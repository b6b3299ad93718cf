#!/usr/bin/env python3
import pandas as pd

from ..chain_state import chain_correlators, g_of_t
from ..constants import DEFAULT_TIME_STEP
from ..model import build_adjacency, coefficients
from ..nonmarkov import recurrence_horizon
from ..utils import uniform_time_grid
from .Experiment import Experiment


class CoeffsExperiment(Experiment):
    """
    Qubit-site propagator coefficients, f(t) and g(t) on a uniform grid, plus the chain
    correlators that enter g(t).

    Writes coefficients.csv (t, pi_x0, delta_x0, pi_y0, delta_y0, f, g), sigma_z.csv and
    g_nm.csv.
    """

    name = "coeffs"

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        spec = self.chain_spec()
        horizon = self.config.get("horizon") or recurrence_horizon(spec)
        times = uniform_time_grid(horizon, self.config.get("dt", DEFAULT_TIME_STEP))
        coeffs = coefficients(build_adjacency(spec), times)
        corr = chain_correlators(spec, self.config.get("chain_state", "ground"))

        table = coeffs.to_frame()
        table["g"] = g_of_t(coeffs, corr)
        self.logger.info(f"Evaluated {len(times)} time points up to t = {horizon}.")
        return {
            "coefficients.csv": table,
            "sigma_z.csv": corr.sigma_z_frame(),
            "g_nm.csv": corr.g_frame(),
        }
