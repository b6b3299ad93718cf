#!/usr/bin/env python3
import pandas as pd

from ..constants import DEFAULT_TIME_STEP
from ..model import build_adjacency
from ..nonmarkov import blp_measure, flux_profile, measure_time_grid, recurrence_horizon
from .Experiment import Experiment


class FluxExperiment(Experiment):
    """Flux of the equatorial pair and its backflow windows. Writes flux.csv, flux_windows.csv."""

    name = "flux"

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        decomp = build_adjacency(self.chain_spec())
        horizon = self.config.get("horizon") or recurrence_horizon(decomp.spec)
        dt = self.config.get("dt", DEFAULT_TIME_STEP)
        profile = flux_profile(decomp, measure_time_grid(decomp, horizon, dt))
        measure = blp_measure(decomp, horizon=horizon, dt=dt)
        self.logger.info(
            f"{len(profile.windows)} backflow windows up to t = {horizon}, "
            f"measure {measure.value:.6g}."
        )
        return {"flux.csv": profile.to_frame(), "flux_windows.csv": profile.windows_frame()}
