#!/usr/bin/env python3
import pandas as pd

from ..channels import divisibility_grid
from ..constants import CHOI_TOL, DivisibilityConfig
from ..dynamics import probe_states
from ..utils import uniform_time_grid
from .Experiment import ConfigError, Experiment


class DivisibilityExperiment(Experiment):
    """
    Divisibility condition and Choi positivity over (t, t1) grids, one table per bulk field.

    Writes divisibility_h{h}.csv with columns t, t1, C, choi_min.
    """

    config: DivisibilityConfig
    name = "divisibility"
    required_keys = ("chain", "h_values", "t_horizon", "t1_horizon", "step")

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        probes = probe_states()
        probe_key = str(self.config.get("probe", "+"))
        if probe_key not in probes:
            raise ConfigError(f"Unknown probe [{probe_key}], expected one of {list(probes)}.")
        step = self.config["step"]
        times = uniform_time_grid(self.config["t_horizon"], step)
        t1_values = uniform_time_grid(self.config["t1_horizon"], step)

        tables = {}
        for h in self.values("h_values"):
            table = divisibility_grid(
                self.chain_spec(h),
                times,
                t1_values,
                probe=probes[probe_key],
                chain_state=self.config.get("chain_state", "ground"),
                logger=self.logger,
            )
            violations = int((table["C"] > 1.0).sum())
            negative = int((table["choi_min"] < -CHOI_TOL).sum())
            self.logger.info(
                f"h/J = {h:g}: max C = {table['C'].max():.6g}, {violations} cells above 1, "
                f"{negative} cells with a negative Choi eigenvalue."
            )
            tables[f"divisibility_h{h:g}.csv"] = table
        return tables
