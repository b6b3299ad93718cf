#!/usr/bin/env python3
import pandas as pd

from ..channels import fixed_point_ensemble, offset_scaling
from ..constants import FixedPointConfig
from ..dynamics import QubitState, map_snapshots, trajectory
from ..model import ChainSpec
from ..utils import uniform_time_grid
from .Experiment import ConfigError, Experiment


class FixedPointExperiment(Experiment):
    """
    Final states of a random pure ensemble, trajectories of a few inputs, and the scaling of
    the fixed point's z-offset with the chain length.

    Writes fixed_point_h{h}.csv (state_id, rx, ry, rz), trajectory_h{h}.csv
    (t, state_id, rx, ry, rz), fixed_point_summary.csv and offset_scaling.csv.
    """

    config: FixedPointConfig
    name = "fixed-point"
    required_keys = ("chain", "h_values", "n_states", "final_time")
    uses_random_states = True

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        rng = self.rng()
        chain_state = self.config.get("chain_state", "ground")
        final_time = float(self.config["final_time"])
        n_trajectory = int(self.config.get("n_trajectory_states", 0))

        tables, summary = {}, []
        for h in self.values("h_values"):
            spec = self.chain_spec(h)
            report = fixed_point_ensemble(
                spec, final_time, int(self.config["n_states"]), rng, chain_state
            )
            states = pd.DataFrame(report.final_states, columns=["rx", "ry", "rz"])
            states.insert(0, "state_id", range(len(states)))
            tables[f"fixed_point_h{h:g}.csv"] = states
            summary.append(
                {
                    "h": h,
                    "final_time": report.final_time,
                    "max_spread": report.max_spread,
                    "z_offset": report.z_offset,
                    "transverse_offset": report.transverse_offset,
                }
            )
            if n_trajectory > 0:
                inputs = [QubitState.random_pure(rng) for _ in range(n_trajectory)]
                times = uniform_time_grid(final_time, self.config.get("dt", 0.5))
                dump = trajectory(inputs, map_snapshots(spec, times, chain_state))
                tables[f"trajectory_h{h:g}.csv"] = dump[["t", "state_id", "rx", "ry", "rz"]]
        tables["fixed_point_summary.csv"] = pd.DataFrame(summary)

        sites = list(self.config.get("scaling_sites") or [])
        if sites:
            chain = self.config["chain"]
            if "uniform" not in chain:
                raise ConfigError("Offset scaling needs the uniform chain shorthand.")
            template = ChainSpec.uniform(**{**chain["uniform"], "N": int(min(sites))})
            table, exponent = offset_scaling(
                template,
                sites,
                final_time,
                int(self.config["n_states"]),
                rng,
                chain_state,
                logger=self.logger,
            )
            self.logger.info(f"z-offset scales as N^{exponent:.3f}.")
            tables["offset_scaling.csv"] = table
        return tables
