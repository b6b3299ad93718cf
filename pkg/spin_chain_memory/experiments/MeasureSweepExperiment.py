#!/usr/bin/env python3
import pandas as pd

from ..constants import DEFAULT_TIME_STEP, SweepConfig
from ..nonmarkov import markovianity_detuning, sweep_measure
from .Experiment import ConfigError, Experiment


class MeasureSweepExperiment(Experiment):
    """
    Non-Markovianity measure over bulk fields h/J and qubit couplings J0/J.

    The chain entry fixes N, J and h0. Writes measure_sweep.csv.
    """

    config: SweepConfig
    name = "measure-sweep"
    required_keys = ("chain", "h_values", "j0_values")

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        template = self.chain_spec()
        if not template.is_xx():
            raise ConfigError("Measure sweeps need an XX chain.")
        j0_values = self.values("j0_values")
        table = sweep_measure(
            template,
            self.values("h_values"),
            j0_values,
            horizon=self.config.get("horizon"),
            dt=self.config.get("dt", DEFAULT_TIME_STEP),
            check_divergence=bool(self.config.get("check_divergence", False)),
            n_jobs=self.n_jobs,
            logger=self.logger,
        )
        for j0 in j0_values:
            detuning = markovianity_detuning(j0)
            if detuning is None:
                self.logger.info(f"J0/J = {j0:g}: no Markovianity point.")
            else:
                self.logger.info(f"J0/J = {j0:g}: measure vanishes at dh/J = {detuning:g}.")
        return {"measure_sweep.csv": table}
