#!/usr/bin/env python3
import pandas as pd

from ..constants import SpectrumConfig
from ..spectral import localization_scan
from .Experiment import Experiment


class SpectrumExperiment(Experiment):
    """
    Localized levels over the (h/J, J0/J) plane against the parabola rule, with h0 = 0.

    Writes localization.csv (h, j0, analytic, numeric, boundary, max_ipr, near_boundary).
    """

    config: SpectrumConfig
    name = "spectrum"
    required_keys = ("h_values", "j0_values")

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        table = localization_scan(
            self.values("h_values"),
            self.values("j0_values"),
            n_sites=int(self.config.get("n_sites", 400)),
            n_jobs=self.n_jobs,
            logger=self.logger,
        )
        counts = table["numeric"].value_counts().sort_index().to_dict()
        self.logger.info(f"Localized level counts over the scan: {counts}.")
        return {"localization.csv": table}
