#!/usr/bin/env python3
from .QptExperiment import QptExperiment


class GadFitExperiment(QptExperiment):
    """Tomography followed by the reference-channel fit at every grid time."""

    name = "gad-fit"

    def _check_config(self):
        super()._check_config()
        self.config["fit_reference"] = True
