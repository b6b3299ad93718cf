#!/usr/bin/env python3
import pandas as pd

from ..constants import ExcitationsConfig
from ..dynamics import probe_states
from ..spectral import excitation_distribution, flatness
from .Experiment import ConfigError, Experiment


class ExcitationsExperiment(Experiment):
    """
    Occupations of the single-particle levels in the initial product state, one table per
    bulk field, and a summary row per field.

    Writes excitations_h{h}.csv (energy, occupation, in_band) and excitations_summary.csv.
    """

    config: ExcitationsConfig
    name = "excitations"
    required_keys = ("chain", "h_values")

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        probes = probe_states()
        probe_key = str(self.config.get("probe", "+"))
        if probe_key not in probes:
            raise ConfigError(f"Unknown probe [{probe_key}], expected one of {list(probes)}.")

        tables, summary = {}, []
        for h in self.values("h_values"):
            dist = excitation_distribution(
                self.chain_spec(h), probes[probe_key], self.config.get("chain_state", "ground")
            )
            table = dist.to_frame()
            table["in_band"] = dist.in_band
            tables[f"excitations_h{h:g}.csv"] = table
            bound = dist.occupations[~dist.in_band]
            summary.append(
                {
                    "h": h,
                    "total": dist.total,
                    "k_fermi": dist.k_fermi,
                    "qubit_population": dist.qubit_population,
                    "flatness": flatness(dist),
                    "n_bound": int(bound.size),
                    "max_bound_occupation": float(bound.max()) if bound.size else 0.0,
                }
            )
        tables["excitations_summary.csv"] = pd.DataFrame(summary)
        return tables
