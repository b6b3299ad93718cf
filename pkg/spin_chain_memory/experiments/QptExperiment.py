#!/usr/bin/env python3
from functools import partial
from typing import Sequence

import numpy as np
import pandas as pd

from ..channels import (
    PAULI_LABELS,
    ChiMatrix,
    CompletePositivityError,
    apply_chi,
    fit_gad,
    kraus_from_chi,
    probe_outputs,
    process_tomography,
)
from ..constants import GAD_RESTARTS, QPT_TIME_STEP, QptConfig
from ..dynamics import MapSnapshot, QubitState, evolve, map_snapshots
from ..nonmarkov import recurrence_horizon
from ..utils import parallel_map, uniform_time_grid
from .Experiment import Experiment


def _tomography_row(snap: MapSnapshot, check_states: Sequence[QubitState]):
    chi = process_tomography(probe_outputs(snap), t=snap.t)
    row = {
        "t": snap.t,
        "chi_min_eigenvalue": float(chi.eigenvalues()[0]),
        "n_kraus": np.nan,
        "completeness_error": np.nan,
        "roundtrip_error": np.nan,
    }
    try:
        kraus = kraus_from_chi(chi)
    except CompletePositivityError:
        return row, chi
    expected = [evolve(state, snap).density_matrix() for state in check_states]
    row["n_kraus"] = len(kraus)
    row["completeness_error"] = float(np.abs(kraus.completeness() - np.eye(2)).max())
    row["roundtrip_error"] = max(
        [0.0]
        + [
            float(max(np.abs(kraus.apply(s) - rho).max(), np.abs(apply_chi(chi, s) - rho).max()))
            for s, rho in zip(check_states, expected)
        ]
    )
    return row, chi


def _fit_row(item: tuple[int, ChiMatrix], seed, restarts: int) -> dict:
    index, chi = item
    fit = fit_gad(chi, restarts=restarts, rng=np.random.default_rng([seed, index]))
    return {
        "t": chi.t,
        "fp": fit.fidelity,
        "mu": fit.params.mu,
        "gamma": fit.params.gamma,
        "big_gamma": fit.params.big_gamma,
        "converged": fit.converged,
    }


def _chi_frame(chis: Sequence[ChiMatrix]) -> pd.DataFrame:
    rows = [
        {
            "t": chi.t,
            "m": PAULI_LABELS[m],
            "n": PAULI_LABELS[n],
            "re": chi.matrix[m, n].real,
            "im": chi.matrix[m, n].imag,
        }
        for chi in chis
        for m in range(4)
        for n in range(4)
    ]
    return pd.DataFrame(rows, columns=["t", "m", "n", "re", "im"])


class QptExperiment(Experiment):
    """
    Process tomography of the qubit map on a time grid.

    Writes qpt.csv (t, chi_min_eigenvalue, n_kraus, completeness_error, roundtrip_error) and
    chi.csv; with fit_reference also gad_fit.csv (t, fp, mu, gamma, big_gamma, converged).
    Random check states and fit restarts are drawn from the seed.
    """

    config: QptConfig
    name = "qpt"
    uses_random_states = True

    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        spec = self.chain_spec()
        horizon = self.config.get("horizon") or recurrence_horizon(spec)
        times = uniform_time_grid(horizon, self.config.get("dt", QPT_TIME_STEP))
        snaps = map_snapshots(spec, times, self.config.get("chain_state", "ground"))

        rng = self.rng()
        check_states = [
            QubitState.random_pure(rng) for _ in range(int(self.config.get("n_check_states", 100)))
        ]
        results = parallel_map(
            partial(_tomography_row, check_states=check_states), snaps, n_jobs=self.n_jobs
        )
        table = pd.DataFrame([row for row, _ in results])
        chis = [chi for _, chi in results]
        not_cp = int(table["n_kraus"].isna().sum())
        if not_cp:
            self.logger.warning(f"{not_cp} time points have a process matrix that is not CP.")
        self.logger.info(
            f"Tomography at {len(snaps)} times: max round-trip error "
            f"{table['roundtrip_error'].max():.3g}."
        )
        tables = {"qpt.csv": table, "chi.csv": _chi_frame(chis)}

        if self.config.get("fit_reference", False):
            fits = parallel_map(
                partial(
                    _fit_row,
                    seed=self.config.get("seed"),
                    restarts=int(self.config.get("restarts", GAD_RESTARTS)),
                ),
                list(enumerate(chis)),
                n_jobs=self.n_jobs,
            )
            fit_table = pd.DataFrame(
                fits, columns=["t", "fp", "mu", "gamma", "big_gamma", "converged"]
            )
            self.logger.info(f"Reference channel fit: min F_p = {fit_table['fp'].min():.6g}.")
            tables["gad_fit.csv"] = fit_table
        return tables
