#!/usr/bin/env python3

import socket
from abc import ABC, abstractmethod
from datetime import datetime
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd
import yaml

from ..constants import ExperimentConfig, experiment_names
from ..model import ChainSpec, ChainSpecError
from ..utils import add_default_repr, setup_default_logger, setup_logger, write_csv


class ConfigError(ValueError):
    """The experiment configuration is missing a value or holds an invalid one."""


# noinspection PyShadowingNames
@add_default_repr
class Experiment(ABC):
    """
    Base class for the batch experiments.

    Each subclass turns one configuration section into one or more CSV tables. This class is
    responsible for:
    - checking the configuration
    - creating the output directory and the experiment logger
    - saving the effective configuration next to the tables

    Parameters:
        config (dict): merged configuration of a single experiment
        load_only (bool): skip the output directory and log to the default logger

    Attributes:
        config (dict): configuration in effect
        experiment_name (str): date plus experiment key
        save_dir (Path): directory receiving config.yaml, console.log and the tables
        logger (logging.Logger): experiment logger

    Usage:

    ```python
    from spin_chain_memory.experiments import MeasureSweepExperiment

    experiment = MeasureSweepExperiment(config)
    experiment.run_experiment()
    ```
    """

    name: str = ""
    required_keys: tuple[str, ...] = ("chain",)
    uses_random_states: bool = False

    def __init__(self, config: ExperimentConfig, load_only: bool = False):
        self.config: ExperimentConfig = config
        self.load_only = load_only
        self._check_config()

        if load_only:
            self.logger = setup_default_logger()
            self.logger.info(
                f"LOAD ONLY MODE for [{self.name}]. No experiment_name or save_dir created."
            )
        else:
            self._initialize_experiment()

    def _initialize_experiment(self):
        self.experiment_name = self._create_experiment_name()
        self.save_dir = self._create_save_dir()
        self.logger = setup_logger(
            logger_name=f"spin_chain_memory.{self.name}",
            log_filepath=self.save_dir / "console.log",
        )
        self.logger.info(f"COMPLETED: Created save directory [{self.save_dir}].")
        self._save_config(self.config)

    def _check_config(self):
        if self.config.get("experiment", self.name) != self.name:
            raise ConfigError(
                f"Config is for experiment [{self.config['experiment']}], not [{self.name}]."
            )
        if self.name not in experiment_names:
            raise ConfigError(f"Unknown experiment [{self.name}].")
        missing = [key for key in self.required_keys if key not in self.config]
        if missing:
            raise ConfigError(f"Experiment [{self.name}] is missing config keys {missing}.")
        if self.uses_random_states and self.config.get("seed") is None:
            raise ConfigError(f"Experiment [{self.name}] draws random states and needs a seed.")
        threads = self.config.get("threads", 1)
        if isinstance(threads, bool) or not isinstance(threads, int) or threads == 0:
            raise ConfigError(f"threads must be a nonzero integer, got {threads!r}.")

    def _create_experiment_name(self) -> str:
        """
        Returns:
            str: string of the experiment name
        """
        date = datetime.now().strftime("%Y-%m-%d")
        return f"{date}_{self.name}"

    def _create_save_dir(self) -> Path:
        """
        Create the output directory.

        An explicit `out` is used as given; otherwise the directory name is made up of the
        experiment name, the host and an index.

        Returns:
            save_dir (Path): Path to the save directory.
        """
        if self.config.get("out"):
            save_dir = Path(self.config["out"])
            save_dir.mkdir(parents=True, exist_ok=True)
            return save_dir

        short_hostname = socket.gethostname().split("-")[0]
        results_id = 1
        save_dir = Path(f"results/{self.experiment_name}_{short_hostname}_{results_id}")
        while save_dir.exists():
            results_id += 1
            save_dir = Path(f"results/{self.experiment_name}_{short_hostname}_{results_id}")
        save_dir.mkdir(parents=True, exist_ok=True)
        return save_dir

    def _save_config(self, config: dict):
        config_filename = "config.yaml"
        with open(self.save_dir / config_filename, "w") as f:
            yaml.safe_dump(config, f, sort_keys=True)
        self.logger.info(f"SAVED: Config file [{config_filename}] to [{self.save_dir}].")

    @property
    def n_jobs(self) -> int:
        return int(self.config.get("threads", 1))

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.config.get("seed"))

    def chain_spec(self, h: Optional[float] = None) -> ChainSpec:
        """
        Chain of the config, with the bulk field replaced by h when given.

        Raises:
            ConfigError: for an invalid chain, or a field override on a non-uniform chain
        """
        chain = self.config["chain"]
        try:
            if h is None:
                return ChainSpec.from_dict(chain)
            if not isinstance(chain, dict) or "uniform" not in chain:
                raise ConfigError("Field sweeps need the uniform chain shorthand.")
            return ChainSpec.from_dict({"uniform": {**chain["uniform"], "h": float(h)}})
        except ChainSpecError as err:
            raise ConfigError(f"Invalid chain: {err}") from err

    def values(self, key: str) -> np.ndarray:
        """A list, or a {start, stop, num} mapping expanded with np.linspace."""
        raw = self.config.get(key)
        if isinstance(raw, dict):
            try:
                return np.linspace(float(raw["start"]), float(raw["stop"]), int(raw["num"]))
            except KeyError as err:
                raise ConfigError(f"{key} needs start, stop and num, missing {err}.") from err
        if isinstance(raw, (list, tuple)) and len(raw) > 0:
            return np.asarray(raw, dtype=float)
        raise ConfigError(f"{key} must be a nonempty list or a {{start, stop, num}} mapping.")

    @abstractmethod
    def _compute_tables(self) -> dict[str, pd.DataFrame]:
        """Run the computation and return the tables keyed by file name."""
        pass

    def _save_results(self, tables: dict[str, pd.DataFrame]) -> dict[str, Path]:
        return {
            filename: write_csv(table, self.save_dir / filename, self.logger)
            for filename, table in tables.items()
        }

    def run_experiment(self) -> dict[str, Path]:
        """Run the experiment workflow and return the written files."""
        if self.load_only:
            raise RuntimeError("Experiment was created in load-only mode.")
        self.logger.info(f"STARTED: Experiment [{self.name}].")
        paths = self._save_results(self._compute_tables())
        self.logger.info(f"COMPLETED: Experiment [{self.name}].")
        return paths


if __name__ == "__main__":
    pass
