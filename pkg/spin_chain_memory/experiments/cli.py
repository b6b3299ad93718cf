#!/usr/bin/env python3
"""
Command-line entry point of the batch experiments.

    spin-chain-memory measure-sweep --config sweep.yaml --out results/fig1 --seed 7
    spin-chain-memory --preset fig5 --threads 4

Configuration layers, later ones winning: the package config.yaml (common section, then the
experiment section), the preset, the --config file, and the --out, --seed and --threads flags.

Exit status: 0 on success, 1 for an invalid configuration, 2 for any other failure.

Functions:
    build_config(str, Path, str, str, int, int):
    main(list):
"""

import argparse
import copy
import sys
from pathlib import Path
from typing import Optional

import yaml

from ..constants import experiment_names
from ..utils import load_config_file, recursive_dict_update, setup_default_logger
from .CoeffsExperiment import CoeffsExperiment
from .DivisibilityExperiment import DivisibilityExperiment
from .ExcitationsExperiment import ExcitationsExperiment
from .Experiment import ConfigError
from .FixedPointExperiment import FixedPointExperiment
from .FluxExperiment import FluxExperiment
from .GadFitExperiment import GadFitExperiment
from .MeasureSweepExperiment import MeasureSweepExperiment
from .QptExperiment import QptExperiment
from .SpectrumExperiment import SpectrumExperiment

PACKAGE_CONFIG = Path(__file__).resolve().parent.parent / "config.yaml"

EXPERIMENT_CLASSES = {
    cls.name: cls
    for cls in (
        CoeffsExperiment,
        MeasureSweepExperiment,
        FluxExperiment,
        DivisibilityExperiment,
        QptExperiment,
        SpectrumExperiment,
        ExcitationsExperiment,
        GadFitExperiment,
        FixedPointExperiment,
    )
}


def _load(filepath: Path) -> dict:
    try:
        return load_config_file(filepath)
    except (OSError, ValueError, yaml.YAMLError) as err:
        raise ConfigError(f"Cannot read config file [{filepath}]: {err}") from err


def build_config(
    experiment: Optional[str] = None,
    config_path: Optional[Path] = None,
    preset: Optional[str] = None,
    out: Optional[str] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    defaults_path: Path = PACKAGE_CONFIG,
) -> dict:
    """
    Merge the configuration layers of one run.

    A chain given by a preset or a file replaces the default chain instead of being merged
    into it, so the full-list form can override the uniform shorthand.

    Raises:
        ConfigError: for an unknown experiment or preset, conflicting experiment names, or an
            unreadable file
    """
    defaults = _load(defaults_path)
    overrides: dict = {}
    if preset is not None:
        presets = defaults.get("presets", {})
        if preset not in presets:
            raise ConfigError(f"Unknown preset [{preset}], expected one of {sorted(presets)}.")
        recursive_dict_update(overrides, presets[preset])
    if config_path is not None:
        recursive_dict_update(overrides, _load(Path(config_path)), replace_keys=("chain",))

    named = overrides.get("experiment")
    if experiment is not None and named is not None and named != experiment:
        raise ConfigError(f"Experiment [{experiment}] conflicts with configured [{named}].")
    name = experiment or named
    if name is None:
        raise ConfigError("No experiment given on the command line, in a preset or a file.")
    if name not in experiment_names:
        raise ConfigError(f"Unknown experiment [{name}], expected one of {list(experiment_names)}.")

    config = copy.deepcopy(defaults.get("common", {}))
    recursive_dict_update(config, defaults.get(name, {}))
    recursive_dict_update(config, overrides, replace_keys=("chain",))
    config["experiment"] = name
    for key, value in (("out", out), ("seed", seed), ("threads", threads)):
        if value is not None:
            config[key] = value
    return config


def main(argv: Optional[list] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="spin-chain-memory",
        description="Run a qubit-chain memory experiment and write its tables as CSV.",
    )
    parser.add_argument("experiment", nargs="?", default=None, help=", ".join(experiment_names))
    parser.add_argument("--config", type=Path, default=None, help="YAML, JSON or TOML file")
    parser.add_argument("--preset", type=str, default=None, help="fig1 .. fig8")
    parser.add_argument("--out", type=str, default=None, help="output directory")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args(argv)

    logger = setup_default_logger()
    try:
        config = build_config(
            experiment=args.experiment,
            config_path=args.config,
            preset=args.preset,
            out=args.out,
            seed=args.seed,
            threads=args.threads,
        )
        EXPERIMENT_CLASSES[config["experiment"]](config).run_experiment()
    except ConfigError as err:
        logger.error(f"CONFIG ERROR: {err}")
        return 1
    except Exception:
        logger.exception("FAILED: Experiment raised an error.")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
