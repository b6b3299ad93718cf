#!/usr/bin/env python3
"""
Generic helpers shared by the simulation modules and the experiment runners.

Functions:
    recursive_dict_update(dict, dict):
    load_config_file(Path):
    write_csv(pd.DataFrame, Path, logger):
    parallel_map(callable, iterable, int):
    uniform_time_grid(float, float):

Classes:
    None
"""

import copy
import json
import logging
import tomllib
from pathlib import Path
from typing import Any, Callable, Iterable, Optional

import numpy as np
import pandas as pd
import yaml
from joblib import Parallel, delayed

CSV_FLOAT_FORMAT = "%.17g"


def recursive_dict_update(
    original_dict: dict, new_dict: dict, replace_keys: Iterable[str] = ()
) -> None:
    """
    Merge a configuration layer into original_dict in place.

    Nested mappings are merged key by key. Top-level keys listed in replace_keys are swapped
    wholesale, which lets a full-list chain override the uniform shorthand. Inserted values are
    deep copies, so later merges never write into the layer they came from.

    Args:
        original_dict (dict): dictionary to be updated
        new_dict (dict): layer to merge in
        replace_keys (Iterable[str]): top-level keys replaced instead of merged
    """
    replace_keys = set(replace_keys)
    for key, value in new_dict.items():
        mergeable = isinstance(value, dict) and isinstance(original_dict.get(key), dict)
        if mergeable and key not in replace_keys:
            recursive_dict_update(original_dict[key], value)
        else:
            original_dict[key] = copy.deepcopy(value)


def load_config_file(filepath: Path) -> dict:
    """
    Read an experiment configuration file.

    YAML is the native format. Files ending in .json are read with json and files ending in
    .toml with tomllib.

    Args:
        filepath (Path): path of the configuration file

    Returns:
        config (dict): parsed configuration, empty if the file is empty

    Raises:
        FileNotFoundError: if the file does not exist
        ValueError: if the document is not a mapping
    """
    filepath = Path(filepath)
    if not filepath.exists():
        raise FileNotFoundError(f"Config file [{filepath}] does not exist.")

    if filepath.suffix.lower() == ".toml":
        with open(filepath, "rb") as f:
            config = tomllib.load(f)
    elif filepath.suffix.lower() == ".json":
        with open(filepath, "r") as f:
            config = json.load(f)
    else:
        with open(filepath, "r") as f:
            config = yaml.safe_load(f)

    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ValueError(
            f"Config file [{filepath}] must contain a mapping, got {type(config).__name__}."
        )
    return config


def write_csv(
    df: pd.DataFrame, filepath: Path, logger: Optional[logging.Logger] = None
) -> Path:
    """
    Write a table with a header row and full double precision.

    The output only depends on the table contents, so identical runs give identical bytes.
    """
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(filepath, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    if logger is not None:
        logger.info(f"SAVED: Table [{filepath.name}] to [{filepath.parent}].")
    return filepath


def parallel_map(
    func: Callable[[Any], Any], items: Iterable[Any], n_jobs: int = 1
) -> list:
    """
    Apply func to every item, optionally on a joblib worker pool.

    Results come back in the order of items regardless of completion order.
    """
    items = list(items)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs)(delayed(func)(item) for item in items)


def uniform_time_grid(horizon: float, dt: float) -> np.ndarray:
    """
    Grid 0, dt, 2dt, ... whose last point is the horizon.

    The step is shrunk slightly when dt does not divide the horizon.
    """
    if dt <= 0:
        raise ValueError(f"Time step must be positive, got {dt}.")
    if horizon < 0:
        raise ValueError(f"Horizon must be nonnegative, got {horizon}.")
    if horizon == 0:
        return np.zeros(1)
    n_steps = max(int(np.ceil(horizon / dt - 1e-9)), 1)
    return np.linspace(0.0, horizon, n_steps + 1)
