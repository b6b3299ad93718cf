#!/usr/bin/env python3
"""
Non-Markovianity measure of the qubit dynamics.

The measure sums the growth of the trace distance of an input pair over every interval of
positive flux,
    N = sum_n [D(b_n) - D(a_n)],
evaluated from D at the refined window endpoints rather than by integrating the flux.
With the antipodal equatorial pair an XX chain gives D = sqrt(f).

Classes:
    MeasureResult
    OptimalPairReport

Functions:
    blp_measure(ChainSpec | AdjacencyDecomposition | CoefficientSet, float, tuple):
    verify_optimal_pair(ChainSpec | AdjacencyDecomposition | CoefficientSet, int):
    sweep_measure(ChainSpec, list, list, float):
    markovianity_detuning(float):
    measure_time_grid(AdjacencyDecomposition, float, float):
    recurrence_horizon(ChainSpec):
"""

import logging
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Optional, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..constants import (
    DEFAULT_TIME_STEP,
    DIVERGENCE_GROWTH,
    POINTS_PER_PERIOD,
    RECURRENCE_FRACTION,
)
from ..dynamics import QubitState, equatorial_pair
from ..model import (
    AdjacencyDecomposition,
    ChainSpec,
    CoefficientSet,
    build_adjacency,
    origin_coefficients,
)
from ..utils import parallel_map, setup_default_logger, uniform_time_grid
from .flux import Pair, flux_profile, pair_distance

Source = Union[ChainSpec, AdjacencyDecomposition, CoefficientSet]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasureResult:
    """
    Attributes:
        value (float): N(Phi) on the horizon, nonnegative
        horizon (float): time cutoff used
        diverging (bool): whether the truncated value kept growing over doubled horizons
        pair (tuple[QubitState, QubitState]): input pair the value belongs to
        windows (list[tuple[float, float]]): positive-flux intervals on the horizon
        horizon_values (dict[float, float]): values at the horizons of the divergence check
    """

    value: float
    horizon: float
    diverging: bool
    pair: Pair
    windows: list[tuple[float, float]] = field(default_factory=list)
    horizon_values: dict[float, float] = field(default_factory=dict)


@dataclass(frozen=True)
class OptimalPairReport:
    """Outcome of comparing random input pairs with the antipodal equatorial pair."""

    passed: bool
    reference_value: float
    max_value: float
    n_pairs: int
    tolerance: float
    offending_pair: Optional[Pair] = None


def _decomposition(source: Source) -> AdjacencyDecomposition:
    if isinstance(source, CoefficientSet):
        return source.decomposition
    if isinstance(source, AdjacencyDecomposition):
        return source
    if isinstance(source, ChainSpec):
        return build_adjacency(source)
    raise TypeError(f"Cannot build a decomposition from {type(source).__name__}.")


def recurrence_horizon(spec: ChainSpec) -> float:
    """Time before the front reflected at the far end returns to the qubit."""
    return RECURRENCE_FRACTION * spec.n_sites


def measure_time_grid(
    decomp: AdjacencyDecomposition, horizon: float, dt: float = DEFAULT_TIME_STEP
) -> np.ndarray:
    """Uniform grid up to horizon, fine enough to sample the fastest mode 16 times per period."""
    if decomp.max_frequency > 0:
        resolving_dt = 2 * np.pi / (POINTS_PER_PERIOD * decomp.max_frequency)
        if resolving_dt < dt:
            logger.debug(
                f"Time step {dt:g} is coarser than the fastest mode allows, "
                f"using {resolving_dt:.6g}."
            )
            dt = resolving_dt
    return uniform_time_grid(horizon, dt)


def _windowed_value(decomp, windows, pair: Pair) -> float:
    if not windows:
        return 0.0
    dr = pair[0].bloch - pair[1].bloch
    total = 0.0
    for a, b in windows:
        d_a, d_b = pair_distance(origin_coefficients(decomp, [a, b]), dr)
        total += d_b - d_a
    return max(float(total), 0.0)


def _value_on_horizon(decomp, horizon: float, dt: float, pair: Pair):
    times = measure_time_grid(decomp, horizon, dt)
    if times.size < 2:
        return 0.0, []
    profile = flux_profile(decomp, times, pair)
    return _windowed_value(decomp, profile.windows, pair), profile.windows


def _is_diverging(values: list[float]) -> bool:
    """
    Values at T, 2T and 4T grow by more than DIVERGENCE_GROWTH per doubling, and the second
    doubling adds at least as much as the first.

    A convergent tail decaying like a power of t still gains a few percent per doubling over
    the horizons in use, but its increments shrink.
    """
    v1, v2, v4 = values
    if v1 <= 0:
        return False
    keeps_growing = v2 > (1 + DIVERGENCE_GROWTH) * v1 and v4 > (1 + DIVERGENCE_GROWTH) * v2
    return keeps_growing and (v4 - v2) >= (v2 - v1)


def blp_measure(
    source: Source,
    horizon: Optional[float] = None,
    pair: Optional[Pair] = None,
    dt: float = DEFAULT_TIME_STEP,
    check_divergence: bool = False,
) -> MeasureResult:
    """
    Non-Markovianity measure on a finite horizon.

    Args:
        source: chain spec, its decomposition, or a coefficient set (whose grid end is the
            default horizon)
        horizon (float): time cutoff, default 2N/3 for specs and decompositions
        pair (tuple[QubitState, QubitState]): inputs, default the antipodal equatorial pair
        dt (float): largest grid step, refined further for fast chains
        check_divergence (bool): also evaluate 2T and 4T, extending the chain when 4T passes
            the recurrence time, and flag values that keep growing

    Returns:
        MeasureResult

    Raises:
        ValueError: for an empty grid or a negative horizon
    """
    decomp = _decomposition(source)
    if horizon is None:
        if isinstance(source, CoefficientSet):
            if source.times.size == 0:
                raise ValueError("Coefficient set has an empty time grid.")
            horizon = float(source.times[-1])
        else:
            horizon = recurrence_horizon(decomp.spec)
    if not horizon > 0:
        raise ValueError(f"Measure needs a positive horizon, got {horizon}.")
    if pair is None:
        pair = equatorial_pair()

    value, windows = _value_on_horizon(decomp, horizon, dt, pair)
    if not check_divergence:
        return MeasureResult(
            value=value, horizon=horizon, diverging=False, pair=pair, windows=windows
        )

    longest = 4 * horizon
    extended = decomp
    if longest > recurrence_horizon(decomp.spec):
        n_sites = math.ceil(longest / RECURRENCE_FRACTION)
        logger.warning(
            f"Extending the chain from {decomp.spec.n_sites} to {n_sites} sites for the "
            f"divergence check up to t = {longest}."
        )
        extended = build_adjacency(decomp.spec.extended(n_sites))
    values = [value] + [
        _value_on_horizon(extended, factor * horizon, dt, pair)[0] for factor in (2, 4)
    ]
    return MeasureResult(
        value=value,
        horizon=horizon,
        diverging=_is_diverging(values),
        pair=pair,
        windows=windows,
        horizon_values=dict(zip((horizon, 2 * horizon, 4 * horizon), values)),
    )


def _random_state(rng: np.random.Generator) -> QubitState:
    pure = QubitState.random_pure(rng)
    return pure.mix(QubitState.maximally_mixed(), float(rng.uniform(0.0, 1.0) ** 0.25))


def verify_optimal_pair(
    source: Source,
    n_random_pairs: int = 200,
    horizon: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
    tolerance: float = 1e-9,
    dt: float = DEFAULT_TIME_STEP,
) -> OptimalPairReport:
    """
    Check that no sampled input pair beats the antipodal equatorial pair.

    For an XX chain the windows do not depend on the pair, so they are found once and every
    sampled pair is scored on them.

    Returns:
        OptimalPairReport: passed is False, with the offending pair, on a violation
    """
    decomp = _decomposition(source)
    if horizon is None:
        horizon = recurrence_horizon(decomp.spec)
    rng = np.random.default_rng() if rng is None else rng
    reference = blp_measure(decomp, horizon=horizon, dt=dt)

    best_value, best_pair = -np.inf, None
    for _ in range(n_random_pairs):
        pair = (_random_state(rng), _random_state(rng))
        if decomp.spec.is_xx():
            value = _windowed_value(decomp, reference.windows, pair)
        else:
            value = blp_measure(decomp, horizon=horizon, pair=pair, dt=dt).value
        if value > best_value:
            best_value, best_pair = value, pair

    passed = best_value <= reference.value + tolerance
    if not passed:
        logger.warning(
            f"Sampled pair reaches N = {best_value:.6g} above the equatorial value "
            f"{reference.value:.6g}."
        )
    return OptimalPairReport(
        passed=passed,
        reference_value=reference.value,
        max_value=float(best_value) if n_random_pairs else 0.0,
        n_pairs=n_random_pairs,
        tolerance=tolerance,
        offending_pair=None if passed else best_pair,
    )


def markovianity_detuning(j0_over_J: float) -> Optional[float]:
    """
    Detuning dh/J at which the measure vanishes, 1 - (J0/J)^2/2.

    Returns None for J0/J > 1, where no such point exists.
    """
    if j0_over_J < 0:
        raise ValueError(f"J0/J must be nonnegative, got {j0_over_J}.")
    if j0_over_J > 1:
        return None
    return 1.0 - j0_over_J**2 / 2


def _sweep_point(
    point: tuple[float, float],
    template: ChainSpec,
    horizon: float,
    dt: float,
    check_divergence: bool,
) -> dict:
    h_over_J, j0_over_J = point
    J = template.bulk_coupling
    spec = ChainSpec.uniform(
        J=J,
        J0=j0_over_J * J,
        h=h_over_J * J,
        h0=template.fields[0],
        N=template.n_sites,
    )
    result = blp_measure(spec, horizon=horizon, dt=dt, check_divergence=check_divergence)
    return {
        "h_over_J": h_over_J,
        "j0_over_J": j0_over_J,
        "measure": result.value,
        "diverging": result.diverging,
        "horizon": result.horizon,
    }


def sweep_measure(
    spec_template: ChainSpec,
    h_values,
    j0_values,
    horizon: Optional[float] = None,
    dt: float = DEFAULT_TIME_STEP,
    check_divergence: bool = False,
    n_jobs: int = 1,
    logger: Optional[logging.Logger] = None,
) -> pd.DataFrame:
    """
    Measure over a grid of bulk fields and qubit couplings, both in units of the bulk J.

    The template fixes N, J and the qubit field h0.

    Returns:
        pd.DataFrame: columns h_over_J, j0_over_J, measure, diverging, horizon,
            j0 varying slowest
    """
    if logger is None:
        logger = setup_default_logger()
    if not spec_template.is_xx():
        raise ValueError("Measure sweeps need an XX template chain.")
    if horizon is None:
        horizon = recurrence_horizon(spec_template)

    points = [(float(h), float(j0)) for j0 in j0_values for h in h_values]
    worker = partial(
        _sweep_point,
        template=spec_template,
        horizon=horizon,
        dt=dt,
        check_divergence=check_divergence,
    )
    logger.info(f"Sweeping the measure over {len(points)} points with {n_jobs} job(s).")
    if n_jobs == 1:
        rows = [worker(point) for point in tqdm(points)]
    else:
        rows = parallel_map(worker, points, n_jobs=n_jobs)
    return pd.DataFrame(
        rows, columns=["h_over_J", "j0_over_J", "measure", "diverging", "horizon"]
    )
