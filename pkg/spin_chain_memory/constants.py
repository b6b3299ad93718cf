"""
Tolerances and experiment configuration schemas.

numerical tolerances
experiment_names
ChainConfig, ExperimentConfig and the per-experiment TypedDicts
"""

from typing import Optional, TypedDict, Union

# numerical tolerances
DECOMPOSITION_TOL = 1e-10
STATE_TOL = 1e-12
MAP_INVARIANT_TOL = 1e-8
FLUX_DERIVATIVE_TOL = 1e-12
WINDOW_XTOL = 1e-10
ZERO_MODE_TOL = 1e-12
PARABOLA_TOL = 1e-9
CHOI_TOL = 1e-8
CHI_CLIP_TOL = 1e-8
CHI_ERROR_TOL = 1e-6
SINGULAR_MAP_TOL = 1e-12

ED_MAX_SITES = 10
DEFAULT_TIME_STEP = 0.05
QPT_TIME_STEP = 0.2
POINTS_PER_PERIOD = 16
RECURRENCE_FRACTION = 2.0 / 3.0
DIVERGENCE_GROWTH = 0.05
GAD_PARAMETER_BOX = (0.0, 50.0)
GAD_RESTARTS = 8
GAD_START_FLOOR = 1e-2

experiment_names = (
    "coeffs",
    "measure-sweep",
    "flux",
    "divisibility",
    "qpt",
    "spectrum",
    "excitations",
    "gad-fit",
    "fixed-point",
)


class UniformChainConfig(TypedDict, total=False):
    J: float
    J0: float
    h: float
    h0: float
    N: int
    gamma: float


class ChainConfig(TypedDict, total=False):
    uniform: UniformChainConfig
    n_sites: int
    jx: list[float]
    jy: list[float]
    fields: list[float]


class ExperimentConfig(TypedDict, total=False):
    experiment: str
    chain: ChainConfig
    chain_state: str
    dt: float
    horizon: Optional[float]
    seed: Optional[int]
    threads: int
    out: Optional[str]


class SweepConfig(ExperimentConfig, total=False):
    h_values: Union[list[float], dict]
    j0_values: Union[list[float], dict]
    check_divergence: bool


class DivisibilityConfig(ExperimentConfig, total=False):
    h_values: Union[list[float], dict]
    t_horizon: float
    t1_horizon: float
    step: float
    probe: str


class QptConfig(ExperimentConfig, total=False):
    n_check_states: int
    fit_reference: bool
    restarts: int


class SpectrumConfig(ExperimentConfig, total=False):
    h_values: Union[list[float], dict]
    j0_values: Union[list[float], dict]
    n_sites: int


class ExcitationsConfig(ExperimentConfig, total=False):
    h_values: Union[list[float], dict]
    probe: str


class FixedPointConfig(ExperimentConfig, total=False):
    h_values: Union[list[float], dict]
    n_states: int
    n_trajectory_states: int
    final_time: float
    scaling_sites: list[int]
