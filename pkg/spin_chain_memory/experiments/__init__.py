from .Experiment import ConfigError, Experiment
from .CoeffsExperiment import CoeffsExperiment
from .MeasureSweepExperiment import MeasureSweepExperiment
from .FluxExperiment import FluxExperiment
from .DivisibilityExperiment import DivisibilityExperiment
from .QptExperiment import QptExperiment
from .GadFitExperiment import GadFitExperiment
from .SpectrumExperiment import SpectrumExperiment
from .ExcitationsExperiment import ExcitationsExperiment
from .FixedPointExperiment import FixedPointExperiment
from .cli import EXPERIMENT_CLASSES, build_config, main

__version__ = "0.1.0"
__description__ = "Batch experiments writing CSV tables, and their command-line entry point."
__all__ = [f for f in dir() if not f.startswith("_")]
