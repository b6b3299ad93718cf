from .metrics import centroid, max_pairwise_distance, power_law_exponent

__version__ = "0.1.0"
__description__ = "Scaling fits and ensemble spread metrics."
__all__ = [f for f in dir() if not f.startswith("_")]
