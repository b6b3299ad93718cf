import numpy as np
from scipy.spatial.distance import pdist


def power_law_exponent(x, y) -> float:
    """Slope of log|y| against log x from a least-squares line."""
    x, y = np.asarray(x, dtype=float), np.abs(np.asarray(y, dtype=float))
    if x.size < 2 or x.size != y.size:
        raise ValueError("Need at least two matching (x, y) points.")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Power-law fits need positive x and nonzero y.")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def max_pairwise_distance(points) -> float:
    """Largest Euclidean distance between rows of points; 0 for fewer than two rows."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if len(points) < 2:
        return 0.0
    return float(pdist(points).max())


def centroid(points) -> np.ndarray:
    return np.mean(np.atleast_2d(np.asarray(points, dtype=float)), axis=0)
