import inspect

import numpy as np


def _describe(value) -> str:
    if isinstance(value, np.ndarray):
        return f"ndarray{value.shape} {value.dtype}"
    if isinstance(value, dict):
        return f"dict with keys {sorted(value)}"
    if hasattr(value, "n_sites"):
        return f"{type(value).__name__} with {value.n_sites} sites"
    return type(value).__name__


def add_default_repr(cls):
    """
    Class decorator giving experiment-style classes a readable summary.

    Instance attributes are listed with a short description (arrays with shape and dtype, dicts
    with their keys, chains with their length), followed by the public methods of the class.
    A class that defines its own __repr__ keeps it.
    """

    def _default_repr(self):
        lines = [f"Class: {type(self).__name__}", "Attributes:"]
        lines += [f"  {key}: {_describe(value)}" for key, value in vars(self).items()]
        lines.append("Methods:")
        lines += [
            f"  {name}"
            for name, _ in inspect.getmembers(type(self), inspect.isfunction)
            if not name.startswith("_")
        ]
        return "\n".join(lines)

    cls._default_repr = _default_repr
    if "__repr__" not in vars(cls):
        cls.__repr__ = _default_repr
    return cls
