#!/usr/bin/env python3
"""
Parameter set of a qubit coupled to the first site of an open XY chain.

Site 0 is always the qubit. Bond n joins sites n and n+1, so jx[0], jy[0] couple the qubit
to the chain and fields[0] is the field on the qubit. Energies are in units of the bulk
coupling J.

Classes:
    ChainSpecError
    ChainSpec
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


class ChainSpecError(ValueError):
    """Raised for inconsistent or non-finite chain parameters."""


def _as_float_tuple(values: Sequence[float], name: str) -> tuple[float, ...]:
    try:
        array = np.asarray(values, dtype=float).ravel()
    except (TypeError, ValueError) as err:
        raise ChainSpecError(f"{name} must be a list of real numbers.") from err
    if not np.all(np.isfinite(array)):
        raise ChainSpecError(f"{name} contains non-finite entries: {array.tolist()}.")
    return tuple(float(x) for x in array)


@dataclass(frozen=True)
class ChainSpec:
    """
    Couplings and fields of H0 + H_chain.

    Attributes:
        n_sites (int): number of chain spins N (the qubit is not counted)
        jx (tuple[float]): XX couplings of the N bonds
        jy (tuple[float]): YY couplings of the N bonds
        fields (tuple[float]): local fields h_0 .. h_N

    Example:
        spec = ChainSpec.uniform(J=1.0, J0=1.0, h=0.5, h0=0.0, N=100)
        spec.is_xx()  # True
    """

    n_sites: int
    jx: tuple[float, ...]
    jy: tuple[float, ...]
    fields: tuple[float, ...]

    def __post_init__(self):
        if isinstance(self.n_sites, bool) or int(self.n_sites) != self.n_sites:
            raise ChainSpecError(f"n_sites must be an integer, got {self.n_sites!r}.")
        if self.n_sites < 1:
            raise ChainSpecError(f"n_sites must be at least 1, got {self.n_sites}.")
        object.__setattr__(self, "n_sites", int(self.n_sites))
        object.__setattr__(self, "jx", _as_float_tuple(self.jx, "jx"))
        object.__setattr__(self, "jy", _as_float_tuple(self.jy, "jy"))
        object.__setattr__(self, "fields", _as_float_tuple(self.fields, "fields"))
        if len(self.jx) != self.n_sites or len(self.jy) != self.n_sites:
            raise ChainSpecError(
                f"jx and jy need {self.n_sites} entries, got {len(self.jx)} and {len(self.jy)}."
            )
        if len(self.fields) != self.n_sites + 1:
            raise ChainSpecError(
                f"fields needs {self.n_sites + 1} entries, got {len(self.fields)}."
            )

    @classmethod
    def uniform(
        cls,
        J: float = 1.0,
        J0: Optional[float] = None,
        h: float = 0.0,
        h0: float = 0.0,
        N: int = 100,
        gamma: float = 0.0,
    ) -> "ChainSpec":
        """
        Homogeneous chain with an impurity bond J0 and an impurity field h0 on the qubit.

        gamma is the XY anisotropy: every bond gets Jx = J(1 + gamma), Jy = J(1 - gamma).
        """
        J0 = J if J0 is None else J0
        couplings = np.full(N, float(J))
        if N > 0:
            couplings[0] = J0
        jx = couplings * (1.0 + gamma)
        jy = couplings * (1.0 - gamma)
        fields = np.full(N + 1, float(h))
        fields[0] = h0
        return cls(n_sites=N, jx=jx, jy=jy, fields=fields)

    @classmethod
    def from_dict(cls, config: dict) -> "ChainSpec":
        """
        Build a spec from either the full lists or the uniform shorthand.

        Full form: {n_sites, jx, jy, fields}; jy defaults to jx.
        Shorthand: {uniform: {J, J0, h, h0, N, gamma}} with N mandatory.
        """
        if not isinstance(config, dict):
            raise ChainSpecError(f"Chain config must be a mapping, got {type(config).__name__}.")
        if "uniform" in config:
            params = dict(config["uniform"])
            if "N" not in params:
                raise ChainSpecError("Uniform chain shorthand needs the number of sites N.")
            unknown = set(params) - {"J", "J0", "h", "h0", "N", "gamma"}
            if unknown:
                raise ChainSpecError(f"Unknown uniform chain keys: {sorted(unknown)}.")
            return cls.uniform(**params)
        missing = {"n_sites", "jx", "fields"} - set(config)
        if missing:
            raise ChainSpecError(f"Chain config is missing keys {sorted(missing)}.")
        return cls(
            n_sites=config["n_sites"],
            jx=config["jx"],
            jy=config.get("jy", config["jx"]),
            fields=config["fields"],
        )

    def to_dict(self) -> dict:
        return {
            "n_sites": self.n_sites,
            "jx": list(self.jx),
            "jy": list(self.jy),
            "fields": list(self.fields),
        }

    def is_xx(self) -> bool:
        return all(a == b for a, b in zip(self.jx, self.jy))

    def is_uniform(self, J: float, J0: float, h: float, h0: float) -> bool:
        return (
            self.is_xx()
            and self.jx[0] == J0
            and all(j == J for j in self.jx[1:])
            and self.fields[0] == h0
            and all(x == h for x in self.fields[1:])
        )

    @property
    def bulk_coupling(self) -> float:
        return self.jx[-1]

    @property
    def bulk_field(self) -> float:
        return self.fields[-1]

    @property
    def qubit_coupling(self) -> float:
        return self.jx[0]

    @property
    def detuning(self) -> float:
        """Field on the first chain site minus the field on the qubit."""
        return self.fields[1] - self.fields[0]

    def extended(self, n_sites: int) -> "ChainSpec":
        """Longer chain padded with the last bond and field, used to push recurrences out."""
        if n_sites < self.n_sites:
            raise ChainSpecError(
                f"Cannot extend a chain of {self.n_sites} sites to {n_sites} sites."
            )
        pad = n_sites - self.n_sites
        return ChainSpec(
            n_sites=n_sites,
            jx=self.jx + (self.jx[-1],) * pad,
            jy=self.jy + (self.jy[-1],) * pad,
            fields=self.fields + (self.fields[-1],) * pad,
        )

    def shifted(self, field_shift: float) -> "ChainSpec":
        """Same chain with every field, qubit included, moved by field_shift."""
        return ChainSpec(
            n_sites=self.n_sites,
            jx=self.jx,
            jy=self.jy,
            fields=tuple(x + field_shift for x in self.fields),
        )
