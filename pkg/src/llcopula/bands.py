"""Simultaneous confidence bands with iterated-logarithm half-width.

The band half-width is (1 + epsilon) * A_c / R_n with R_n the
law-of-iterated-logarithm rate sqrt(n / (2 log log n)); it is constant over
the grid, so the bands are the estimate surface shifted up and down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .estimator import GridEvaluation
from .families import CopulaModel, cdf


@dataclass(frozen=True)
class BandParameters:
    """Half-width inputs: sample size, the rate constant, optional inflation."""

    n: int
    A_c: float = 3.0
    epsilon: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        if self.n < 16:
            raise ConfigError(f"band construction needs n >= 16, got {self.n}")
        if not (0.0 < self.A_c <= 3.0):
            raise ConfigError(f"rate constant must satisfy 0 < A_c <= 3, got {self.A_c}")
        if not (np.isfinite(self.epsilon) and self.epsilon >= 0.0):
            raise ConfigError(f"inflation must be nonnegative, got {self.epsilon}")


def rate_rn(n: int) -> float:
    """sqrt(n / (2 log log n)), natural logarithms; requires n >= 16."""
    n = int(n)
    if n < 16:
        raise ConfigError(f"rate is used only for n >= 16, got {n}")
    return math.sqrt(n / (2.0 * math.log(math.log(n))))


def band_halfwidth(params: BandParameters) -> float:
    """(1 + epsilon) * A_c / R_n."""
    return (1.0 + params.epsilon) * params.A_c / rate_rn(params.n)


def shrunken_halfwidth(params: BandParameters) -> float:
    """(1 - epsilon) * A_c / R_n, the inner width that must eventually fail."""
    if not params.epsilon < 1.0:
        raise ConfigError("inner half-width needs epsilon < 1")
    return (1.0 - params.epsilon) * params.A_c / rate_rn(params.n)


@dataclass(frozen=True)
class BandGrid:
    """Estimate plus constant-width lower/upper surfaces on a lattice.

    Unclipped construction gives lower = estimate - halfwidth and
    upper = estimate + halfwidth componentwise; clipping to the copula
    envelope may pull a bound past the estimate, so only the ordering of
    the surfaces themselves is enforced here.
    """

    grid_u: np.ndarray
    grid_v: np.ndarray
    estimate: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    halfwidth: float
    meta: dict | None = None

    def __post_init__(self):
        for name in ("grid_u", "grid_v", "estimate", "lower", "upper"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        shape = (len(self.grid_u), len(self.grid_v))
        for name in ("estimate", "lower", "upper"):
            if getattr(self, name).shape != shape:
                raise ConfigError(f"{name} matrix shape must match the grids")
        if (self.lower > self.upper).any():
            raise ConfigError("lower band surface must not exceed the upper one")


@dataclass(frozen=True)
class ContainmentReport:
    """Fraction of grid nodes whose reference value lies inside the band."""

    fraction: float
    worst_violation: float
    n_nodes: int
    n_contained: int


def confidence_bands(
    grid: GridEvaluation, params: BandParameters, clip_to_frechet: bool = False
) -> BandGrid:
    """Constant half-width bands centered at the estimate.

    By default the bounds are left unclipped (lower bounds may be negative,
    upper bounds may exceed one); ``clip_to_frechet`` intersects them with
    the pointwise copula envelope for presentation.
    """
    if grid.n != params.n:
        raise ConfigError(f"grid was built from n={grid.n} but band parameters say n={params.n}")
    hw = band_halfwidth(params)
    lower = grid.values - hw
    upper = grid.values + hw
    if clip_to_frechet:
        uu = grid.grid_u[:, None]
        vv = grid.grid_v[None, :]
        env_hi = np.minimum(uu, vv) * np.ones_like(lower)
        # the envelope ordering is a theorem; the min guards the float edge
        # case u + 1 - 1 > u at the border nodes
        env_lo = np.minimum(np.maximum(uu + vv - 1.0, 0.0), env_hi)
        lower = np.maximum(lower, env_lo)
        upper = np.minimum(upper, env_hi)
    return BandGrid(
        grid_u=grid.grid_u,
        grid_v=grid.grid_v,
        estimate=grid.values,
        lower=lower,
        upper=upper,
        halfwidth=hw,
    )


def containment_report(bands: BandGrid, reference: CopulaModel) -> ContainmentReport:
    """Scan every node and compare the reference copula against the band."""
    uu, vv = np.meshgrid(bands.grid_u, bands.grid_v, indexing="ij")
    truth = cdf(reference, uu, vv)
    contained = (bands.lower <= truth) & (truth <= bands.upper)
    violation = np.maximum(bands.lower - truth, truth - bands.upper)
    return ContainmentReport(
        fraction=float(contained.mean()),
        worst_violation=float(max(violation.max(), 0.0)),
        n_nodes=int(contained.size),
        n_contained=int(contained.sum()),
    )
