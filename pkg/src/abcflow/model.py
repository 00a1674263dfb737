"""Physical parameters and pointwise closures.

The density closure is rho = 1 + R_A*a + R_B*b + R_C*c (Boussinesq: it enters
only through the gravity term) and the permeability closure is K(c) =
exp(-alpha*c).  The momentum drag is applied as mu*exp(alpha*c)*u, i.e.
mu/K(c) evaluated without an explicit division, which is the numerically
symmetric form.  All quantities are dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidationError
from .grid import ScalarField

__all__ = [
    "PhysicalParams",
    "BoundsSpec",
    "permeability",
    "density",
    "drag_coefficient",
    "reaction_rate",
    "case_preset",
    "CASE_PRESETS",
]


@dataclass(frozen=True)
class PhysicalParams:
    """All model constants; immutable after construction."""

    mu: float = 1.0
    mu_e: float = 1.0
    alpha: float = 0.0
    R_A: float = 0.0
    R_B: float = 0.0
    R_C: float = 0.0
    d_A: float = 1.0
    d_B: float = 1.0
    d_C: float = 1.0
    k: float = 1.0
    g: tuple[float, ...] = (0.0, -1.0)

    def __post_init__(self):
        for name in ("mu", "mu_e", "d_A", "d_B", "d_C"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"params.{name} must be > 0")
        if self.k < 0:
            raise ValidationError("params.k must be >= 0")
        if self.alpha < 0:
            raise ValidationError("params.alpha must be >= 0")
        for name in ("R_A", "R_B", "R_C"):
            if not np.isfinite(getattr(self, name)):
                raise ValidationError(f"params.{name} must be finite")
        if len(self.g) not in (2, 3) or not all(np.isfinite(gk) for gk in self.g):
            raise ValidationError("params.g must be a finite 2- or 3-vector")

    @property
    def d_max(self) -> float:
        return max(self.d_A, self.d_B, self.d_C)

    @property
    def equidiffusive(self) -> bool:
        return self.d_A == self.d_B == self.d_C

    def with_case(self, case_id: str) -> "PhysicalParams":
        """Copy with the (R_A, R_B, R_C, alpha) of one of the presets I..VI."""
        return replace(self, **case_preset(case_id))


@dataclass(frozen=True)
class BoundsSpec:
    """Initial-data bounds used by the concentration bound checks."""

    M_A: float
    M_B: float
    M_C: float
    T: float

    def __post_init__(self):
        for name in ("M_A", "M_B", "M_C"):
            if getattr(self, name) < 0:
                raise ValidationError(f"bounds.{name} must be >= 0")
        if not self.T > 0:
            raise ValidationError("bounds.T must be > 0")

    def c_cap(self, t: float, k: float) -> float:
        """Product bound M_C + k*M_A*M_B*t (valid for t <= T)."""
        return self.M_C + k * self.M_A * self.M_B * t

    def c_cap_equidiffusive(self) -> float:
        """Tighter product bound (M_A + M_B + 2*M_C)/2 for equal diffusivities."""
        return 0.5 * (self.M_A + self.M_B + 2.0 * self.M_C)


def permeability(c: ScalarField, alpha: float) -> ScalarField:
    """Pointwise K(c) = exp(-alpha*c); in (0, 1] whenever c >= 0."""
    return ScalarField(c.grid, np.exp(-alpha * c.values))


def drag_coefficient(c: ScalarField, params: PhysicalParams) -> ScalarField:
    """Pointwise mu/K(c) = mu*exp(alpha*c)."""
    return ScalarField(c.grid, params.mu * np.exp(params.alpha * c.values))


def density(
    a: ScalarField, b: ScalarField, c: ScalarField, params: PhysicalParams
) -> ScalarField:
    """Pointwise rho = 1 + R_A*a + R_B*b + R_C*c."""
    if not (a.grid.same_as(b.grid) and a.grid.same_as(c.grid)):
        raise ValidationError("density inputs live on different grids")
    rho = 1.0 + params.R_A * a.values + params.R_B * b.values + params.R_C * c.values
    return ScalarField(a.grid, rho)


def reaction_rate(a: ScalarField, b: ScalarField, k: float) -> ScalarField:
    """Pointwise rate k*a*b of the A + B -> C reaction."""
    if not a.grid.same_as(b.grid):
        raise ValidationError("reaction_rate inputs live on different grids")
    return ScalarField(a.grid, k * a.values * b.values)


# (R_A, R_C, alpha) per flat-interface case; R_B = 0 throughout.
CASE_PRESETS: dict[str, dict[str, float]] = {
    "I": {"R_A": 2.0, "R_B": 0.0, "R_C": 0.0, "alpha": 0.0},
    "II": {"R_A": 0.0, "R_B": 0.0, "R_C": 0.0, "alpha": 4.0},
    "III": {"R_A": 2.0, "R_B": 0.0, "R_C": 0.0, "alpha": 2.0},
    "IV": {"R_A": 1.0, "R_B": 0.0, "R_C": 0.0, "alpha": 4.0},
    "V": {"R_A": 0.0, "R_B": 0.0, "R_C": 2.0, "alpha": 0.0},
    "VI": {"R_A": 0.0, "R_B": 0.0, "R_C": 2.0, "alpha": 2.0},
}


def case_preset(case_id: str) -> dict[str, float]:
    """Expansion-coefficient/mobility overrides for cases I..VI."""
    try:
        return dict(CASE_PRESETS[case_id])
    except KeyError:
        raise ValidationError(
            f"unknown case {case_id!r}; valid cases: {', '.join(CASE_PRESETS)}"
        ) from None
