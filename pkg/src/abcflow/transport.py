"""Explicit transport of the three species: advection, diffusion, reaction.

One step advances a, b, c by

  * conservative (flux-form) advection with face velocities and either
    first-order upwinding or MUSCL reconstruction with a minmod limiter,
  * explicit second-order central diffusion with homogeneous-Neumann
    (mirror ghost) boundaries, and
  * an explicit-Euler A + B -> C update sharing one rate array
    r = k*a*b, so sum(a+c), sum(b+c) and sum(a+b+2c) are conserved to
    roundoff when boundary fluxes vanish.

Everything is plain single-threaded numpy, hence bitwise reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .grid import Grid, ScalarField
from .model import PhysicalParams

__all__ = ["TransportConfig", "cfl_dt", "step_transport", "LIMITERS"]

LIMITERS = ("upwind1", "muscl-minmod")

# Inputs this far below zero are treated as corrupt rather than roundoff.
NEGATIVE_INPUT_TOL = 1e-12


@dataclass(frozen=True)
class TransportConfig:
    limiter: str = "muscl-minmod"
    cfl_safety: float = 0.4
    reaction_integrator: str = "explicit-euler"
    dt_max: float = 1.0

    def __post_init__(self):
        if self.limiter not in LIMITERS:
            raise ValidationError(
                f"transport.limiter must be one of {LIMITERS}, got {self.limiter!r}"
            )
        if not 0.0 < self.cfl_safety <= 1.0:
            raise ValidationError("transport.cfl_safety must be in (0, 1]")
        if self.reaction_integrator != "explicit-euler":
            raise ValidationError("transport.reaction_integrator must be 'explicit-euler'")
        if not self.dt_max > 0:
            raise ValidationError("transport.dt_max must be > 0")


def cfl_dt(state, params: PhysicalParams, cfg: TransportConfig) -> float:
    """Stable explicit time step for the current state.

    dt = cfl_safety * min(advective, diffusive, kinetic) clamped to dt_max.
    The diffusive bound uses max(d_A, d_B, d_C, mu_e) so the explicit
    viscous term of the momentum predictor obeys the same restriction.
    """
    grid: Grid = state.a.grid
    h = grid.h
    limits = [np.inf]

    umax = state.u.max_abs_per_axis()
    for k in range(grid.dim):
        if umax[k] > 0:
            limits.append(h[k] / umax[k])

    diff_coef = max(params.d_max, params.mu_e)
    if diff_coef > 0:
        limits.append(1.0 / (2.0 * diff_coef * float(np.sum(1.0 / h**2))))

    kinetic = params.k * max(state.a.max(), state.b.max())
    if kinetic > 0:
        limits.append(1.0 / kinetic)

    return float(min(cfg.cfl_safety * min(limits), cfg.dt_max))


def _neumann_pad(vals: np.ndarray, axis: int) -> np.ndarray:
    pad = [(0, 0)] * vals.ndim
    pad[axis] = (1, 1)
    return np.pad(vals, pad, mode="edge")


def _minmod(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return 0.5 * (np.sign(p) + np.sign(q)) * np.minimum(np.abs(p), np.abs(q))


def _interior(shape_len: int, axis: int) -> tuple[slice, ...]:
    sl = [slice(None)] * shape_len
    sl[axis] = slice(1, -1)
    return tuple(sl)


def _advection_tendency(vals: np.ndarray, u, grid: Grid, limiter: str) -> np.ndarray:
    """-div(u * phi) in flux form; boundary faces carry zero flux."""
    nd = grid.dim
    tend = np.zeros_like(vals)
    for k in range(nd):
        comp = u.components[k]
        u_int = comp[_interior(nd, k)]

        lo = [slice(None)] * nd
        hi = [slice(None)] * nd
        lo[k] = slice(0, -1)
        hi[k] = slice(1, None)
        left = vals[tuple(lo)]
        right = vals[tuple(hi)]

        if limiter == "upwind1":
            face = np.where(u_int > 0, left, right)
        else:
            padded = _neumann_pad(vals, k)
            dplus = np.diff(padded, axis=k)  # phi_{i+1}-phi_i with ghosts
            slope = _minmod(dplus[tuple(lo)], dplus[tuple(hi)])
            face_from_left = left + 0.5 * slope[tuple(lo)]
            face_from_right = right - 0.5 * slope[tuple(hi)]
            face = np.where(u_int > 0, face_from_left, face_from_right)

        flux = np.zeros(grid.face_shape(k))
        flux[_interior(nd, k)] = u_int * face
        tend -= np.diff(flux, axis=k) / grid.h[k]
    return tend


def _diffusion_tendency(vals: np.ndarray, d: float, grid: Grid) -> np.ndarray:
    """d * Laplacian(phi) with zero-flux boundaries, as face-flux differences."""
    nd = grid.dim
    tend = np.zeros_like(vals)
    for k in range(nd):
        flux = np.zeros(grid.face_shape(k))
        flux[_interior(nd, k)] = d * np.diff(vals, axis=k) / grid.h[k]
        tend += np.diff(flux, axis=k) / grid.h[k]
    return tend


def step_transport(state, dt: float, params: PhysicalParams, cfg: TransportConfig):
    """Advance (a, b, c) by one explicit step using state.u; returns new fields."""
    grid: Grid = state.a.grid
    if not dt > 0:
        raise ValidationError(f"transport step needs dt > 0, got {dt}")
    dt_stable = cfl_dt(state, params, cfg)
    if dt > dt_stable * (1.0 + 1e-9):
        raise ValidationError(
            f"transport step dt={dt:g} exceeds stable dt={dt_stable:g}"
        )
    for name in ("a", "b", "c"):
        field: ScalarField = getattr(state, name)
        field.assert_finite(name)
        if field.min() < -NEGATIVE_INPUT_TOL:
            raise ValidationError(
                f"{name} has negative values (min={field.min():.3e}) before transport"
            )

    a, b, c = state.a.values, state.b.values, state.c.values
    limiter = cfg.limiter

    rate = params.k * a * b
    new_a = a + dt * (
        _advection_tendency(a, state.u, grid, limiter)
        + _diffusion_tendency(a, params.d_A, grid)
    ) - dt * rate
    new_b = b + dt * (
        _advection_tendency(b, state.u, grid, limiter)
        + _diffusion_tendency(b, params.d_B, grid)
    ) - dt * rate
    new_c = c + dt * (
        _advection_tendency(c, state.u, grid, limiter)
        + _diffusion_tendency(c, params.d_C, grid)
    ) + dt * rate

    out = tuple(ScalarField(grid, v) for v in (new_a, new_b, new_c))
    for name, field in zip("abc", out):
        field.assert_finite(f"{name} after transport")
    return out
