"""Structured Cartesian grids with MAC-staggered storage.

Conventions used everywhere in this package:

  * Axis order is (x, y) in 2D and (x, y, z) in 3D.  Cell-centered arrays are
    indexed ``values[ix, iy(, iz)]`` and stored row-major (C order), so the
    last axis varies fastest in memory.
  * Cell centers sit at ``lo[k] + (i + 0.5) * h[k]``.
  * Velocity component k lives on the faces normal to axis k: its array has
    ``n[k] + 1`` entries along axis k and ``n[j]`` along every other axis j.
    Face i of component k sits at ``lo[k] + i * h[k]``.
  * With the slip boundary condition the boundary-normal faces (indices 0 and
    n[k] along axis k) hold exactly 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import ValidationError

__all__ = [
    "GridSpec",
    "Grid",
    "ScalarField",
    "VectorField",
    "Profile",
    "build_grid",
    "x_average",
    "gradient_magnitude",
    "divergence",
]


@dataclass(frozen=True)
class GridSpec:
    """Extents and cell counts of a uniform Cartesian grid."""

    dim: int
    lo: tuple[float, ...]
    hi: tuple[float, ...]
    n: tuple[int, ...]

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValidationError(f"grid dim must be 2 or 3, got {self.dim}")
        for name in ("lo", "hi", "n"):
            seq = getattr(self, name)
            if len(seq) != self.dim:
                raise ValidationError(
                    f"grid {name} has {len(seq)} entries for dim={self.dim}"
                )
        for k in range(self.dim):
            if not (np.isfinite(self.lo[k]) and np.isfinite(self.hi[k])):
                raise ValidationError(f"grid extent along axis {k} is not finite")
            if not self.hi[k] > self.lo[k]:
                raise ValidationError(
                    f"grid needs hi > lo along axis {k}: "
                    f"[{self.lo[k]}, {self.hi[k]}]"
                )
            if int(self.n[k]) != self.n[k] or self.n[k] < 4:
                raise ValidationError(
                    f"grid needs n >= 4 cells along axis {k}, got {self.n[k]}"
                )
            h = (self.hi[k] - self.lo[k]) / self.n[k]
            if not (np.isfinite(h) and h > 0):
                raise ValidationError(f"grid spacing along axis {k} is degenerate")


class Grid:
    """Uniform Cartesian grid: spacings, coordinates, and field factories."""

    def __init__(self, spec: GridSpec):
        self.spec = spec
        self.dim = spec.dim
        self.lo = np.asarray(spec.lo, dtype=float)
        self.hi = np.asarray(spec.hi, dtype=float)
        self.n = tuple(int(m) for m in spec.n)
        self.shape = self.n
        self.h = (self.hi - self.lo) / np.asarray(self.n, dtype=float)
        self.cell_volume = float(np.prod(self.h))
        self._centers = tuple(
            self.lo[k] + (np.arange(self.n[k]) + 0.5) * self.h[k]
            for k in range(self.dim)
        )

    def centers(self, axis: int) -> np.ndarray:
        """1D array of cell-center coordinates along one axis."""
        return self._centers[axis]

    def meshgrid(self) -> tuple[np.ndarray, ...]:
        """Cell-center coordinate arrays broadcast to the full grid shape."""
        return np.meshgrid(*self._centers, indexing="ij")

    def face_shape(self, axis: int) -> tuple[int, ...]:
        shape = list(self.n)
        shape[axis] += 1
        return tuple(shape)

    def scalar(self, fill: float = 0.0) -> "ScalarField":
        return ScalarField(self, np.full(self.shape, fill, dtype=float))

    def vector(self) -> "VectorField":
        comps = [np.zeros(self.face_shape(k)) for k in range(self.dim)]
        return VectorField(self, comps)

    def same_as(self, other: "Grid") -> bool:
        return self.spec == other.spec

    def __repr__(self):
        return f"Grid(dim={self.dim}, n={self.n}, h={tuple(self.h)})"


def build_grid(spec: GridSpec) -> Grid:
    """Validate a GridSpec and return the corresponding Grid."""
    return Grid(spec)


class ScalarField:
    """Cell-centered scalar values on a Grid."""

    __slots__ = ("grid", "values")

    def __init__(self, grid: Grid, values: np.ndarray):
        values = np.asarray(values, dtype=float)
        if values.shape != grid.shape:
            raise ValidationError(
                f"scalar values shape {values.shape} != grid shape {grid.shape}"
            )
        self.grid = grid
        self.values = values

    def copy(self) -> "ScalarField":
        return ScalarField(self.grid, self.values.copy())

    def min(self) -> float:
        return float(self.values.min())

    def max(self) -> float:
        return float(self.values.max())

    def integral(self) -> float:
        """Midpoint-quadrature integral over the domain."""
        return float(self.values.sum()) * self.grid.cell_volume

    def assert_finite(self, label: str = "field"):
        if not np.isfinite(self.values).all():
            raise ValidationError(f"{label} contains non-finite values")

    def __repr__(self):
        return f"ScalarField(shape={self.values.shape})"


class VectorField:
    """Face-staggered (MAC) velocity components on a Grid."""

    __slots__ = ("grid", "components")

    def __init__(self, grid: Grid, components: Sequence[np.ndarray]):
        if len(components) != grid.dim:
            raise ValidationError(
                f"vector field needs {grid.dim} components, got {len(components)}"
            )
        comps = []
        for k, comp in enumerate(components):
            comp = np.asarray(comp, dtype=float)
            if comp.shape != grid.face_shape(k):
                raise ValidationError(
                    f"component {k} shape {comp.shape} != face shape "
                    f"{grid.face_shape(k)}"
                )
            comps.append(comp)
        self.grid = grid
        self.components = comps

    def copy(self) -> "VectorField":
        return VectorField(self.grid, [c.copy() for c in self.components])

    def max_abs(self) -> float:
        return max(float(np.abs(c).max()) for c in self.components)

    def max_abs_per_axis(self) -> np.ndarray:
        return np.array([np.abs(c).max() for c in self.components])

    def pin_boundary_faces(self):
        """Zero the boundary-normal faces in place (slip condition)."""
        for k, comp in enumerate(self.components):
            first = [slice(None)] * self.grid.dim
            last = [slice(None)] * self.grid.dim
            first[k] = 0
            last[k] = comp.shape[k] - 1
            comp[tuple(first)] = 0.0
            comp[tuple(last)] = 0.0

    def to_cell_centers(self) -> list[np.ndarray]:
        """Average each component's two bounding faces onto cell centers."""
        out = []
        for k, comp in enumerate(self.components):
            lo_sl = [slice(None)] * self.grid.dim
            hi_sl = [slice(None)] * self.grid.dim
            lo_sl[k] = slice(0, -1)
            hi_sl[k] = slice(1, None)
            out.append(0.5 * (comp[tuple(lo_sl)] + comp[tuple(hi_sl)]))
        return out

    def assert_finite(self, label: str = "velocity"):
        for k, comp in enumerate(self.components):
            if not np.isfinite(comp).all():
                raise ValidationError(f"{label} component {k} is non-finite")

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.components)


class Profile(NamedTuple):
    """A 1D profile sampled at row centers: (coordinate, value) pairs."""

    y: np.ndarray
    value: np.ndarray


def x_average(f: ScalarField, axis: int | None = None) -> Profile:
    """Average a field along one axis, returning the profile over the rest.

    For 2D fields the default averages along x (axis 0), producing the
    per-row means over y; under midpoint quadrature this equals
    (1/L_x) * integral of f dx.  3D input requires an explicit axis.
    """
    grid = f.grid
    if axis is None:
        if grid.dim != 2:
            raise ValidationError(
                "x_average needs an explicit axis for 3D fields"
            )
        axis = 0
    if not 0 <= axis < grid.dim:
        raise ValidationError(f"axis {axis} out of range for dim={grid.dim}")
    if grid.dim != 2:
        raise ValidationError("x_average profiles are defined on 2D grids")
    other = 1 - axis
    return Profile(grid.centers(other), f.values.mean(axis=axis))


def transverse_average(f: ScalarField, keep_axis: int = 1) -> Profile:
    """Average over every axis except ``keep_axis`` (2D: equals x_average)."""
    grid = f.grid
    axes = tuple(k for k in range(grid.dim) if k != keep_axis)
    return Profile(grid.centers(keep_axis), f.values.mean(axis=axes))


def gradient_magnitude(f: ScalarField) -> ScalarField:
    """Cell-centered |grad f|: central differences interior, one-sided at edges."""
    f.assert_finite("gradient_magnitude input")
    grid = f.grid
    grads = np.gradient(f.values, *grid.h, edge_order=1)
    if grid.dim == 2:
        gx, gy = grads
        mag = np.sqrt(gx * gx + gy * gy)
    else:
        gx, gy, gz = grads
        mag = np.sqrt(gx * gx + gy * gy + gz * gz)
    return ScalarField(grid, mag)


def divergence(u: VectorField) -> ScalarField:
    """Cell-centered discrete divergence of a face-staggered field."""
    grid = u.grid
    out = np.zeros(grid.shape)
    for k, comp in enumerate(u.components):
        out += np.diff(comp, axis=k) / grid.h[k]
    return ScalarField(grid, out)
