"""Dispersion energy from mixed second derivatives of the induced
Green function:

    U(r0) = (1/2*eps0) * sum_m <d_m^2> * d_m d'_m G_H(r, r')|_{r=r'=r0}

The derivative along each axis is taken with the 4-point tensor-product
stencil

    [G(+h,+h) - G(+h,-h) - G(-h,+h) + G(-h,-h)] / (4 h^2)

whose error expands in even powers of h, and Richardson-extrapolated
over halved steps.  Only diagonal axis pairs are needed because the
dipole covariance is diagonal in the chosen basis.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .errors import RegionError, StepUnderflowError
from .geometry import (
    AtomSpec,
    DipoleVariances,
    EnergyResult,
    GeometryConfig,
    Method,
    Position,
    local_axes,
    physical_region,
    surface_distance,
    variances_of,
)
from .images import HomogeneousGreen, build_green, g_h
from .units import UnitSystem

_EPS = sys.float_info.epsilon

_AXIS_VECTORS = {
    "x": (1.0, 0.0, 0.0),
    "y": (0.0, 1.0, 0.0),
    "z": (0.0, 0.0, 1.0),
}


@dataclass(frozen=True)
class DiffSettings:
    """Finite-difference controls.

    base_step is a fraction of the local length scale
    max(distance-to-surface, 0.01*|r0|).  The default 1e-2 with three
    Richardson levels keeps rounding noise near 1e-11 relative while the
    extrapolated truncation error sits near 1e-12; much smaller raw
    steps drown the stencil in cancellation noise.
    """

    base_step: float = 1e-2
    richardson_levels: int = 3

    def __post_init__(self) -> None:
        if not 0.0 < self.base_step < 1e-1:
            raise ValueError("base_step must lie in (0, 1e-1)")
        if not 1 <= self.richardson_levels <= 6:
            raise ValueError("richardson_levels must lie in [1, 6]")


DEFAULT_DIFF_SETTINGS = DiffSettings()


def _stencil(
    green: HomogeneousGreen,
    r0: Position,
    e: tuple[float, float, float],
    h: float,
) -> float:
    plus = Position(r0.x + h * e[0], r0.y + h * e[1], r0.z + h * e[2])
    minus = Position(r0.x - h * e[0], r0.y - h * e[1], r0.z - h * e[2])
    return (
        g_h(green, plus, plus)
        - g_h(green, plus, minus)
        - g_h(green, minus, plus)
        + g_h(green, minus, minus)
    ) / (4.0 * h * h)


def mixed_second_dir(
    green: HomogeneousGreen,
    r0: Position,
    direction: tuple[float, float, float],
    settings: DiffSettings = DEFAULT_DIFF_SETTINGS,
) -> tuple[float, float]:
    """Mixed second derivative of G_H along an arbitrary unit direction.

    Returns (value, err) where err is the last Richardson increment
    (nan for a single level, which has no estimate).
    """
    g = green.geometry
    if not physical_region(g, r0):
        raise RegionError("r0 must lie strictly inside the physical region")
    dist = surface_distance(g, r0)
    scale = max(dist, 0.01 * r0.norm)
    h0 = settings.base_step * scale
    if h0 >= dist:
        h0 = 0.45 * dist   # stencil points must not cross the conductor
    levels = settings.richardson_levels
    if h0 / 2.0 ** (levels - 1) < 1e3 * _EPS * r0.norm:
        raise StepUnderflowError(
            "finite-difference step below floating-point resolution"
        )

    row_prev: list[float] = []
    diag_prev = math.nan
    h = h0
    for i in range(levels):
        row = [_stencil(green, r0, direction, h)]
        for j in range(1, i + 1):
            factor = 4.0**j
            row.append(row[j - 1] + (row[j - 1] - row_prev[j - 1]) / (factor - 1.0))
        if i == levels - 2:
            diag_prev = row[-1]
        row_prev = row
        h *= 0.5
    value = row_prev[-1]
    err = abs(value - diag_prev) if levels >= 2 else math.nan
    return value, err


def mixed_second(
    green: HomogeneousGreen,
    r0: Position,
    axis: str,
    settings: DiffSettings = DEFAULT_DIFF_SETTINGS,
) -> tuple[float, float]:
    """Mixed second derivative along a Cartesian axis 'x', 'y' or 'z'."""
    try:
        direction = _AXIS_VECTORS[axis]
    except KeyError:
        raise ValueError(f"axis must be one of 'x', 'y', 'z', not {axis!r}") from None
    return mixed_second_dir(green, r0, direction, settings)


def energy_numeric(
    g: GeometryConfig,
    atom: AtomSpec | DipoleVariances,
    r0: Position,
    settings: DiffSettings = DEFAULT_DIFF_SETTINGS,
    units: UnitSystem = UnitSystem.reduced(),
) -> EnergyResult:
    """Dispersion energy by numerical differentiation of G_H.

    For cylindrical-frame variances the three derivative directions are
    rotated so components follow (rho-hat, phi-hat, z-hat) at the atom's
    azimuth; Cartesian-frame variances use the fixed (x, y, z) axes.
    """
    v = variances_of(atom)
    green = build_green(g)
    axes = local_axes(v.frame, r0)
    prefactor = 2.0 * math.pi / units.four_pi_epsilon0   # = 1/(2*eps0)
    value = 0.0
    err = 0.0
    for weight, direction in zip((v.m1, v.m2, v.m3), axes):
        if weight == 0.0:
            continue
        d, e = mixed_second_dir(green, r0, direction, settings)
        value += weight * d
        err += weight * (abs(e) if not math.isnan(e) else math.nan)
    return EnergyResult(
        value=prefactor * value,
        err_estimate=prefactor * err,
        method=Method.NUMERIC_EZ,
        units=units.mode,
    )
