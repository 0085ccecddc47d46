"""Brute-force validation path: the atom as a physical two-charge dipole.

A point dipole along the unit vector e with variance v is represented
by charges +q at the base point and -q at base + h e, with q h =
sqrt(v).  The interaction energy of this pair with its own images is

    U(h) = (q^2/2*eps0) [G_H(b, b) - G_H(b, t) - G_H(t, b) + G_H(t, t)]

with b the base and t the tip; as h -> 0 it tends to the per-axis
dispersion term (1/2*eps0) <d_m^2> d_m d'_m G_H.  extrapolated_energy
centers each pair on the atom position (base = r0 - (h/2) e), which
cancels the odd powers of h in the error expansion, then extrapolates
the step schedule to h = 0 with a {1, h^2, h^4} least-squares fit.

This path shares only the image construction with the closed forms and
the numeric evaluator; the differentiation is replaced by physical
charge displacement, which is what makes it an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ExtrapolationError, RegionError
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

_REDUCED = UnitSystem.reduced()

# Default step schedule as fractions of the distance to the surface:
# geometric, inside the quadratic-convergence window, above noise.
DEFAULT_H_FRACTIONS = (1e-2, 5e-3, 2.5e-3, 1.25e-3)

# Residual tolerance of the h -> 0 fit, relative to the extrapolated value.
_FIT_RTOL = 1e-3


@dataclass(frozen=True)
class FiniteDipole:
    """Two point charges +q at center and -q at center + h_vec."""

    q: float
    h_vec: tuple[float, float, float]
    center: Position
    axis: str | None = None   # informational label of the variance axis


def _finite_dipole_energy_green(
    green: HomogeneousGreen, fd: FiniteDipole, units: UnitSystem
) -> float:
    g = green.geometry
    base = fd.center
    tip = base.shifted(*fd.h_vec)
    if not (physical_region(g, base) and physical_region(g, tip)):
        raise RegionError("both dipole charges must lie in the physical region")
    if fd.h_vec == (0.0, 0.0, 0.0):
        return 0.0   # the four terms cancel identically
    combination = (
        g_h(green, base, base)
        - g_h(green, base, tip)
        - g_h(green, tip, base)
        + g_h(green, tip, tip)
    )
    # q^2/(2 eps0) written via 4*pi*eps0 so reduced mode stays exact.
    return fd.q**2 * (2.0 * math.pi / units.four_pi_epsilon0) * combination


def finite_dipole_energy(
    g: GeometryConfig, fd: FiniteDipole, units: UnitSystem = _REDUCED
) -> float:
    """Image-interaction energy of a finite two-charge dipole."""
    return _finite_dipole_energy_green(build_green(g), fd, units)


def extrapolated_energy(
    g: GeometryConfig,
    atom: AtomSpec | DipoleVariances,
    r0: Position,
    h_schedule: Sequence[float] | None = None,
    units: UnitSystem = _REDUCED,
) -> EnergyResult:
    """Dispersion energy by finite-dipole h -> 0 extrapolation.

    For each variance axis, a centered pair with q h = sqrt(<d_m^2>) is
    evaluated over the step schedule and the sequence is extrapolated
    to h = 0; the axis contributions add.  err_estimate combines the
    fit residual with the sensitivity of the extrapolated value to
    dropping the h^4 term.
    """
    if not physical_region(g, r0):
        raise RegionError("r0 must lie strictly inside the physical region")
    green = build_green(g)
    v = variances_of(atom)
    ell = surface_distance(g, r0)
    if h_schedule is None:
        h_values = np.array([f * ell for f in DEFAULT_H_FRACTIONS])
    else:
        h_values = np.asarray([float(h) for h in h_schedule])
    if len(h_values) < 3:
        raise ValueError("h_schedule needs at least 3 steps for the h^2, h^4 fit")
    if not (np.all(h_values > 0.0) and np.all(np.diff(h_values) < 0.0)):
        raise ValueError("h_schedule must be positive and strictly decreasing")

    x = (h_values / ell) ** 2
    design_full = np.column_stack([np.ones_like(x), x, x * x])
    design_quad = design_full[:, :2]

    total = 0.0
    err_total = 0.0
    axes = local_axes(v.frame, r0)
    for weight, e, label in zip((v.m1, v.m2, v.m3), axes, ("1", "2", "3")):
        if weight == 0.0:
            continue
        root = math.sqrt(weight)
        samples = np.empty(len(h_values))
        for k, h in enumerate(h_values):
            base = Position(
                r0.x - 0.5 * h * e[0],
                r0.y - 0.5 * h * e[1],
                r0.z - 0.5 * h * e[2],
            )
            fd = FiniteDipole(
                q=root / h,
                h_vec=(h * e[0], h * e[1], h * e[2]),
                center=base,
                axis=label,
            )
            samples[k] = _finite_dipole_energy_green(green, fd, units)
        coef_full, _, _, _ = np.linalg.lstsq(design_full, samples, rcond=None)
        coef_quad, _, _, _ = np.linalg.lstsq(design_quad, samples, rcond=None)
        a0 = float(coef_full[0])
        residual = float(np.max(np.abs(design_full @ coef_full - samples)))
        err_axis = max(residual, abs(a0 - float(coef_quad[0])))
        scale = max(abs(a0), float(np.max(np.abs(samples))))
        if scale > 0.0 and err_axis > _FIT_RTOL * scale:
            raise ExtrapolationError(
                f"finite-dipole extrapolation failed to converge on axis {label}"
            )
        total += a0
        err_total += err_axis
    return EnergyResult(total, err_total, Method.ORACLE, units.mode)
