"""Closed-form dispersion energies for the four conductor geometries.

The hemisphere-on-plane ("boss hat") angular factors ship in two
variants.  xi_factors/u_bosshat follow the transcribed reference
expressions verbatim; xi_factors_corrected/u_bosshat_corrected are
derived independently from the image construction.  Off the symmetry
axis the transcribed rho and z factors disagree with the image
construction (the discrepancy is certified against the numeric
evaluator and the finite-dipole oracle); on the axis the two variants
coincide.  The corrected variant is the accurate one; the transcribed
variant is retained so the discrepancy can be demonstrated and tested.

Near-contact third-order expansion coefficients are not taken on
trust; fit_expansion_coefficients recovers them from the exact forms
by a least-squares series fit (sphere: -7/8 confirmed; boss hat:
-3/8, not -7/8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContactError, ExpansionWindowError, RegionError
from .geometry import (
    DipoleVariances,
    EnergyResult,
    GeometryKind,
    Method,
    VarianceFrame,
)
from .units import UnitSystem

_REDUCED = UnitSystem.reduced()

# Third-order near-contact coefficients, determined by the independent
# series fit in fit_expansion_coefficients and certified in the tests.
SPHERE_EXPANSION_C3 = -0.875    # -7/8
BOSSHAT_EXPANSION_C3 = -0.375   # -3/8


def u_plane(
    variances: DipoleVariances, z0: float, units: UnitSystem = _REDUCED
) -> EnergyResult:
    """Atom-plane dispersion energy -[<d_1^2>+<d_2^2>+2<d_3^2>]/(64*pi*eps0*|z0|^3).

    Valid on either side of the plane; only contact z0 = 0 is rejected.
    The two transverse variance components enter symmetrically, so the
    frame tag does not matter here.

    >>> u_plane(DipoleVariances(0.0, 0.0, 1.0), 1.0).value
    -0.125
    """
    if z0 == 0.0:
        raise ContactError("zero distance to the plane")
    v = variances
    value = -(v.m1 + v.m2 + 2.0 * v.m3) / (
        16.0 * units.four_pi_epsilon0 * abs(z0) ** 3
    )
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


def _check_sphere(z0: float, radius: float) -> None:
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    if z0 <= radius:
        raise ContactError("atom must sit outside the sphere (z0 > R)")


def u_grounded_sphere(
    variance_total: float, z0: float, radius: float, units: UnitSystem = _REDUCED
) -> EnergyResult:
    """Isotropic atom vs grounded sphere, center-to-atom distance z0.

    U = -(<d^2>/24*pi*eps0) * [4R^3/z0^6 (1-R^2/z0^2)^-3
                               + R/z0^4 (1-R^2/z0^2)^-2]
    """
    _check_sphere(z0, radius)
    gap = 1.0 - (radius / z0) ** 2
    bracket = (
        4.0 * radius**3 / z0**6 / gap**3 + radius / z0**4 / gap**2
    )
    value = -variance_total * bracket / (6.0 * units.four_pi_epsilon0)
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


def u_grounded_sphere_alpha(
    alpha: float,
    omega10: float,
    a: float,
    radius: float,
    units: UnitSystem = _REDUCED,
) -> EnergyResult:
    """Grounded-sphere energy in surface-gap form for a dominant transition.

    U = -(hbar*omega10*alpha/16*pi*eps0*a^3) * [4/(2+a/R)^3 + (a/R)/(2+a/R)^2]
    with a = z0 - R; equals u_grounded_sphere with <d^2> = (3/2)*hbar*omega10*alpha.
    """
    if a <= 0.0:
        raise ContactError("surface gap a must be positive")
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    s = a / radius
    bracket = 4.0 / (2.0 + s) ** 3 + s / (2.0 + s) ** 2
    value = -(units.hbar * omega10 * alpha) * bracket / (
        4.0 * units.four_pi_epsilon0 * a**3
    )
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


def u_isolated_sphere(
    variance_total: float, z0: float, radius: float, units: UnitSystem = _REDUCED
) -> EnergyResult:
    """Isotropic atom vs isolated (neutral) sphere.

    Same as the grounded bracket with R/z0^4 subtracted inside the
    braces; always weaker than the grounded attraction, still negative.
    """
    _check_sphere(z0, radius)
    gap = 1.0 - (radius / z0) ** 2
    bracket = (
        4.0 * radius**3 / z0**6 / gap**3
        + radius / z0**4 / gap**2
        - radius / z0**4
    )
    value = -variance_total * bracket / (6.0 * units.four_pi_epsilon0)
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


@dataclass(frozen=True)
class BossHatXi:
    """Evaluated boss-hat angular factors at one position.

    xi_rho, xi_phi, xi_z are dimensionless; zeta is the auxiliary
    polynomial appearing inside xi_z (dimension length^12).
    """

    xi_rho: float
    xi_phi: float
    xi_z: float
    zeta: float


def _check_bosshat_region(radius: float, rho0: float, z0: float) -> None:
    if radius < 0.0:
        raise ValueError("radius must be >= 0")
    if not (z0 > 0.0 and rho0 * rho0 + z0 * z0 > radius * radius):
        raise RegionError(
            "boss-hat atom position requires z0 > 0 and rho0^2 + z0^2 > R^2"
        )


def xi_factors(radius: float, rho0: float, z0: float) -> BossHatXi:
    """Boss-hat angular factors, transcribed reference form.

    Known defects certified against the image construction (see
    xi_factors_corrected): the rho-factor numerator carries a wrong
    sign on its R^4*rho0^2 term and the zeta polynomial is wrong off
    the axis.  On the axis (rho0 = 0) all three factors are exact, and
    at R = 0 they reduce to the plane values (1, 1, 2) exactly.
    """
    _check_bosshat_region(radius, rho0, z0)
    r2 = radius * radius
    p2 = rho0 * rho0
    z2 = z0 * z0
    a = (p2 + z2 + r2) ** 2 - 4.0 * r2 * p2
    a32 = a * math.sqrt(a)
    a52 = a * a * math.sqrt(a)
    d3 = (p2 + z2 - r2) ** 3
    w = 8.0 * radius * z0**3

    num_rho = ((r2 + z2) ** 2 + (r2 - p2 - 8.0 * z2) * p2) * r2 + (z2 + p2) ** 2 * p2
    xi_rho = 1.0 - w * (num_rho / a52 - (p2 + r2) / d3)

    xi_phi = 1.0 + w * r2 * (1.0 / d3 - 1.0 / a32)

    zeta = (
        -r2
        * p2
        * (
            -10.0 * p2**2 * z2**2
            - 10.0 * p2**2 * r2 * z2
            - 10.0 * r2**2 * p2**2
            + 8.0 * p2 * r2**2 * z2
            - z2**4
            + 2.0 * p2**3 * z2
            + 8.0 * p2 * z2**3
            - 36.0 * p2 * r2 * z2**2
            + 10.0 * p2 * r2**3
        )
        - (r2**2 - z2**2) ** 2 * (r2 - z2) ** 2
        - 5.0 * p2 * z2**2 * (z2 + p2) * ((z2 + p2) ** 2 - p2 * z2)
    )
    xi_z = 2.0 + (w / d3) * (r2 + z2 + zeta / a52)
    return BossHatXi(xi_rho, xi_phi, xi_z, zeta)


def xi_factors_corrected(radius: float, rho0: float, z0: float) -> BossHatXi:
    """Boss-hat angular factors derived from the image construction.

    Matches the numeric evaluator and finite-dipole oracle to
    floating-point accuracy on and off the axis.  Differences from the
    transcribed form: the rho numerator term +R^4*rho0^2 becomes
    -R^4*rho0^2 (sign), and zeta is replaced by
    [(R^2-z0^2)((R^2+z0^2)^2+rho0^4) - 2 rho0^2 (R^4+4R^2 z0^2+z0^4)]
    times (rho0^2+z0^2-R^2)^3.  The phi factor is identical.
    """
    _check_bosshat_region(radius, rho0, z0)
    r2 = radius * radius
    p2 = rho0 * rho0
    z2 = z0 * z0
    a = (p2 + z2 + r2) ** 2 - 4.0 * r2 * p2
    a32 = a * math.sqrt(a)
    a52 = a * a * math.sqrt(a)
    d = p2 + z2 - r2
    d3 = d**3
    w = 8.0 * radius * z0**3

    num_rho = ((r2 + z2) ** 2 - (r2 + p2 + 8.0 * z2) * p2) * r2 + (z2 + p2) ** 2 * p2
    xi_rho = 1.0 - w * (num_rho / a52 - (p2 + r2) / d3)

    xi_phi = 1.0 + w * r2 * (1.0 / d3 - 1.0 / a32)

    w_z = (r2 - z2) * ((r2 + z2) ** 2 + p2 * p2) - 2.0 * p2 * (
        r2 * r2 + 4.0 * r2 * z2 + z2 * z2
    )
    xi_z = 2.0 + w * ((r2 + z2) / d3 + w_z / a52)
    return BossHatXi(xi_rho, xi_phi, xi_z, w_z * d3)


def _u_from_xi(
    variances: DipoleVariances, z0: float, xi: BossHatXi, units: UnitSystem
) -> float:
    v = variances
    return -(v.m1 * xi.xi_rho + v.m2 * xi.xi_phi + v.m3 * xi.xi_z) / (
        16.0 * units.four_pi_epsilon0 * z0**3
    )


def u_bosshat(
    variances: DipoleVariances,
    rho0: float,
    z0: float,
    radius: float,
    units: UnitSystem = _REDUCED,
) -> EnergyResult:
    """Boss-hat dispersion energy using the transcribed angular factors.

    U = -(1/64*pi*eps0*z0^3) * [<d_rho^2> Xi_rho + <d_phi^2> Xi_phi
                                + <d_z^2> Xi_z]

    Variance components are read in the local cylindrical frame
    (rho, phi, z).  Off the symmetry axis the transcribed factors are
    known to be wrong; use u_bosshat_corrected for accurate values
    (identical on the axis).
    """
    xi = xi_factors(radius, rho0, z0)
    value = _u_from_xi(variances, z0, xi, units)
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


def u_bosshat_corrected(
    variances: DipoleVariances,
    rho0: float,
    z0: float,
    radius: float,
    units: UnitSystem = _REDUCED,
) -> EnergyResult:
    """Boss-hat dispersion energy from the corrected angular factors."""
    xi = xi_factors_corrected(radius, rho0, z0)
    value = _u_from_xi(variances, z0, xi, units)
    return EnergyResult(value, 0.0, Method.CLOSED_FORM, units.mode)


def _expansion3(
    variance_total: float, z0: float, radius: float, c3: float, units: UnitSystem
) -> EnergyResult:
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    s = (z0 - radius) / radius
    if not 0.0 < s < 0.5:
        raise ExpansionWindowError(
            "near-contact expansion valid only for 0 < (z0-R)/R < 0.5"
        )
    a = z0 - radius
    bracket = 1.0 - s + s * s + c3 * s**3
    value = -variance_total * bracket / (12.0 * units.four_pi_epsilon0 * a**3)
    # Remainder of the truncated series; the 5 s^4 envelope is measured
    # against the exact forms in the tests.
    err = abs(value) * 5.0 * s**4
    return EnergyResult(value, err, Method.EXPANSION3, units.mode)


def u_sphere_expansion3(
    variance_total: float, z0: float, radius: float, units: UnitSystem = _REDUCED
) -> EnergyResult:
    """Grounded-sphere energy expanded to third order in s = (z0-R)/R.

    U = -<d^2>/(48*pi*eps0*(z0-R)^3) * [1 - s + s^2 - (7/8) s^3]
    """
    return _expansion3(variance_total, z0, radius, SPHERE_EXPANSION_C3, units)


def u_bosshat_expansion3(
    variance_total: float, z0: float, radius: float, units: UnitSystem = _REDUCED
) -> EnergyResult:
    """On-axis boss-hat energy expanded to third order in s = (z0-R)/R.

    U = -<d^2>/(48*pi*eps0*(z0-R)^3) * [1 - s + s^2 - (3/8) s^3]

    The third-order coefficient -3/8 comes from the series fit of the
    exact on-axis energy; it differs from the sphere's -7/8, so the two
    expansions coincide only through second order.
    """
    return _expansion3(variance_total, z0, radius, BOSSHAT_EXPANSION_C3, units)


def sphere_bracket(s: float) -> float:
    """Dimensionless near-contact bracket B(s) of the grounded sphere,
    normalized so B(0) = 1: U = -<d^2> B(s)/(48*pi*eps0*a^3), a = sR."""
    u = u_grounded_sphere(1.0, 1.0 + s, 1.0, _REDUCED)
    return -12.0 * s**3 * u.value


def bosshat_axis_bracket(s: float) -> float:
    """Same normalization for the isotropic on-axis boss-hat energy."""
    v = DipoleVariances.isotropic(1.0, VarianceFrame.CYLINDRICAL_LOCAL)
    u = u_bosshat(v, 0.0, 1.0 + s, 1.0, _REDUCED)
    return -12.0 * s**3 * u.value


def fit_expansion_coefficients(
    kind: GeometryKind,
    orders: int = 6,
    window: tuple[float, float] = (1e-4, 1e-2),
    n_points: int = 60,
) -> np.ndarray:
    """Least-squares series fit of the near-contact bracket B(s).

    Returns the coefficients of s^0 .. s^(orders-1) fitted over a
    log-spaced window.  This is the independent determination of the
    third-order coefficients: it does not assume the truncated
    expansion, only the exact closed forms.
    """
    if kind is GeometryKind.GROUNDED_SPHERE:
        bracket = sphere_bracket
    elif kind is GeometryKind.BOSS_HAT:
        bracket = bosshat_axis_bracket
    else:
        raise ValueError("series fit defined for gsphere and bosshat only")
    lo, hi = window
    if not 0.0 < lo < hi:
        raise ValueError("window must satisfy 0 < lo < hi")
    s = np.logspace(math.log10(lo), math.log10(hi), n_points)
    y = np.array([bracket(si) for si in s])
    powers = np.arange(orders)
    design = np.power.outer(s, powers)
    col_scale = np.power(hi, powers)   # condition the Vandermonde columns
    coef, _, _, _ = np.linalg.lstsq(design / col_scale, y, rcond=None)
    return coef / col_scale
