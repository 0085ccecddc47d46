"""Image-charge systems and the induced part of the electrostatic
Green function.

For each conductor the full Green function splits as

    G(r, r') = 1/(4*pi*|r - r'|) + G_H(r, r')

where the induced part G_H is harmonic in the vacuum region and
enforces the boundary condition on the surface.  For every supported
geometry G_H is a finite sum of image-charge Coulomb terms

    G_H(r, r') = (1/4*pi) * sum_k w_k(r') / |r - loc_k(r')|  (+ extra)

with weights w_k and locations loc_k depending on the source point r'.
The isolated sphere carries an additional separable term
R/(4*pi*|r|*|r'|) that restores charge neutrality on the sphere.

Image systems:

  plane            one image, weight -1, at (x', y', -z')
  grounded sphere  one image, weight -R/|r'|, at (R^2/|r'|^2) r'
  isolated sphere  the grounded image plus the separable extra term
  boss hat         three images: the sphere image, its mirror through
                   the plane with opposite weight, and the plane image
                   (hemisphere of radius R capping an infinite plane)
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateSourceError
from .geometry import GeometryConfig, GeometryKind, Position

FOUR_PI = 4.0 * math.pi
_EPS = sys.float_info.epsilon

# Fraction of the source-to-prime distance below which two points are
# treated as coincident with an image location.
_DEGENERATE_RTOL = 8.0 * _EPS


@dataclass(frozen=True)
class ImageCharge:
    """One image: dimensionless weight q_i/q and location, both
    functions of the source point r'."""

    weight: Callable[[Position], float]
    location: Callable[[Position], Position]


@dataclass(frozen=True)
class HomogeneousGreen:
    """Induced Green function as an image sum plus optional extra term."""

    images: tuple[ImageCharge, ...]
    extra: Optional[Callable[[Position, Position], float]]
    geometry: GeometryConfig


def _plane_mirror(rp: Position) -> Position:
    return Position(rp.x, rp.y, -rp.z)


def _sphere_image_location(radius: float, rp: Position) -> Position:
    f = radius * radius / (rp.x * rp.x + rp.y * rp.y + rp.z * rp.z)
    return Position(f * rp.x, f * rp.y, f * rp.z)


def _sphere_image_weight(radius: float, rp: Position) -> float:
    return -radius / rp.norm


def build_green(g: GeometryConfig) -> HomogeneousGreen:
    """Construct the image system for a geometry."""
    if g.kind is GeometryKind.PLANE:
        images = (ImageCharge(lambda rp: -1.0, _plane_mirror),)
        return HomogeneousGreen(images, None, g)

    radius = g.radius
    sphere = ImageCharge(
        lambda rp: _sphere_image_weight(radius, rp),
        lambda rp: _sphere_image_location(radius, rp),
    )

    if g.kind is GeometryKind.GROUNDED_SPHERE:
        return HomogeneousGreen((sphere,), None, g)

    if g.kind is GeometryKind.ISOLATED_SPHERE:
        def neutrality_term(r: Position, rp: Position) -> float:
            return radius / (FOUR_PI * r.norm * rp.norm)

        return HomogeneousGreen((sphere,), neutrality_term, g)

    # Boss hat: sphere image, mirrored sphere image with flipped weight,
    # and the plane image.
    mirrored_sphere = ImageCharge(
        lambda rp: -_sphere_image_weight(radius, rp),
        lambda rp: _sphere_image_location(radius, _plane_mirror(rp)),
    )
    plane_img = ImageCharge(lambda rp: -1.0, _plane_mirror)
    return HomogeneousGreen((sphere, mirrored_sphere, plane_img), None, g)


def g_h(green: HomogeneousGreen, r: Position, r_prime: Position) -> float:
    """Induced Green function G_H(r, r').

    Membership of r and r' in the physical region is the caller's
    responsibility (boundary-condition checks evaluate r on the surface
    on purpose); only coincidence with an image location is rejected.
    """
    total = 0.0
    for img in green.images:
        loc = img.location(r_prime)
        dx = r.x - loc.x
        dy = r.y - loc.y
        dz = r.z - loc.z
        dist = math.sqrt(dx * dx + dy * dy + dz * dz)
        if dist <= _DEGENERATE_RTOL * max(r.norm, loc.norm):
            raise DegenerateSourceError(
                f"field point ({r.x}, {r.y}, {r.z}) coincides with an image location"
            )
        total += img.weight(r_prime) / dist
    total /= FOUR_PI
    if green.extra is not None:
        total += green.extra(r, r_prime)
    return total


def bosshat_radicals(
    radius: float, r: Position, r_prime: Position
) -> tuple[float, float, float]:
    """Cylindrical-form distances (xi, xi_minus, xi_plus) for the boss hat.

    xi        distance from r to the plane image of r'
    xi_minus  |r'|^2 times the distance from r to the sphere image of r'
    xi_plus   |r'|^2 times the distance from r to the mirrored sphere image

    These closed radicals are an independent evaluation path used to
    cross-check the Cartesian image distances.
    """
    rho, phi, z = r.rho, r.phi, r.z
    rhop, phip, zp = r_prime.rho, r_prime.phi, r_prime.z
    s2 = rhop * rhop + zp * zp
    c = math.cos(phip - phi)
    r2 = radius * radius
    cross = 2.0 * rhop * rho * c
    xi = math.sqrt(rhop * rhop + rho * rho + (zp + z) ** 2 - cross)
    xi_minus = math.sqrt(
        r2 * r2 * rhop * rhop + s2 * s2 * rho * rho + (s2 * z - r2 * zp) ** 2 - r2 * s2 * cross
    )
    xi_plus = math.sqrt(
        r2 * r2 * rhop * rhop + s2 * s2 * rho * rho + (s2 * z + r2 * zp) ** 2 - r2 * s2 * cross
    )
    return xi, xi_minus, xi_plus


def g_h_bosshat_cylindrical(radius: float, r: Position, r_prime: Position) -> float:
    """Boss-hat G_H from the three-term cylindrical radical form.

    Equals g_h(build_green(boss_hat), r, r') to floating-point accuracy;
    kept as a verification path because long radicals are easy to
    mistype in either representation.
    """
    xi, xi_minus, xi_plus = bosshat_radicals(radius, r, r_prime)
    sp = math.sqrt(r_prime.rho ** 2 + r_prime.z ** 2)
    return (-1.0 / xi - radius * sp / xi_minus + radius * sp / xi_plus) / FOUR_PI


def surface_deviation(g: GeometryConfig, p: Position) -> float:
    """Distance from p to the conductor surface itself (not the region
    boundary rule): used to validate points claimed to lie on S."""
    if g.kind is GeometryKind.PLANE:
        return abs(p.z)
    if g.kind in (GeometryKind.GROUNDED_SPHERE, GeometryKind.ISOLATED_SPHERE):
        return abs(p.norm - g.radius)
    # Boss hat surface: hemisphere {|p|=R, z>=0} union annulus {z=0, rho>=R}.
    rim = math.hypot(p.rho - g.radius, p.z)
    d_hemisphere = abs(p.norm - g.radius) if p.z >= 0.0 else rim
    d_annulus = abs(p.z) if p.rho >= g.radius else rim
    return min(d_hemisphere, d_annulus)


_SURFACE_MEMBERSHIP_RTOL = 1e-9


def bc_residual(
    green: HomogeneousGreen,
    g: GeometryConfig,
    r_surface: Position,
    r_prime: Position,
) -> float:
    """Boundary-condition residual at a surface point.

    Grounded geometries: the full Green function
    1/(4*pi*|r_s - r'|) + G_H(r_s, r') must vanish on the surface; the
    returned value is that sum.

    Isolated sphere: the surface holds the full Green function at the
    constant 1/(4*pi*|r'|), so its gradient with respect to the source
    point equals -r'/(4*pi*|r'|^3).  The residual is the max-norm of
    (grad' G + r'/(4*pi*|r'|^3)), with the gradient taken by central
    differences componentwise.
    """
    scale = g.radius if g.kind is not GeometryKind.PLANE else max(1.0, r_surface.norm)
    if surface_deviation(g, r_surface) > _SURFACE_MEMBERSHIP_RTOL * scale:
        raise ValueError("r_surface does not lie on the conductor surface")

    if g.kind is not GeometryKind.ISOLATED_SPHERE:
        dx = r_surface.x - r_prime.x
        dy = r_surface.y - r_prime.y
        dz = r_surface.z - r_prime.z
        direct = 1.0 / (FOUR_PI * math.sqrt(dx * dx + dy * dy + dz * dz))
        return direct + g_h(green, r_surface, r_prime)

    def full_green(rp: Position) -> float:
        ddx = r_surface.x - rp.x
        ddy = r_surface.y - rp.y
        ddz = r_surface.z - rp.z
        direct = 1.0 / (FOUR_PI * math.sqrt(ddx * ddx + ddy * ddy + ddz * ddz))
        return direct + g_h(green, r_surface, rp)

    h = 1e-6 * max(r_prime.norm, g.radius)
    rn3 = r_prime.norm ** 3
    target = (
        -r_prime.x / (FOUR_PI * rn3),
        -r_prime.y / (FOUR_PI * rn3),
        -r_prime.z / (FOUR_PI * rn3),
    )
    residual = 0.0
    for axis in range(3):
        step = [0.0, 0.0, 0.0]
        step[axis] = h
        grad = (
            full_green(r_prime.shifted(*step)) - full_green(r_prime.shifted(-step[0], -step[1], -step[2]))
        ) / (2.0 * h)
        residual = max(residual, abs(grad - target[axis]))
    return residual


def surface_sample(
    g: GeometryConfig, n: int, rng_seed: int, extent: float = 10.0
) -> list[Position]:
    """n deterministic pseudo-random points on the conductor surface.

    Plane: uniform over a disk of the given radius (extent).  Spheres:
    uniform over the full sphere.  Boss hat: hemisphere plus the annulus
    z=0, R < rho <= extent, split proportional to area.  The unbounded
    supports are truncated at extent because boundary-condition
    residuals decay with distance.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(rng_seed)

    def disk(count: int, r_inner: float, r_outer: float) -> list[Position]:
        u = rng.random(count)
        ang = rng.random(count) * (2.0 * math.pi)
        rad = np.sqrt(r_inner**2 + u * (r_outer**2 - r_inner**2))
        return [
            Position(rad[i] * math.cos(ang[i]), rad[i] * math.sin(ang[i]), 0.0)
            for i in range(count)
        ]

    def sphere(count: int, hemisphere: bool) -> list[Position]:
        v = rng.normal(size=(count, 3))
        norms = np.linalg.norm(v, axis=1)
        norms[norms == 0.0] = 1.0   # measure-zero guard
        v = v / norms[:, None] * g.radius
        if hemisphere:
            v[:, 2] = np.abs(v[:, 2])
        return [Position(float(a), float(b), float(c)) for a, b, c in v]

    if g.kind is GeometryKind.PLANE:
        return disk(n, 0.0, extent)
    if g.kind in (GeometryKind.GROUNDED_SPHERE, GeometryKind.ISOLATED_SPHERE):
        return sphere(n, hemisphere=False)

    area_hemisphere = 2.0 * math.pi * g.radius**2
    outer = max(extent, g.radius)
    area_annulus = math.pi * (outer**2 - g.radius**2)
    n_hemisphere = int(round(n * area_hemisphere / (area_hemisphere + area_annulus)))
    n_hemisphere = min(max(n_hemisphere, 1), n)
    points = sphere(n_hemisphere, hemisphere=True)
    if n - n_hemisphere > 0:
        points.extend(disk(n - n_hemisphere, g.radius, outer))
    return points
