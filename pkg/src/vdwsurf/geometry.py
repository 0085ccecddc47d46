"""Geometry primitives: positions, conductor configurations, dipole data.

Positions are stored Cartesian; cylindrical coordinates are derived
views.  The axisymmetric closed forms are cylindrical, but the
differentiation engine works along Cartesian axes, so Cartesian storage
keeps the hot path simple.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .units import Mode, UnitSystem


class GeometryKind(enum.Enum):
    PLANE = "plane"
    GROUNDED_SPHERE = "gsphere"
    ISOLATED_SPHERE = "isphere"
    BOSS_HAT = "bosshat"


@dataclass(frozen=True)
class Position:
    x: float
    y: float
    z: float

    @property
    def rho(self) -> float:
        return math.hypot(self.x, self.y)

    @property
    def phi(self) -> float:
        # Convention: phi = 0 on the axis, range (-pi, pi].
        if self.x == 0.0 and self.y == 0.0:
            return 0.0
        v = math.atan2(self.y, self.x)
        return math.pi if v <= -math.pi else v

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    @classmethod
    def from_cylindrical(cls, rho: float, phi: float, z: float) -> "Position":
        return cls(rho * math.cos(phi), rho * math.sin(phi), z)

    def shifted(self, dx: float = 0.0, dy: float = 0.0, dz: float = 0.0) -> "Position":
        return Position(self.x + dx, self.y + dy, self.z + dz)


def to_cylindrical(p: Position) -> tuple[float, float, float]:
    """(rho, phi, z) view of a Cartesian position; phi = 0 on the axis."""
    return (p.rho, p.phi, p.z)


@dataclass(frozen=True)
class GeometryConfig:
    kind: GeometryKind
    radius: float = 0.0   # conductor radius; unused for PLANE

    def __post_init__(self) -> None:
        if self.radius < 0.0:
            raise ValueError("radius must be >= 0")
        if self.kind is not GeometryKind.PLANE and not self.radius > 0.0:
            raise ValueError(f"{self.kind.value} requires radius > 0")

    @classmethod
    def plane(cls) -> "GeometryConfig":
        return cls(GeometryKind.PLANE)

    @classmethod
    def grounded_sphere(cls, radius: float) -> "GeometryConfig":
        return cls(GeometryKind.GROUNDED_SPHERE, radius)

    @classmethod
    def isolated_sphere(cls, radius: float) -> "GeometryConfig":
        return cls(GeometryKind.ISOLATED_SPHERE, radius)

    @classmethod
    def boss_hat(cls, radius: float) -> "GeometryConfig":
        return cls(GeometryKind.BOSS_HAT, radius)


def physical_region(g: GeometryConfig, p: Position) -> bool:
    """True if p lies strictly in the vacuum region outside the conductor."""
    if g.kind is GeometryKind.PLANE:
        return p.z > 0.0
    if g.kind in (GeometryKind.GROUNDED_SPHERE, GeometryKind.ISOLATED_SPHERE):
        return p.norm > g.radius
    return p.z > 0.0 and p.norm > g.radius


def surface_distance(g: GeometryConfig, p: Position) -> float:
    """Distance from p to the conductor; positive inside the physical region."""
    if g.kind is GeometryKind.PLANE:
        return p.z
    if g.kind in (GeometryKind.GROUNDED_SPHERE, GeometryKind.ISOLATED_SPHERE):
        return p.norm - g.radius
    return min(p.z, p.norm - g.radius)


class VarianceFrame(enum.Enum):
    CARTESIAN = "cartesian"
    CYLINDRICAL_LOCAL = "cylindrical_local"


@dataclass(frozen=True)
class DipoleVariances:
    """Diagonal dipole-moment second moments <d_1^2>, <d_2^2>, <d_3^2>.

    In the CARTESIAN frame the components are (x, y, z); in
    CYLINDRICAL_LOCAL they are (rho, phi, z) at the atom's azimuth.
    Off-diagonal moments vanish in the chosen basis.
    """

    m1: float
    m2: float
    m3: float
    frame: VarianceFrame = VarianceFrame.CARTESIAN

    def __post_init__(self) -> None:
        if self.m1 < 0.0 or self.m2 < 0.0 or self.m3 < 0.0:
            raise ValueError("dipole variances must be >= 0")

    @property
    def total(self) -> float:
        return self.m1 + self.m2 + self.m3

    @classmethod
    def isotropic(
        cls, total: float, frame: VarianceFrame = VarianceFrame.CARTESIAN
    ) -> "DipoleVariances":
        third = total / 3.0   # exact thirds by construction
        return cls(third, third, third, frame)


def local_axes(
    frame: VarianceFrame, p: Position
) -> tuple[tuple[float, float, float], ...]:
    """Unit vectors the three variance components refer to at position p."""
    if frame is VarianceFrame.CYLINDRICAL_LOCAL:
        ph = p.phi
        c, s = math.cos(ph), math.sin(ph)
        return ((c, s, 0.0), (-s, c, 0.0), (0.0, 0.0, 1.0))
    return ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))


@dataclass(frozen=True)
class AtomSpec:
    """Atomic dipole data; optionally backed by a dominant transition."""

    variances: DipoleVariances
    alpha: float | None = None     # static polarizability
    omega10: float | None = None   # dominant transition angular frequency

    @classmethod
    def isotropic(cls, total: float) -> "AtomSpec":
        return cls(DipoleVariances.isotropic(total))

    @classmethod
    def from_dominant_transition(
        cls, alpha: float, omega10: float, units: UnitSystem
    ) -> "AtomSpec":
        # <d^2> = (3/2) * hbar * omega10 * alpha, exact by construction.
        d2 = 1.5 * units.hbar * omega10 * alpha
        return cls(DipoleVariances.isotropic(d2), alpha=alpha, omega10=omega10)


def variances_of(atom: "AtomSpec | DipoleVariances") -> DipoleVariances:
    """Accept either an AtomSpec or bare DipoleVariances."""
    if isinstance(atom, AtomSpec):
        return atom.variances
    return atom


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    NUMERIC_EZ = "numeric_ez"
    ORACLE = "oracle"
    EXPANSION3 = "expansion3"


@dataclass(frozen=True)
class EnergyResult:
    """A single energy value with its numeric error estimate.

    value is in J (SI mode) or dimensionless (reduced mode);
    err_estimate is absolute, 0 for exact closed forms.
    """

    value: float
    err_estimate: float
    method: Method
    units: Mode
