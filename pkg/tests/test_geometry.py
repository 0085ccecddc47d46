import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vdwsurf.geometry import (
    AtomSpec,
    DipoleVariances,
    GeometryConfig,
    GeometryKind,
    Position,
    VarianceFrame,
    local_axes,
    physical_region,
    surface_distance,
    to_cylindrical,
    variances_of,
)
from vdwsurf.units import UnitSystem

coords = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@given(x=coords, y=coords, z=coords)
def test_cylindrical_round_trip(x, y, z):
    p = Position(x, y, z)
    rho, phi, zz = to_cylindrical(p)
    q = Position.from_cylindrical(rho, phi, zz)
    scale = max(1.0, p.norm)
    assert math.hypot(q.x - x, q.y - y) <= 1e-12 * scale
    assert q.z == z


def test_phi_conventions():
    assert Position(0.0, 0.0, 1.0).phi == 0.0
    assert Position(1.0, 0.0, 0.0).phi == 0.0
    assert Position(-1.0, 0.0, 0.0).phi == pytest.approx(math.pi)
    assert Position(0.0, -1.0, 0.0).phi == pytest.approx(-math.pi / 2)
    # range is (-pi, pi]
    assert -math.pi < Position(-1.0, -1e-300, 0.0).phi <= math.pi


def test_physical_region_examples():
    plane = GeometryConfig.plane()
    assert physical_region(plane, Position(0, 0, 1e-9))
    assert not physical_region(plane, Position(5, 5, 0.0))
    assert not physical_region(plane, Position(0, 0, -1.0))

    sphere = GeometryConfig.grounded_sphere(2.0)
    assert physical_region(sphere, Position(0, 0, -2.5))
    assert not physical_region(sphere, Position(0, 0, 1.5))
    assert not physical_region(sphere, Position(2.0, 0, 0))

    hat = GeometryConfig.boss_hat(1.0)
    assert physical_region(hat, Position(0, 0, 1.5))
    assert physical_region(hat, Position(2.0, 0, 0.1))
    assert not physical_region(hat, Position(0, 0, 0.5))      # inside the boss
    assert not physical_region(hat, Position(2.0, 0, -0.1))   # below the plane


def test_surface_distance_examples():
    assert surface_distance(GeometryConfig.plane(), Position(3, 4, 0.5)) == 0.5
    assert surface_distance(GeometryConfig.grounded_sphere(1.0), Position(0, 0, 2.5)) == 1.5
    hat = GeometryConfig.boss_hat(1.0)
    assert surface_distance(hat, Position(0, 0, 3.0)) == 2.0       # sphere is nearest
    assert surface_distance(hat, Position(5.0, 0, 0.25)) == 0.25   # plane is nearest


def test_geometry_config_validation():
    with pytest.raises(ValueError):
        GeometryConfig(GeometryKind.GROUNDED_SPHERE, 0.0)
    with pytest.raises(ValueError):
        GeometryConfig(GeometryKind.BOSS_HAT, -1.0)
    assert GeometryConfig.plane().radius == 0.0


def test_variances_validation_and_total():
    with pytest.raises(ValueError):
        DipoleVariances(-1.0, 0.0, 0.0)
    v = DipoleVariances(0.1, 0.2, 0.3)
    assert v.total == pytest.approx(0.6)


@given(total=st.floats(1e-12, 1e12))
def test_isotropic_thirds(total):
    v = DipoleVariances.isotropic(total)
    assert v.m1 == v.m2 == v.m3
    assert v.m1 == total / 3.0


def test_atom_spec_dominant_transition():
    u = UnitSystem.reduced()
    atom = AtomSpec.from_dominant_transition(alpha=2.0, omega10=3.0, units=u)
    # <d^2> = (3/2) hbar omega alpha
    assert variances_of(atom).total == pytest.approx(9.0)
    assert atom.alpha == 2.0 and atom.omega10 == 3.0


def test_variances_of_passthrough():
    v = DipoleVariances.isotropic(1.0)
    assert variances_of(v) is v
    assert variances_of(AtomSpec(variances=v)) is v


def test_local_axes_cylindrical():
    p = Position(1.0, 1.0, 0.5)
    e_rho, e_phi, e_z = local_axes(VarianceFrame.CYLINDRICAL_LOCAL, p)
    s = math.sqrt(0.5)
    assert e_rho == pytest.approx((s, s, 0.0))
    assert e_phi == pytest.approx((-s, s, 0.0))
    assert e_z == (0.0, 0.0, 1.0)
    # orthonormality
    assert sum(a * b for a, b in zip(e_rho, e_phi)) == pytest.approx(0.0, abs=1e-15)


def test_local_axes_cartesian_ignores_position():
    axes = local_axes(VarianceFrame.CARTESIAN, Position(5, -2, 7))
    assert axes == ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
