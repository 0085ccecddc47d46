"""Command-line front end: single-point energies, parameter sweeps, and
validation reports.

Subcommands
    energy    one configuration, JSON on stdout
    scan      sweep z0 or rho0, CSV to a file
    validate  run invariant suites, text report on stdout

Exit codes: 0 success, 1 failed validation, 2 invalid arguments,
3 region violation (atom on or inside the conductor), 4 unwritable
output. An optional key=value config file mirrors the flags; explicit
flags win. The environment variable VDW_THREADS caps scan parallelism.

Variances are interpreted in cartesian axes (x, y, z) for the plane and
the spheres, and in the local cylindrical frame (radial, azimuthal,
vertical) for the boss hat. Closed-form sphere energies are available
for isotropic variances only.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from .closed import (
    u_bosshat_corrected,
    u_bosshat_expansion3,
    u_grounded_sphere,
    u_isolated_sphere,
    u_plane,
    u_sphere_expansion3,
)
from .errors import RegionError
from .evaluator import energy_numeric
from .geometry import (
    DipoleVariances,
    EnergyResult,
    GeometryConfig,
    GeometryKind,
    Position,
    VarianceFrame,
    surface_distance,
)
from .oracle import extrapolated_energy
from .units import Mode, UnitSystem
from .validate import run_all, run_suite

_GEOMETRY_CHOICES = ("plane", "gsphere", "isphere", "bosshat")
_METHOD_CHOICES = ("closed", "numeric", "oracle")
_SCAN_METHOD_CHOICES = _METHOD_CHOICES + ("expansion3",)

_ISOTROPY_RTOL = 1e-9


def _parse_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


# config keys whose argparse destination differs from the key itself
_CONFIG_DESTS = {"from": "from_value", "to": "to_value"}


def _merge_config(args: argparse.Namespace, fields: dict[str, Callable]) -> None:
    """Fill None-valued argparse fields from the config file; flags win."""
    if getattr(args, "config", None) is None:
        return
    values = _parse_config(args.config)
    unknown = set(values) - set(fields)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    for key, convert in fields.items():
        dest = _CONFIG_DESTS.get(key, key)
        if values.get(key) is not None and getattr(args, dest, None) is None:
            setattr(args, dest, convert(values[key]))


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_variances(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"--variances wants three comma-separated values, got {text!r}")
    m1, m2, m3 = (float(p) for p in parts)
    return (m1, m2, m3)


def _choice(name: str, options: Sequence[str]) -> Callable[[str], str]:
    def convert(text: str) -> str:
        if text not in options:
            raise ValueError(f"{name} must be one of {list(options)}, got {text!r}")
        return text

    return convert


def _resolve_variances(args: argparse.Namespace, frame: VarianceFrame) -> DipoleVariances:
    if args.variances is not None and args.isotropic is not None:
        raise ValueError("give either --variances or --isotropic, not both")
    if args.variances is not None:
        m1, m2, m3 = args.variances
        return DipoleVariances(m1, m2, m3, frame)
    if args.isotropic is not None:
        return DipoleVariances.isotropic(args.isotropic, frame)
    raise ValueError("one of --variances or --isotropic is required")


def _geometry_from_args(kind: str, radius: float) -> GeometryConfig:
    if kind == "plane":
        return GeometryConfig.plane()
    if radius is None or radius <= 0.0:
        raise ValueError(f"--radius > 0 is required for geometry {kind!r}")
    builders = {
        "gsphere": GeometryConfig.grounded_sphere,
        "isphere": GeometryConfig.isolated_sphere,
        "bosshat": GeometryConfig.boss_hat,
    }
    return builders[kind](radius)


def _require_isotropic(v: DipoleVariances) -> float:
    spread = max(v.m1, v.m2, v.m3) - min(v.m1, v.m2, v.m3)
    if spread > _ISOTROPY_RTOL * max(v.total, 1e-300):
        raise ValueError(
            "closed-form sphere energies require isotropic variances; "
            "use --isotropic or --method numeric/oracle"
        )
    return v.total


def _closed_energy(
    g: GeometryConfig,
    variances: DipoleVariances,
    rho0: float,
    z0: float,
    units: UnitSystem,
) -> EnergyResult:
    if g.kind is GeometryKind.PLANE:
        return u_plane(variances, z0, units)
    if g.kind is GeometryKind.BOSS_HAT:
        return u_bosshat_corrected(variances, rho0, z0, g.radius, units)
    total = _require_isotropic(variances)
    center_distance = math.hypot(rho0, z0)
    if g.kind is GeometryKind.GROUNDED_SPHERE:
        return u_grounded_sphere(total, center_distance, g.radius, units)
    return u_isolated_sphere(total, center_distance, g.radius, units)


def _expansion3_energy(
    g: GeometryConfig, variances: DipoleVariances, rho0: float, z0: float, units: UnitSystem
) -> EnergyResult:
    if rho0 != 0.0:
        raise ValueError("--method expansion3 is on-axis only (rho0 = 0)")
    total = _require_isotropic(variances)
    if g.kind is GeometryKind.GROUNDED_SPHERE:
        return u_sphere_expansion3(total, z0, g.radius, units)
    if g.kind is GeometryKind.BOSS_HAT:
        return u_bosshat_expansion3(total, z0, g.radius, units)
    raise ValueError("--method expansion3 needs geometry gsphere or bosshat")


def _point_energy(
    method: str,
    g: GeometryConfig,
    variances: DipoleVariances,
    rho0: float,
    z0: float,
    units: UnitSystem,
) -> EnergyResult:
    position = Position(rho0, 0.0, z0)
    if method == "closed":
        return _closed_energy(g, variances, rho0, z0, units)
    if method == "numeric":
        return energy_numeric(g, variances, position, units=units)
    if method == "oracle":
        return extrapolated_energy(g, variances, position, units=units)
    return _expansion3_energy(g, variances, rho0, z0, units)


_ENERGY_CONFIG_FIELDS: dict[str, Callable] = {
    "geometry": _choice("geometry", _GEOMETRY_CHOICES),
    "radius": float,
    "z0": float,
    "rho0": float,
    "variances": _parse_variances,
    "isotropic": float,
    "units": _choice("units", ("si", "reduced")),
    "method": _choice("method", _METHOD_CHOICES),
}

_SCAN_CONFIG_FIELDS: dict[str, Callable] = {
    "geometry": _choice("geometry", _GEOMETRY_CHOICES),
    "radius": float,
    "z0": float,
    "rho0": float,
    "variances": _parse_variances,
    "isotropic": float,
    "units": _choice("units", ("si", "reduced")),
    "method": _choice("method", _SCAN_METHOD_CHOICES),
    "var": _choice("var", ("z0", "rho0")),
    "from": float,
    "to": float,
    "points": int,
    "log": _parse_bool,
    "normalize": _choice("normalize", ("none", "R3", "a3")),
    "out": str,
}


def cmd_energy(args: argparse.Namespace) -> int:
    _merge_config(args, _ENERGY_CONFIG_FIELDS)
    if args.geometry is None:
        raise ValueError("--geometry is required")
    if args.z0 is None:
        raise ValueError("--z0 is required")
    rho0 = 0.0 if args.rho0 is None else args.rho0
    units_name = args.units or "reduced"
    method = args.method or "closed"
    units = UnitSystem(Mode(units_name))
    g = _geometry_from_args(args.geometry, args.radius)
    frame = (
        VarianceFrame.CYLINDRICAL_LOCAL
        if g.kind is GeometryKind.BOSS_HAT
        else VarianceFrame.CARTESIAN
    )
    variances = _resolve_variances(args, frame)
    result = _point_energy(method, g, variances, rho0, args.z0, units)
    err = result.err_estimate if math.isfinite(result.err_estimate) else None
    payload = {
        "energy": result.value,
        "err_estimate": err,
        "method": result.method.value,
        "units": result.units.value,
        "inputs": {
            "geometry": args.geometry,
            "radius": g.radius,
            "z0": args.z0,
            "rho0": rho0,
            "variances": [variances.m1, variances.m2, variances.m3],
            "variance_frame": variances.frame.value,
            "method": method,
        },
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return 0


def _thread_count() -> int:
    raw = os.environ.get("VDW_THREADS", "")
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("VDW_THREADS must be a positive integer")
    return n


def _normalization(
    kind: str, g: GeometryConfig, rho0: float, z0: float
) -> float:
    if kind == "none":
        return 1.0
    if kind == "R3":
        if g.kind is GeometryKind.PLANE:
            raise ValueError("--normalize R3 is undefined for the plane")
        return g.radius**3
    return surface_distance(g, Position(rho0, 0.0, z0)) ** 3


def cmd_scan(args: argparse.Namespace) -> int:
    _merge_config(args, _SCAN_CONFIG_FIELDS)
    for name, flag in (
        ("geometry", "--geometry"),
        ("from_value", "--from"),
        ("to_value", "--to"),
        ("out", "--out"),
    ):
        if getattr(args, name, None) is None:
            raise ValueError(f"{flag} is required")
    lo = args.from_value
    hi = args.to_value
    var = args.var or "z0"
    points = args.points if args.points is not None else 50
    log = bool(args.log)
    normalize = args.normalize or "none"
    units_name = args.units or "reduced"
    method = args.method or "closed"
    rho0_fixed = 0.0 if args.rho0 is None else args.rho0
    z0_fixed = args.z0

    if points < 1:
        raise ValueError("--points must be >= 1")
    if var == "rho0" and z0_fixed is None:
        raise ValueError("--z0 is required when sweeping rho0")

    units = UnitSystem(Mode(units_name))
    g = _geometry_from_args(args.geometry, args.radius)
    frame = (
        VarianceFrame.CYLINDRICAL_LOCAL
        if g.kind is GeometryKind.BOSS_HAT
        else VarianceFrame.CARTESIAN
    )
    variances = _resolve_variances(args, frame)

    if log:
        if lo <= 0.0 or hi <= 0.0:
            raise ValueError("--log needs strictly positive --from/--to")
        grid = np.geomspace(lo, hi, points)
    else:
        grid = np.linspace(lo, hi, points)
    xs = sorted(float(x) for x in grid)

    def evaluate(x: float) -> tuple[float, float, str]:
        rho0 = rho0_fixed if var == "z0" else x
        z0 = x if var == "z0" else z0_fixed
        result = _point_energy(method, g, variances, rho0, z0, units)
        scale = _normalization(normalize, g, rho0, z0)
        return (result.value * scale, result.err_estimate * scale, result.method.value)

    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(evaluate, xs))
    else:
        rows = [evaluate(x) for x in xs]

    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("x,value,err,method\n")
            for x, (value, err, method_name) in zip(xs, rows):
                fh.write(f"{x:.17g},{value:.17g},{err:.17g},{method_name}\n")
    except OSError as exc:
        sys.stderr.write(f"vdwsurf: cannot write {args.out!r}: {exc}\n")
        return 4
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else 0
    suite = args.suite or "all"
    reports = run_all(seed=seed) if suite == "all" else [run_suite(suite, seed=seed)]
    for report in reports:
        for line in report.lines():
            sys.stdout.write(line + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _add_common_energy_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--geometry", choices=_GEOMETRY_CHOICES, default=None)
    sub.add_argument("--radius", type=float, default=None, help="conductor radius R")
    sub.add_argument("--z0", type=float, default=None, help="height above the plane / sphere center")
    sub.add_argument("--rho0", type=float, default=None, help="axial distance (default 0)")
    sub.add_argument(
        "--variances",
        type=_parse_variances,
        default=None,
        metavar="M1,M2,M3",
        help="dipole variances along the three local axes",
    )
    sub.add_argument(
        "--isotropic", type=float, default=None, metavar="TOTAL", help="isotropic total variance"
    )
    sub.add_argument("--units", choices=("si", "reduced"), default=None)
    sub.add_argument("--config", default=None, help="key=value file mirroring the flags; flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vdwsurf",
        description="Dispersion energies near grounded and isolated conductor surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_energy = sub.add_parser("energy", help="single-point energy as JSON")
    _add_common_energy_flags(p_energy)
    p_energy.add_argument("--method", choices=_METHOD_CHOICES, default=None)
    p_energy.set_defaults(handler=cmd_energy)

    p_scan = sub.add_parser("scan", help="sweep z0 or rho0 into a CSV file")
    _add_common_energy_flags(p_scan)
    p_scan.add_argument("--method", choices=_SCAN_METHOD_CHOICES, default=None)
    p_scan.add_argument("--var", choices=("z0", "rho0"), default=None)
    p_scan.add_argument("--from", dest="from_value", type=float, default=None)
    p_scan.add_argument("--to", dest="to_value", type=float, default=None)
    p_scan.add_argument("--points", type=int, default=None)
    p_scan.add_argument("--log", action="store_const", const=True, default=None)
    p_scan.add_argument("--normalize", choices=("none", "R3", "a3"), default=None)
    p_scan.add_argument("--out", default=None, metavar="FILE")
    p_scan.set_defaults(handler=cmd_scan)

    p_validate = sub.add_parser("validate", help="run invariant suites")
    p_validate.add_argument(
        "--suite", choices=("bc", "symmetry", "limits", "threeway", "all"), default=None
    )
    p_validate.add_argument("--seed", type=int, default=None)
    p_validate.set_defaults(handler=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except RegionError as exc:
        sys.stderr.write(f"vdwsurf: region violation: {exc}\n")
        return 3
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"vdwsurf: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
