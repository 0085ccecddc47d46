"""Exception taxonomy for the vdwsurf library.

The CLI maps these onto exit codes: RegionError (and its subclass
ContactError) exit 3, argument problems exit 2, validation failures
exit 1, unwritable output exits 4.
"""


class VdwError(Exception):
    """Base class for all vdwsurf errors."""


class RegionError(VdwError):
    """Evaluation point lies outside the physical region of the geometry."""


class ContactError(RegionError):
    """Closed form evaluated at or inside contact with the conductor."""


class DegenerateSourceError(VdwError):
    """Field point coincides with an image-charge location."""


class StepUnderflowError(VdwError):
    """Finite-difference step fell below floating-point resolution."""


class ExtrapolationError(VdwError):
    """Finite-dipole extrapolation failed to converge to tolerance."""


class ExpansionWindowError(VdwError):
    """Near-contact expansion requested outside its validity window."""
