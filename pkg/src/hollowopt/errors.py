"""Exception hierarchy.

Two broad families: validation errors (bad inputs, violated preconditions,
inconsistent state) and I/O errors (missing/corrupt files). The CLI maps
validation errors to exit code 2 and I/O errors to exit code 3.
"""


class HollowOptError(Exception):
    """Base class for all package errors."""


class ValidationError(HollowOptError):
    """Bad input data or violated precondition; CLI exit code 2."""


class IoError(HollowOptError):
    """File-level failure (missing, truncated, corrupt); CLI exit code 3."""


# --- geometry / voxelization ---

class NonWatertight(ValidationError):
    """Mesh has edges not shared by exactly two triangles."""


class DegenerateMesh(ValidationError):
    """Too many zero-area triangles."""


class EmptyResult(ValidationError):
    """Voxelization produced no occupied cell."""


class EmptyMesh(ValidationError):
    """Operation requires a mesh with at least one triangle."""


class EmptyField(ValidationError):
    """Isosurface extraction found no crossing."""


class ShellIntersection(ValidationError):
    """Inner and outer shells intersect; carries the offending triangle pair."""

    def __init__(self, outer_tri: int, inner_tri: int):
        self.outer_tri = outer_tri
        self.inner_tri = inner_tri
        super().__init__(
            f"shell intersection between outer triangle {outer_tri} "
            f"and inner triangle {inner_tri}"
        )


# --- objective / optimization ---

class ZeroMass(ValidationError):
    """Density field carries no mass."""


class EmptySupport(ValidationError):
    """No ground contact: bottom layer is empty both hard and soft."""


class NonFiniteLoss(ValidationError):
    """Loss became NaN/inf during optimization; carries the step index."""

    def __init__(self, step: int, detail: str = ""):
        self.step = step
        super().__init__(f"non-finite loss at step {step}{': ' + detail if detail else ''}")


class ConfigError(ValidationError):
    """Optimization config violates an invariant."""


# --- stability ---

class DegenerateHull(ValidationError):
    """Hull collapsed to a point or segment where a polygon is required."""


class ComOutsideHull(ValidationError):
    """Critical tilt undefined: center of mass projects outside the hull."""


# --- file formats ---

class MalformedFile(IoError):
    """File size or structure inconsistent with its format."""


class ParseError(IoError):
    """Text-format parse failure; carries a line number."""

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")


class BadMagic(IoError):
    """Grid file does not start with the expected magic bytes."""


class BadVersion(IoError):
    """Grid file has an unsupported version."""


class SizeMismatch(IoError):
    """Grid file payload length inconsistent with its declared resolution."""
