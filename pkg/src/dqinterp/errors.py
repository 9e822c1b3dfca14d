"""Exception and warning types shared across the package."""


class DqError(ValueError):
    """Base class for all dqinterp errors."""


class ZeroRealPartError(DqError):
    """Real part has (near-)zero norm; dual norm / normalization undefined."""


class NotUnitError(DqError):
    """Operand violates the unit invariants beyond the allowed tolerance."""


class InvalidAxisError(DqError):
    """Screw axis is not a unit direction with an orthogonal moment."""


class InvalidMatrixError(DqError):
    """Matrix is not a rigid transform (orthonormality / determinant / shape)."""


class DegenerateBlendError(DqError):
    """Blended real part collapsed to zero norm (antipodal real parts)."""


class BetaOutOfRangeError(DqError):
    """Bias factor outside [0, beta_max]."""


class InvalidCountError(DqError):
    """Sample count below the minimum of 2."""


class PoseParseError(DqError):
    """Pose string is not 7 whitespace-separated numbers."""


class TrajectoryFormatError(DqError):
    """Trajectory file bytes violate the version-1 format contract."""


class AntipodalAmbiguityWarning(UserWarning):
    """Relative rotation is within tolerance of a half turn: the geodesic
    between the endpoints is not unique.  A deterministic branch is taken;
    interpolation never fails on this condition."""
