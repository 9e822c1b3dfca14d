"""Dual-quaternion rigid-transform interpolation toolkit."""

from .algebra import (ConjugateVariant, DualNumber, DualQuaternion,
                      DualVector, Quaternion, dual_cos, dual_sin)
from .conversions import (Pose, ScrewParameters, dq_to_matrix, dq_to_pose,
                          dq_to_screw, matrix_to_dq, plucker_moment,
                          pose_to_dq, screw_to_dq)
from .errors import (AntipodalAmbiguityWarning, BetaOutOfRangeError,
                     DegenerateBlendError, DqError, InvalidAxisError,
                     InvalidCountError, InvalidMatrixError, NotUnitError,
                     PoseParseError, TrajectoryFormatError, ZeroRealPartError)
from .interpolation import (DEFAULT_BETA_MAX, InterpolationMethod, MethodKind,
                            TrajectoryMetrics, TrajectorySample, dlb, dq_pow,
                            kenlerp, lerp_vec, quat_pow, sample_trajectory,
                            sclerp, sep_lerp, slerp, trajectory_metrics)
from .trajectory_io import (FORMAT_VERSION, TrajectoryFile, format_number,
                            parse_trajectory, serialize_trajectory)

__version__ = "0.1.0"

__all__ = [
    "AntipodalAmbiguityWarning", "BetaOutOfRangeError", "ConjugateVariant",
    "DEFAULT_BETA_MAX", "DegenerateBlendError", "DqError", "DualNumber",
    "DualQuaternion", "DualVector", "FORMAT_VERSION", "InterpolationMethod",
    "InvalidAxisError", "InvalidCountError", "InvalidMatrixError",
    "MethodKind", "NotUnitError", "Pose", "PoseParseError", "Quaternion",
    "ScrewParameters", "TrajectoryFile", "TrajectoryFormatError",
    "TrajectoryMetrics", "TrajectorySample", "ZeroRealPartError", "dlb",
    "dq_pow", "dq_to_matrix", "dq_to_pose", "dq_to_screw", "dual_cos",
    "dual_sin", "format_number", "kenlerp", "lerp_vec", "matrix_to_dq",
    "parse_trajectory", "plucker_moment", "pose_to_dq", "quat_pow",
    "sample_trajectory", "sclerp", "screw_to_dq", "sep_lerp",
    "serialize_trajectory", "slerp", "trajectory_metrics",
]
